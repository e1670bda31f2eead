#pragma once

#include <optional>
#include <string>
#include <vector>

#include "albertson/rational.hpp"

namespace albertson {

enum class Rule {
  TrivialDegree,
  Dirac,
  Gallai,
  KostochkaStiebitz,
  Euler,
  Prtt73,
  Prtt3,
  Prtt4,
  BorodinPlus1,
  CrossingLemma64,
  CrossingLemma311,
};

const char *rule_name(Rule r);

/// value = slope * n + intercept, with n the vertex count.
struct LinearForm {
  Rational slope;
  Rational intercept;
  Rational at(long long n) const { return slope * n + intercept; }
};

/// A certified lower bound together with the rule that produced it and the
/// hypotheses that rule needed.
struct BoundValue {
  Rational value;
  Rule rule = Rule::TrivialDegree;
  std::vector<std::string> assumptions;
};

/// Guy's formula (1/4) floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2).
long long guy_f(long long n);

/// cr(K_n) where it is actually proven (n <= 12); throws for larger n
/// rather than returning the conjectural value.
long long known_cr_complete(int n);

/// Best lower bound on the edge count of an r-critical graph on n vertices:
/// max of the trivial degree bound, Dirac, Gallai (n = r+p, 2 <= p <= r-2)
/// and Kostochka-Stiebitz (n >= r+2, n != 2r-1). n = r+1 is rejected: no
/// r-critical graph has r+1 vertices.
BoundValue min_edges_critical(int r, long long n, bool assume_not_complete);

/// Integer crossing-number lower bound: ceiling of the best of
///   m - 3n + 6,  (7/3)m - (25/3)(n-2),  3m - (35/3)(n-2),  4m - (103/6)(n-2)
/// and, when enable_borodin (needs chi >= 7), m - 3n + 7; clamped at 0.
BoundValue cr_lower_linear(long long n, long long m, bool enable_borodin = false);

/// Crossing Lemma bounds: m^3 / 31.1 n^2 when m >= (103/16) n, else
/// m^3 / 64 n^2 when m >= 4n, else not applicable.
std::optional<BoundValue> cr_lower_crossing_lemma(long long n, long long m);

/// Least integer bound chi <= b implied by chi <= 1 + 4 cr^(1/4), decided by
/// exact fourth-power comparison: the least b with (b-1)^4 >= 256 c.
struct ChiUpperBound {
  long long bound = 1;
  std::vector<std::string> assumptions;
};
ChiUpperBound chi_upper_from_cr(const Int &c);

/// Where each of the four crossing inequalities is the best one, as exact
/// intervals for m/(n-2).
struct ApplicabilityRange {
  Rule rule;
  Rational lo;                 // m/(n-2) >= lo
  std::optional<Rational> hi;  // m/(n-2) <= hi when present
};
std::vector<ApplicabilityRange> best_applicability_ranges();
/// Rules whose stated range contains (n, m); boundary ties report both.
std::vector<Rule> best_rules_for(long long n, long long m);

// Per-rule linear forms in n for the edge bounds, used by the case verifier.
LinearForm trivial_degree_form(int r);
LinearForm dirac_form(int r);
LinearForm kostochka_stiebitz_form(int r);
LinearForm gallai_form(int r, int p);

/// cr >= m_coeff * m - n_coeff * n + constant.
struct CrossingRule {
  Rule rule;
  Rational m_coeff;
  Rational n_coeff;
  Rational constant;
  Rational at(long long n, const Rational &m) const { return m_coeff * m - n_coeff * n + constant; }
};
std::vector<CrossingRule> crossing_rules(bool include_borodin);

/// Substitutes m >= edge_lb(n) into a crossing rule:
/// (a*m_coeff - n_coeff) n + (b*m_coeff + constant).
LinearForm compose(const CrossingRule &cr, const LinearForm &edge_lb);

}  // namespace albertson
