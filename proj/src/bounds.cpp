#include "albertson/bounds.hpp"

#include <stdexcept>

namespace albertson {

const char *rule_name(Rule r) {
  switch (r) {
    case Rule::TrivialDegree: return "TRIVIAL_DEGREE";
    case Rule::Dirac: return "DIRAC";
    case Rule::Gallai: return "GALLAI";
    case Rule::KostochkaStiebitz: return "KOSTOCHKA_STIEBITZ";
    case Rule::Euler: return "EULER";
    case Rule::Prtt73: return "PRTT_7_3";
    case Rule::Prtt3: return "PRTT_3";
    case Rule::Prtt4: return "PRTT_4";
    case Rule::BorodinPlus1: return "BORODIN_PLUS1";
    case Rule::CrossingLemma64: return "CROSSING_LEMMA_64";
    case Rule::CrossingLemma311: return "CROSSING_LEMMA_31_1";
  }
  return "?";
}

long long guy_f(long long n) {
  if (n < 0) throw std::invalid_argument("guy_f: n must be nonnegative");
  if (n > 100000) throw std::overflow_error("guy_f: n too large for 64-bit result");
  const long long a = n / 2, b = (n - 1) / 2, c = (n - 2) / 2, d = (n - 3) / 2;
  if (n < 3) return 0;
  return a * b * c * d / 4;  // a*c and b*d each contain an even factor
}

long long known_cr_complete(int n) {
  if (n < 1 || n > 12)
    throw std::out_of_range("cr(K_n) is only proven for 1 <= n <= 12 (got n=" +
                            std::to_string(n) + ")");
  return guy_f(n);
}

LinearForm trivial_degree_form(int r) { return {Rational(r - 1, 2), Rational(0)}; }
LinearForm dirac_form(int r) { return {Rational(r - 1, 2), Rational(r - 3, 2)}; }
LinearForm kostochka_stiebitz_form(int r) { return {Rational(r - 1, 2), Rational(r - 3)}; }
LinearForm gallai_form(int r, int p) {
  return {Rational(r - 1, 2), Rational(static_cast<long long>(p) * r - static_cast<long long>(p) * p - 2, 2)};
}

BoundValue min_edges_critical(int r, long long n, bool assume_not_complete) {
  if (r < 3) throw std::invalid_argument("min_edges_critical: r must be >= 3");
  if (n < r) throw std::invalid_argument("min_edges_critical: n must be >= r");
  if (n == r + 1)
    throw std::invalid_argument("min_edges_critical: no r-critical graph has r+1 vertices");

  BoundValue best;
  best.rule = Rule::TrivialDegree;
  best.value = trivial_degree_form(r).at(n);
  best.assumptions = {"G is r-critical"};

  auto consider = [&](Rule rule, const LinearForm &f, std::vector<std::string> assumptions) {
    Rational v = f.at(n);
    if (v > best.value) {
      best.value = v;
      best.rule = rule;
      best.assumptions = std::move(assumptions);
    }
  };

  if (assume_not_complete)
    consider(Rule::Dirac, dirac_form(r), {"G is r-critical", "G is not complete"});
  const long long p = n - r;
  if (assume_not_complete && p >= 2 && p <= r - 2)
    consider(Rule::Gallai, gallai_form(r, static_cast<int>(p)),
             {"G is r-critical", "G is not complete", "r+2 <= n <= 2r-2"});
  if (n >= r + 2 && n != 2 * static_cast<long long>(r) - 1)
    consider(Rule::KostochkaStiebitz, kostochka_stiebitz_form(r),
             {"G is r-critical", "n >= r+2", "n != 2r-1"});
  return best;
}

std::vector<CrossingRule> crossing_rules(bool include_borodin) {
  std::vector<CrossingRule> rules = {
      {Rule::Euler, Rational(1), Rational(3), Rational(6)},
      {Rule::Prtt73, Rational(7, 3), Rational(25, 3), Rational(50, 3)},
      {Rule::Prtt3, Rational(3), Rational(35, 3), Rational(70, 3)},
      {Rule::Prtt4, Rational(4), Rational(103, 6), Rational(103, 3)},
  };
  if (include_borodin)
    rules.push_back({Rule::BorodinPlus1, Rational(1), Rational(3), Rational(7)});
  return rules;
}

LinearForm compose(const CrossingRule &cr, const LinearForm &edge_lb) {
  return {cr.m_coeff * edge_lb.slope - cr.n_coeff, cr.m_coeff * edge_lb.intercept + cr.constant};
}

BoundValue cr_lower_linear(long long n, long long m, bool enable_borodin) {
  if (n < 3) throw std::invalid_argument("cr_lower_linear: n must be >= 3");
  if (m < 0 || m > n * (n - 1) / 2)
    throw std::invalid_argument("cr_lower_linear: m out of range for n");
  BoundValue best;
  bool have = false;
  Rational best_raw;
  for (const auto &rule : crossing_rules(enable_borodin)) {
    Rational v = rule.at(n, Rational(m));
    if (!have || v > best_raw) {
      have = true;
      best_raw = v;
      best.rule = rule.rule;
    }
  }
  if (best_raw < 0) {
    best_raw = 0;
    best.rule = Rule::Euler;  // vacuous bound, report the base rule
  }
  best.value = Rational(rat_ceil(best_raw));
  if (best.rule == Rule::BorodinPlus1)
    best.assumptions = {"chi(G) >= 7: some edge crosses at least two others"};
  return best;
}

std::optional<BoundValue> cr_lower_crossing_lemma(long long n, long long m) {
  if (n <= 0 || m < 0) return std::nullopt;
  const Rational mm(m), nn(n);
  if (mm >= Rational(103, 16) * nn) {
    BoundValue b;
    b.rule = Rule::CrossingLemma311;
    b.value = mm * mm * mm / (Rational(311, 10) * nn * nn);
    b.assumptions = {"m >= (103/16) n"};
    return b;
  }
  if (m >= 4 * n) {
    BoundValue b;
    b.rule = Rule::CrossingLemma64;
    b.value = mm * mm * mm / (Rational(64) * nn * nn);
    b.assumptions = {"m >= 4n"};
    return b;
  }
  return std::nullopt;
}

ChiUpperBound chi_upper_from_cr(const Int &c) {
  if (c < 0) throw std::invalid_argument("chi_upper_from_cr: crossing count must be >= 0");
  const Int target = 256 * c;
  // Least t >= 0 with t^4 >= 256 c, by plain binary search.
  Int lo = 0, hi = 1;
  while (hi * hi * hi * hi < target) hi *= 2;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (mid * mid * mid * mid >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  ChiUpperBound out;
  out.bound = to_int64(lo + 1);  // chi <= 1 + 4 c^(1/4) <= 1 + t
  out.assumptions = {"derived from cr(G) >= (chi-1)^4 / 256, proven for chi(G) >= 14"};
  return out;
}

std::vector<ApplicabilityRange> best_applicability_ranges() {
  return {
      {Rule::Euler, Rational(0), Rational(4)},
      {Rule::Prtt73, Rational(4), Rational(5)},
      {Rule::Prtt3, Rational(5), Rational(11, 2)},
      {Rule::Prtt4, Rational(11, 2), std::nullopt},
  };
}

std::vector<Rule> best_rules_for(long long n, long long m) {
  if (n <= 2) throw std::invalid_argument("best_rules_for: need n >= 3");
  const Rational ratio(m, n - 2);
  std::vector<Rule> out;
  for (const auto &range : best_applicability_ranges()) {
    if (ratio >= range.lo && (!range.hi || ratio <= *range.hi)) out.push_back(range.rule);
  }
  return out;
}

}  // namespace albertson
