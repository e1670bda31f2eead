#pragma once

#include <json.hpp>

#include "albertson/census.hpp"
#include "albertson/coloring.hpp"
#include "albertson/drawings.hpp"
#include "albertson/verifier.hpp"

namespace albertson {

// All reports serialize with object keys sorted (nlohmann default) and
// rationals rendered as exact "p/q" strings, so identical inputs yield
// byte-identical output.
nlohmann::json to_json(const Rational &q);
nlohmann::json to_json(const LinearForm &f);
nlohmann::json to_json(const BoundValue &b);
nlohmann::json to_json(const GraphAudit &a, const Graph &g);
nlohmann::json to_json(const CaseRecord &c);
nlohmann::json to_json(const AlbertsonReport &r);
nlohmann::json to_json(const LargeNReport &r);
nlohmann::json to_json(const CensusReport &r);
nlohmann::json to_json(const ExcessAuditReport &r);
nlohmann::json to_json(const SubdivisionCertificate &c);
nlohmann::json to_json(const GraphAlbertsonAudit &a, const std::string &graph6);
nlohmann::json to_json(const Point &p);
nlohmann::json to_json(const Drawing &d);
nlohmann::json to_json(const CrossingCount &c);
nlohmann::json to_json(const ValidationResult &v);

Drawing drawing_from_json(const nlohmann::json &j);

}  // namespace albertson
