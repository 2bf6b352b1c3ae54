#pragma once

#include "gitcomb/binary_form.hpp"
#include "gitcomb/census.hpp"
#include "gitcomb/comb.hpp"
#include "gitcomb/linearization.hpp"
#include "gitcomb/projective.hpp"
#include "gitcomb/stability.hpp"

#include <json.hpp>

#include <string>

namespace gitcomb {

// All numeric I/O is exact rational strings; no floating point anywhere.
// Rational: "p/q" or "p". ProjPoint: ["x","y"]. BinaryForm:
// {"degree": d, "coeffs": [...]}. Linearization: {"n","d","weights"}.
// Wall: {"I": [...], "dI": ...}.
//
// Parse failures throw SchemaError naming the offending field.

class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const ProjPoint& p);
json to_json(const BinaryForm& f);
json to_json(const Linearization& k);
json to_json(const Wall& w);
json to_json(const Configuration& c);
json to_json(const StabilityStatus& s);
json to_json(const DivisorLabel& lbl);
json to_json(const CensusReport& rep);
json to_json(const DegreeTree& t);
json to_json(const Comb& c);
json to_json(const WallCrossingReport& rep);

Rational rational_from_json(const json& j, const std::string& field);
ProjPoint proj_point_from_json(const json& j, const std::string& field);
BinaryForm binary_form_from_json(const json& j, const std::string& field);
Linearization linearization_from_json(const json& j, const std::string& field);
Wall wall_from_json(const json& j, int n, int d, const std::string& field);
Configuration configuration_from_json(const json& j, const std::string& field);
DegreeTree degree_tree_from_json(const json& j, const std::string& field);
Comb comb_from_json(const json& j, const std::string& field);

std::string stability_name(Stability s);
std::string crossing_kind_name(CrossingKind k);

}  // namespace gitcomb
