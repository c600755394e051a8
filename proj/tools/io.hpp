#pragma once

#include "wmsmooth/families.hpp"
#include "wmsmooth/polytope.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmsmooth::cli {

using nlohmann::json;

// One parsed problem document.  Commands pick the pieces they need; missing
// pieces stay unset and are reported by the command, not the parser.
struct ProblemSpec {
  std::optional<GroupDatum> group;
  std::optional<std::vector<IVec>> generators;  // monoid.generators
  std::optional<std::vector<QVec>> vertices;    // polytope.vertices
  std::optional<std::vector<IVec>> lattice;     // lattice.generators
  std::vector<LocalModel> local_models;
};

// Throws Error(InvalidInput) on schema violations; exactness is preserved by
// accepting integers as JSON numbers or decimal strings and rationals as
// "p/q" strings.  Floating-point tokens are rejected.
ProblemSpec parse_problem(const json& doc);

// Inverse of parse_problem up to canonicalization; the echo embedded in
// every structured report, so a report is a self-contained certificate.
json problem_json(const ProblemSpec& spec);

Int int_of(const json& v);
Rat rat_of(const json& v);
json json_of(const Int& x);
std::string rat_str(const Rat& x);

json json_of(const IVec& v);
json json_of(const QVec& v);
json json_of(const std::vector<IVec>& vs);

json group_json(const GroupDatum& g);
json sphroot_json(const SphericalRoot& s);
json monoid_json(const WeightMonoid& m);
json verdict_json(const Verdict& v);
json pair_report_json(const PolytopeReport& r);
json family_entry_json(const FamilyEntry& e);

// Single-line renderings for the text format.
std::string group_str(const GroupDatum& g);
std::string gens_str(const std::vector<IVec>& vs);
std::string nodes_str(const std::vector<int>& nodes);
std::string sphroot_str(const SphericalRoot& s);

}  // namespace wmsmooth::cli
