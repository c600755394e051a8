#include "io.hpp"

#include "wmsmooth/errors.hpp"

#include <cctype>

namespace wmsmooth::cli {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(Errc::InvalidInput, msg); }

bool decimal(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

SimpleType type_of(const std::string& s) {
  if (s.size() == 1) switch (s[0]) {
      case 'A': return SimpleType::A;
      case 'B': return SimpleType::B;
      case 'C': return SimpleType::C;
      case 'D': return SimpleType::D;
      case 'E': return SimpleType::E;
      case 'F': return SimpleType::F;
      case 'G': return SimpleType::G;
      default: break;
    }
  bad("component type must be one of A..G, got \"" + s + "\"");
}

int small_int(const json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<IVec> int_rows(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of integer vectors");
  std::vector<IVec> rows;
  for (const json& r : v) {
    if (!r.is_array()) bad(std::string(what) + " entries must be arrays");
    IVec row;
    for (const json& x : r) row.push_back(int_of(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupDatum parse_group(const json& g) {
  if (!g.is_object()) bad("\"group\" must be an object");
  std::vector<SimpleComponent> comps;
  if (g.contains("components")) {
    const json& cs = g.at("components");
    if (!cs.is_array()) bad("group.components must be an array");
    for (const json& c : cs) {
      const json& t = field(c, "type");
      if (!t.is_string()) bad("component type must be a string");
      comps.push_back({type_of(t.get<std::string>()), small_int(field(c, "rank"), "component rank")});
    }
  }
  int torus = g.contains("torus_rank") ? small_int(g.at("torus_rank"), "torus_rank") : 0;
  return GroupDatum::make(std::move(comps), torus);
}

LocalModel parse_model(const json& m) {
  LocalModel lm;
  lm.vertex = small_int(field(m, "vertex"), "local model vertex");
  lm.target = parse_group(field(m, "target_group"));
  std::vector<IVec> rows = int_rows(field(m, "matrix"), "local model matrix");
  if (rows.empty() || rows.front().empty()) bad("local model matrix must be nonempty");
  for (const IVec& r : rows)
    if (r.size() != rows.front().size()) bad("local model matrix rows differ in length");
  lm.matrix = IMat::from_rows(rows, static_cast<int>(rows.front().size()));
  const json& rc = field(m, "root_correspondence");
  if (!rc.is_array()) bad("root_correspondence must be an array of [target, source] pairs");
  for (const json& p : rc) {
    if (!p.is_array() || p.size() != 2) bad("root_correspondence entries must be pairs");
    lm.root_correspondence.emplace_back(small_int(p.at(0), "correspondence node"),
                                        small_int(p.at(1), "correspondence node"));
  }
  return lm;
}

}  // namespace

Int int_of(const json& v) {
  if (v.is_number_integer()) return Int(v.get<long>());
  if (v.is_number_unsigned()) return Int(std::to_string(v.get<unsigned long long>()), 10);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!decimal(s)) bad("not an integer: \"" + s + "\"");
    return Int(s, 10);
  }
  if (v.is_number_float()) bad("floating point numbers are not accepted; use integers or \"p/q\" strings");
  bad("expected an integer, got " + v.dump());
}

Rat rat_of(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (!decimal(s)) bad("not a rational: \"" + s + "\"");
      return Rat(Int(s, 10));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!decimal(num) || !decimal(den)) bad("not a rational: \"" + s + "\"");
    Int q(den, 10);
    if (q == 0) bad("zero denominator in \"" + s + "\"");
    Rat r(Int(num, 10));
    r /= Rat(q);
    return r;
  }
  return Rat(int_of(v));
}

json json_of(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

std::string rat_str(const Rat& x) { return x.get_str(); }

json json_of(const IVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(json_of(x));
  return a;
}

json json_of(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

json json_of(const std::vector<IVec>& vs) {
  json a = json::array();
  for (const IVec& v : vs) a.push_back(json_of(v));
  return a;
}

json group_json(const GroupDatum& g) {
  json comps = json::array();
  for (const SimpleComponent& c : g.components)
    comps.push_back({{"type", std::string(1, type_letter(c.type))}, {"rank", c.rank}});
  return {{"components", comps}, {"torus_rank", g.torus_rank}};
}

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) bad("input document must be a JSON object");
  ProblemSpec spec;
  if (doc.contains("group")) spec.group = parse_group(doc.at("group"));
  if (doc.contains("monoid"))
    spec.generators = int_rows(field(doc.at("monoid"), "generators"), "monoid.generators");
  if (doc.contains("lattice"))
    spec.lattice = int_rows(field(doc.at("lattice"), "generators"), "lattice.generators");
  if (doc.contains("polytope")) {
    const json& vs = field(doc.at("polytope"), "vertices");
    if (!vs.is_array()) bad("polytope.vertices must be an array");
    std::vector<QVec> verts;
    for (const json& row : vs) {
      if (!row.is_array()) bad("polytope vertices must be arrays of rationals");
      QVec v;
      for (const json& x : row) v.push_back(rat_of(x));
      verts.push_back(std::move(v));
    }
    spec.vertices = std::move(verts);
  }
  if (doc.contains("local_models")) {
    const json& ms = doc.at("local_models");
    if (!ms.is_array()) bad("local_models must be an array");
    for (const json& m : ms) spec.local_models.push_back(parse_model(m));
  }
  return spec;
}

json problem_json(const ProblemSpec& spec) {
  json doc = json::object();
  if (spec.group) doc["group"] = group_json(*spec.group);
  if (spec.generators) doc["monoid"] = {{"generators", json_of(*spec.generators)}};
  if (spec.lattice) doc["lattice"] = {{"generators", json_of(*spec.lattice)}};
  if (spec.vertices) {
    json vs = json::array();
    for (const QVec& v : *spec.vertices) vs.push_back(json_of(v));
    doc["polytope"] = {{"vertices", vs}};
  }
  if (!spec.local_models.empty()) {
    json ms = json::array();
    for (const LocalModel& lm : spec.local_models) {
      json rc = json::array();
      for (const auto& [t, s] : lm.root_correspondence) rc.push_back({t, s});
      ms.push_back({{"vertex", lm.vertex},
                    {"target_group", group_json(lm.target)},
                    {"matrix", json_of(lm.matrix.transposed().columns())},
                    {"root_correspondence", rc}});
    }
    doc["local_models"] = ms;
  }
  return doc;
}

json sphroot_json(const SphericalRoot& s) {
  json coeffs = json::array();
  for (const Int& c : s.coeffs) coeffs.push_back(json_of(c));
  return {{"pattern", s.pattern}, {"nodes", s.nodes}, {"coeffs", coeffs}, {"weight", json_of(s.weight)}};
}

json monoid_json(const WeightMonoid& m) {
  return {{"generators", json_of(m.generators)},
          {"lattice_basis", json_of(m.lattice.basis.columns())},
          {"rank", m.rank()},
          {"sp", m.sp},
          {"normal", m.is_normal()},
          {"g_saturated", m.is_G_saturated()}};
}

json verdict_json(const Verdict& v) {
  json sig = json::array(), trip = json::array();
  for (const SphericalRoot& s : v.sigma_n) sig.push_back(sphroot_json(s));
  for (const SphericalRoot& s : v.triple_sigma) trip.push_back(sphroot_json(s));
  json hyp = json::array();
  for (const auto& [name, holds] : v.hypotheses) hyp.push_back({name, holds});
  json out = {{"outcome", outcome_name(v.outcome)}, {"route", route_name(v.route)},
              {"reason", v.reason},                 {"sigma_n", sig},
              {"sp", v.sp},                         {"s_gamma", v.s_gamma},
              {"triple_sigma", trip},               {"hypotheses", hyp}};
  if (v.family)
    out["family"] = {{"id", v.family->id},
                     {"a", json_of(v.family->a)},
                     {"b", json_of(v.family->b)},
                     {"c", json_of(v.family->c)}};
  return out;
}

json pair_report_json(const PolytopeReport& r) {
  json verts = json::array();
  for (const VertexReport& vr : r.vertices)
    verts.push_back({{"vertex", vr.vertex},
                     {"levi", vr.levi},
                     {"monoid", monoid_json(vr.gamma)},
                     {"lattice_matches", vr.lattice_matches},
                     {"verdict", verdict_json(vr.verdict)}});
  return {{"overall", pair_outcome_name(r.overall)},
          {"global_route", r.global_route},
          {"reflective", r.reflective},
          {"reflective_why", r.reflective_why},
          {"delzant", r.delzant},
          {"vertices", verts}};
}

json family_entry_json(const FamilyEntry& e) {
  return {{"label", e.label},
          {"in_family", e.in_family},
          {"lattice_generators", json_of(e.lattice_generators)},
          {"generators", json_of(e.monoid.generators)},
          {"expected_sigma", json_of(e.expected_sigma)},
          {"verdict", verdict_json(e.verdict)}};
}

std::string group_str(const GroupDatum& g) {
  std::string s;
  for (size_t c = 0; c < g.components.size(); ++c) {
    if (c) s += " x ";
    s += g.component_label(static_cast<int>(c));
  }
  if (g.torus_rank > 0) {
    if (!s.empty()) s += " x ";
    s += "T" + std::to_string(g.torus_rank);
  }
  return s.empty() ? "trivial group" : s;
}

std::string gens_str(const std::vector<IVec>& vs) {
  if (vs.empty()) return "(none)";
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += " ";
    s += vec_str(vs[i]);
  }
  return s;
}

std::string nodes_str(const std::vector<int>& nodes) {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(nodes[i]);
  }
  return s + "}";
}

std::string sphroot_str(const SphericalRoot& s) {
  std::string out = s.pattern + " on nodes " + nodes_str(s.nodes) + ", weight " + vec_str(s.weight);
  return out;
}

}  // namespace wmsmooth::cli
