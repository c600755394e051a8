#include "commands.hpp"

#include "wmsmooth/admissible.hpp"
#include "wmsmooth/errors.hpp"
#include "wmsmooth/linfeas.hpp"
#include "wmsmooth/sl2c.hpp"
#include "wmsmooth/spherical_roots.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>

namespace wmsmooth::cli {

namespace {

const GroupDatum& need_group(const ProblemSpec& spec) {
  if (!spec.group) fail(Errc::InvalidInput, "this command needs a \"group\" section");
  return *spec.group;
}

WeightMonoid need_monoid(const ProblemSpec& spec) {
  if (!spec.generators) fail(Errc::InvalidInput, "this command needs a \"monoid\" section");
  return WeightMonoid::make(need_group(spec), *spec.generators);
}

void emit(const Options& opt, const json& structured, const std::string& text) {
  if (opt.format == "structured")
    std::cout << structured.dump(2) << "\n";
  else
    std::cout << text;
}

int oracle_failed(const std::string& what) {
  std::cerr << "oracle: FAILED: " << what << "\n";
  return 1;
}

std::multiset<std::string> sigma_fingerprint(const std::vector<SphericalRoot>& sigma) {
  std::multiset<std::string> out;
  for (const SphericalRoot& s : sigma) out.insert(sphroot_str(s));
  return out;
}

std::string verdict_text(const Verdict& v, const std::string& indent = "") {
  std::string t;
  t += indent + "outcome: " + outcome_name(v.outcome) + "\n";
  t += indent + "route:   " + route_name(v.route) + "\n";
  if (!v.reason.empty()) t += indent + "reason:  " + v.reason + "\n";
  t += indent + "S^p:     " + nodes_str(v.sp) + "\n";
  if (v.route == Route::GSaturated) t += indent + "S_Gamma: " + nodes_str(v.s_gamma) + "\n";
  if (v.sigma_n.empty()) {
    t += indent + "Sigma^N: (empty)\n";
  } else {
    t += indent + "Sigma^N:\n";
    for (const SphericalRoot& s : v.sigma_n) t += indent + "  " + sphroot_str(s) + "\n";
  }
  if (v.family)
    t += indent + "family:  " + std::to_string(v.family->id) + " (a=" + v.family->a.get_str() +
         ", b=" + v.family->b.get_str() + ", c=" + v.family->c.get_str() + ")\n";
  for (const auto& [name, holds] : v.hypotheses)
    t += indent + (holds ? "  [ok]   " : "  [fail] ") + name + "\n";
  return t;
}

json check_envelope(const ProblemSpec& spec) {
  WeightMonoid m = need_monoid(spec);
  Verdict v = smooth_verdict(m);
  return {{"command", "check"},
          {"input", problem_json(spec)},
          {"result", {{"verdict", verdict_json(v)}, {"monoid", monoid_json(m)}}}};
}

int verdict_exit(Outcome o, const Options& opt) {
  return (o == Outcome::Undecided && opt.strict) ? 3 : 0;
}

// Reports whether some strictly positive combination of the restricted
// coroots of `nodes` pairs nonpositively with every sigma weight; this is
// the defining property of S_Gamma, so it must hold for the computed set.
bool support_set_feasible(const std::vector<int>& nodes, const std::vector<SphericalRoot>& sigma) {
  if (nodes.empty()) return true;
  const int d = static_cast<int>(nodes.size());
  std::vector<AffineRow> rows;
  for (int i = 0; i < d; ++i) {
    IVec e(static_cast<size_t>(d));
    e[static_cast<size_t>(i)] = 1;
    rows.push_back(row_ge(std::move(e), 1));
  }
  for (const SphericalRoot& s : sigma) {
    IVec a(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
      a[static_cast<size_t>(i)] = -s.weight[static_cast<size_t>(nodes[static_cast<size_t>(i)])];
    rows.push_back(row_ge(std::move(a), 0));
  }
  return fm_feasible(d, std::move(rows));
}

Int cone_grade(const RationalCone& c, const IVec& x) {
  Int g = 0;
  for (const IVec& f : c.facets) g += dot(f, x);
  return g;
}

bool generated_by(const RationalCone& cone, const std::vector<IVec>& hb,
                  std::map<IVec, bool>& memo, const IVec& x) {
  if (std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; })) return true;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  bool ok = false;
  const Int gx = cone_grade(cone, x);
  for (const IVec& h : hb) {
    if (cone_grade(cone, h) > gx) continue;
    IVec y = vec_sub(x, h);
    if (!cone.contains(y)) continue;
    if (generated_by(cone, hb, memo, y)) {
      ok = true;
      break;
    }
  }
  memo[x] = ok;
  return ok;
}

}  // namespace

int cmd_check(const ProblemSpec& spec, const Options& opt) {
  WeightMonoid m = need_monoid(spec);
  Verdict v = smooth_verdict(m);
  json envelope = check_envelope(spec);

  std::string text;
  text += "group:   " + group_str(m.group) + "\n";
  text += "monoid:  " + gens_str(m.generators) + "\n";
  text += verdict_text(v);

  if (opt.verify_certificate) {
    json parsed = json::parse(envelope.dump());
    json again = check_envelope(parse_problem(parsed.at("input")));
    if (again.dump() != envelope.dump())
      return oracle_failed("certificate round trip diverged");
    envelope["certificate_verified"] = true;
    text += "certificate round trip: reports identical\n";
  }

  if (opt.oracle) {
    int checks = 0;
    if (m.is_G_saturated() && m.is_normal()) {
      if (sigma_fingerprint(sigma_n(m)) != sigma_fingerprint(sigma_n_gsat(m)))
        return oracle_failed("sigma_n disagrees between the general and saturated computations");
      ++checks;
    }
    if (v.family) {
      WeightMonoid t = table4_instance(*v.family);
      if (!(t.lattice == m.lattice) || !(t.cone == m.cone))
        return oracle_failed("classified family instance does not regenerate the monoid");
      ++checks;
    }
    Verdict v2 = smooth_verdict(m);
    if (verdict_json(v2) != verdict_json(v)) return oracle_failed("verdict is not deterministic");
    ++checks;
    envelope["oracle_checks"] = checks;
    text += "oracle: " + std::to_string(checks) + " cross-checks passed\n";
  }

  emit(opt, envelope, text);
  return verdict_exit(v.outcome, opt);
}

int cmd_sigma_n(const ProblemSpec& spec, const Options& opt) {
  WeightMonoid m = need_monoid(spec);
  std::vector<SphericalRoot> sigma = sigma_n(m);

  json sig = json::array();
  for (const SphericalRoot& s : sigma) sig.push_back(sphroot_json(s));
  json envelope = {{"command", "sigma-n"},
                   {"input", problem_json(spec)},
                   {"result", {{"sigma_n", sig}, {"sp", m.sp}}}};

  std::string text = "group:   " + group_str(m.group) + "\n";
  text += "monoid:  " + gens_str(m.generators) + "\n";
  text += "S^p:     " + nodes_str(m.sp) + "\n";
  if (sigma.empty()) text += "Sigma^N: (empty)\n";
  else {
    text += "Sigma^N:\n";
    for (const SphericalRoot& s : sigma) text += "  " + sphroot_str(s) + "\n";
  }

  if (opt.oracle) {
    if (m.is_G_saturated()) {
      if (sigma_fingerprint(sigma) != sigma_fingerprint(sigma_n_gsat(m)))
        return oracle_failed("sigma_n disagrees between the general and saturated computations");
      envelope["oracle_checks"] = 1;
      text += "oracle: saturated cross-check passed\n";
    } else {
      envelope["oracle_checks"] = 0;
      text += "oracle: skipped (monoid is not G-saturated)\n";
    }
  }

  emit(opt, envelope, text);
  return 0;
}

int cmd_s_gamma(const ProblemSpec& spec, const Options& opt) {
  WeightMonoid m = need_monoid(spec);
  std::vector<SphericalRoot> sigma = sigma_n(m);
  std::vector<int> sg = s_gamma(m, sigma);

  json envelope = {{"command", "s-gamma"},
                   {"input", problem_json(spec)},
                   {"result",
                    {{"s_gamma", sg},
                     {"support_type", support_type(m.group, sg)},
                     {"sp", m.sp}}}};

  std::string text = "group:    " + group_str(m.group) + "\n";
  text += "monoid:   " + gens_str(m.generators) + "\n";
  text += "S_Gamma:  " + nodes_str(sg) + "\n";
  std::string st = support_type(m.group, sg);
  text += "type:     " + (st.empty() ? std::string("(empty)") : st) + "\n";

  if (opt.oracle) {
    if (!support_set_feasible(sg, sigma))
      return oracle_failed("computed S_Gamma admits no strictly positive nonpositive-pairing combination");
    envelope["oracle_checks"] = 1;
    text += "oracle: feasibility of the computed support set verified\n";
  }

  emit(opt, envelope, text);
  return 0;
}

int cmd_admissible(const ProblemSpec& spec, const Options& opt) {
  WeightMonoid m = need_monoid(spec);
  std::vector<SphericalRoot> sigma = sigma_n(m);
  std::vector<int> sg = s_gamma(m, sigma);
  std::vector<SphericalRoot> triple;
  for (const SphericalRoot& s : sigma)
    if (s.supported_on(sg)) triple.push_back(s);
  std::vector<IVec> coeffs;
  for (const SphericalRoot& s : triple) coeffs.push_back(s.root_coeffs(m.group.ss_rank()));
  const bool ok = admissible_triple(m.group, sg, m.sp, coeffs);

  json trip = json::array();
  for (const SphericalRoot& s : triple) trip.push_back(sphroot_json(s));
  json envelope = {{"command", "admissible"},
                   {"input", problem_json(spec)},
                   {"result",
                    {{"admissible", ok},
                     {"s_gamma", sg},
                     {"sp", m.sp},
                     {"triple_sigma", trip}}}};

  std::string text = "group:    " + group_str(m.group) + "\n";
  text += "monoid:   " + gens_str(m.generators) + "\n";
  text += "S_Gamma:  " + nodes_str(sg) + "\n";
  text += "S^p:      " + nodes_str(m.sp) + "\n";
  if (triple.empty()) text += "Sigma:    (empty)\n";
  else {
    text += "Sigma:\n";
    for (const SphericalRoot& s : triple) text += "  " + sphroot_str(s) + "\n";
  }
  text += std::string("admissible: ") + (ok ? "yes" : "no") + "\n";

  emit(opt, envelope, text);
  return 0;
}

int cmd_classify_sl2c(const ProblemSpec& spec, const Options& opt) {
  WeightMonoid m = need_monoid(spec);
  std::optional<Sl2cFamily> family = classify_sl2c(m);
  std::vector<SphericalRoot> sigma = sigma_n_sl2c(m);

  json sig = json::array();
  for (const SphericalRoot& s : sigma) sig.push_back(sphroot_json(s));
  json result = {{"smooth", family.has_value()}, {"sigma_n", sig}};
  if (family)
    result["family"] = {{"id", family->id},
                        {"a", json_of(family->a)},
                        {"b", json_of(family->b)},
                        {"c", json_of(family->c)}};
  json envelope = {{"command", "classify-sl2c"}, {"input", problem_json(spec)}, {"result", result}};

  std::string text = "monoid:  " + gens_str(m.generators) + "\n";
  if (family)
    text += "family:  " + std::to_string(family->id) + " (a=" + family->a.get_str() +
            ", b=" + family->b.get_str() + ", c=" + family->c.get_str() + ")\n";
  else
    text += "family:  none (the monoid is not among the smooth families)\n";
  if (sigma.empty()) text += "Sigma^N: (empty)\n";
  else {
    text += "Sigma^N:\n";
    for (const SphericalRoot& s : sigma) text += "  " + sphroot_str(s) + "\n";
  }

  if (opt.oracle && family) {
    WeightMonoid t = table4_instance(*family);
    if (!(t.lattice == m.lattice) || !(t.cone == m.cone))
      return oracle_failed("classified family instance does not regenerate the monoid");
    envelope["oracle_checks"] = 1;
    text += "oracle: family instance regenerates the monoid\n";
  }

  emit(opt, envelope, text);
  return 0;
}

int cmd_polytope(const ProblemSpec& spec, const Options& opt) {
  const GroupDatum& g = need_group(spec);
  if (!spec.vertices) fail(Errc::InvalidInput, "this command needs a \"polytope\" section");
  if (!spec.lattice) fail(Errc::InvalidInput, "this command needs a \"lattice\" section");
  Polytope p = Polytope::make(g, *spec.vertices);
  IntegerLattice lambda0 = IntegerLattice::from_generators(*spec.lattice, g.weight_dim());
  PolytopeReport rep = check_pair(p, lambda0, spec.local_models);

  json envelope = {{"command", "polytope"},
                   {"input", problem_json(spec)},
                   {"result", pair_report_json(rep)}};

  std::string text = "group:     " + group_str(g) + "\n";
  text += "polytope:  " + std::to_string(p.vertices.size()) + " vertices, dimension " +
          std::to_string(p.dim) + "\n";
  text += "lattice:   rank " + std::to_string(lambda0.rank()) + "\n";
  text += std::string("reflective: ") + (rep.reflective ? "yes" : "no");
  if (!rep.reflective && !rep.reflective_why.empty()) text += " (" + rep.reflective_why + ")";
  text += "\n";
  text += std::string("Delzant:    ") + (rep.delzant ? "yes" : "no") + "\n";
  text += std::string("global route: ") + (rep.global_route ? "taken" : "not taken") + "\n";
  for (const VertexReport& vr : rep.vertices) {
    text += "vertex " + std::to_string(vr.vertex) + " at " +
            vec_str(p.vertices[static_cast<size_t>(vr.vertex)]) + ": Levi " + nodes_str(vr.levi) +
            "\n";
    text += "  monoid: " + gens_str(vr.gamma.generators) + "\n";
    text += std::string("  lattice match: ") + (vr.lattice_matches ? "yes" : "no") + "\n";
    text += verdict_text(vr.verdict, "  ");
  }
  text += std::string("overall: ") + pair_outcome_name(rep.overall) + "\n";

  if (opt.oracle) {
    for (const QVec& a : p.vertices) {
      RationalCone c = tangent_cone(p, a);
      for (const QVec& v : p.vertices) {
        QVec d(v.size());
        for (size_t i = 0; i < v.size(); ++i) d[i] = v[i] - a[i];
        if (!c.contains(d)) return oracle_failed("tangent cone misses a vertex difference");
      }
    }
    for (const VertexReport& vr : rep.vertices)
      if (!vr.gamma.is_normal()) return oracle_failed("local monoid is not normal");
    envelope["oracle_checks"] = 2;
    text += "oracle: tangent cone containment and local normality verified\n";
  }

  emit(opt, envelope, text);
  return (rep.overall == PairOutcome::Undecided && opt.strict) ? 3 : 0;
}

int cmd_hilbert(const ProblemSpec& spec, const Options& opt) {
  if (!spec.generators) fail(Errc::InvalidInput, "this command needs a \"monoid\" section");
  std::vector<IVec> gens;
  for (const IVec& v : *spec.generators)
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) gens.push_back(v);
  size_t dim = spec.group ? static_cast<size_t>(spec.group->weight_dim())
                          : (gens.empty() ? 0 : gens.front().size());
  for (const IVec& v : gens)
    if (v.size() != dim) fail(Errc::DimensionMismatch, "generator " + vec_str(v));

  std::vector<IVec> units, irred;
  RationalCone cone;
  IntegerLattice lattice;
  if (!gens.empty()) {
    lattice = IntegerLattice::from_generators(gens, static_cast<int>(dim));
    std::vector<IVec> coords;
    for (const IVec& v : gens) coords.push_back(*lattice.coords_of(v));
    cone = RationalCone::from_generators(lattice.rank(), coords);
    HilbertBasis hb = hilbert_basis(cone);
    for (const IVec& u : hb.units) units.push_back(lattice.from_coords(u));
    for (const IVec& h : hb.irreducibles) irred.push_back(lattice.from_coords(h));
    std::sort(units.begin(), units.end());
    std::sort(irred.begin(), irred.end());
  }

  json envelope = {{"command", "hilbert"},
                   {"input", problem_json(spec)},
                   {"result", {{"units", json_of(units)}, {"irreducibles", json_of(irred)}}}};

  std::string text = "generators:   " + gens_str(*spec.generators) + "\n";
  text += "units:        " + gens_str(units) + "\n";
  text += "irreducibles: " + gens_str(irred) + "\n";

  if (opt.oracle) {
    if (gens.empty() || !units.empty()) {
      envelope["oracle_checks"] = 0;
      text += "oracle: skipped (cone is trivial or not pointed)\n";
    } else if (lattice.rank() > 4) {
      envelope["oracle_checks"] = 0;
      text += "oracle: skipped (rank above 4, box enumeration too large)\n";
    } else {
      HilbertBasis hb = hilbert_basis(cone);
      std::map<IVec, bool> memo;
      const int r = lattice.rank();
      IVec x(static_cast<size_t>(r), Int(-5));
      long points = 0;
      while (true) {
        if (cone.contains(x)) {
          ++points;
          if (!generated_by(cone, hb.irreducibles, memo, x))
            return oracle_failed("box point " + vec_str(lattice.from_coords(x)) +
                                 " is not generated by the Hilbert basis");
        }
        int k = 0;
        while (k < r && x[static_cast<size_t>(k)] == 5) x[static_cast<size_t>(k++)] = -5;
        if (k == r) break;
        x[static_cast<size_t>(k)] += 1;
      }
      envelope["oracle_checks"] = 1;
      text += "oracle: all " + std::to_string(points) + " cone points in the [-5,5] box regenerate\n";
    }
  }

  emit(opt, envelope, text);
  return 0;
}

int cmd_enumerate_sl(int rank, const Options& opt) {
  std::vector<FamilyEntry> entries = enumerate_sl_fullrank(rank, opt.max_param);
  int c1 = 0, c2 = 0, c3 = 0;
  for (const FamilyEntry& e : entries) {
    if (e.label.rfind("case 1", 0) == 0) ++c1;
    if (e.label.rfind("case 2", 0) == 0) ++c2;
    if (e.label.rfind("case 3", 0) == 0) ++c3;
  }

  json arr = json::array();
  for (const FamilyEntry& e : entries) arr.push_back(family_entry_json(e));
  json envelope = {{"command", "enumerate-sl"},
                   {"rank", rank},
                   {"max_param", opt.max_param},
                   {"entries", arr},
                   {"counts", {{"case1", c1}, {"case2", c2}, {"case3", c3}}}};

  std::string text = "SL(" + std::to_string(rank + 1) + ") full-rank G-saturated smooth lattices (case 2 sampled to k <= " +
                     std::to_string(opt.max_param) + ")\n";
  for (const FamilyEntry& e : entries) {
    text += e.label + " | lattice " + gens_str(e.lattice_generators) + " | " +
            outcome_name(e.verdict.outcome) + " | Sigma^N weights " + gens_str(e.expected_sigma) +
            "\n";
  }
  text += "counts: case 1 = " + std::to_string(c1) + ", case 2 = " + std::to_string(c2) +
          ", case 3 = " + std::to_string(c3) + "\n";

  emit(opt, envelope, text);
  return 0;
}

int cmd_enumerate_other(const std::string& type, int rank, const Options& opt) {
  if (type.size() != 1) fail(Errc::InvalidInput, "component type must be one letter");
  SimpleType t;
  switch (type[0]) {
    case 'B': t = SimpleType::B; break;
    case 'C': t = SimpleType::C; break;
    case 'D': t = SimpleType::D; break;
    case 'E': t = SimpleType::E; break;
    case 'F': t = SimpleType::F; break;
    case 'G': t = SimpleType::G; break;
    default: fail(Errc::InvalidInput, "supported types are B, C, D, E, F, G");
  }
  std::vector<FamilyEntry> entries = enumerate_other_types(t, rank);
  int in_family = 0;
  for (const FamilyEntry& e : entries)
    if (e.in_family) ++in_family;

  json arr = json::array();
  for (const FamilyEntry& e : entries) arr.push_back(family_entry_json(e));
  json envelope = {{"command", "enumerate-other"},
                   {"type", type},
                   {"rank", rank},
                   {"entries", arr},
                   {"in_family", in_family}};

  std::string text = "G-saturated smooth lattices of type " + type + std::to_string(rank) + "\n";
  for (const FamilyEntry& e : entries) {
    text += e.label + " | lattice " + gens_str(e.lattice_generators) + " | " +
            outcome_name(e.verdict.outcome) + " | Sigma^N weights " + gens_str(e.expected_sigma) +
            "\n";
  }
  text += "in-family lattices: " + std::to_string(in_family) + " of " +
          std::to_string(entries.size()) + "\n";

  emit(opt, envelope, text);
  return 0;
}

}  // namespace wmsmooth::cli
