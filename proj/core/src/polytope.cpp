#include "wmsmooth/polytope.hpp"

#include "wmsmooth/errors.hpp"
#include "wmsmooth/linfeas.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace wmsmooth {

namespace {

QVec q_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Is pts[k] a convex combination of the other points?  Exact rational
// feasibility of sum lambda_j pts_j = pts_k, lambda >= 0, sum lambda = 1.
bool in_hull(const std::vector<QVec>& pts, size_t k) {
  if (pts.size() <= 1) return false;
  const int m = static_cast<int>(pts.size()) - 1;
  std::vector<AffineRow> rows;
  for (int j = 0; j < m; ++j) {
    IVec e(static_cast<size_t>(m), Int(0));
    e[static_cast<size_t>(j)] = 1;
    rows.push_back(row_ge(std::move(e), 0));
  }
  rows.push_back(row_ge(IVec(static_cast<size_t>(m), Int(1)), 1));
  rows.push_back(row_ge(IVec(static_cast<size_t>(m), Int(-1)), -1));
  for (size_t i = 0; i < pts[k].size(); ++i) {
    Int l = 1;
    for (const QVec& v : pts) l = int_lcm(l, v[i].get_den());
    IVec a;
    a.reserve(static_cast<size_t>(m));
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == k) continue;
      Rat s = pts[j][i] * Rat(l);
      a.push_back(s.get_num());
    }
    Rat rs = pts[k][i] * Rat(l);
    Int b = rs.get_num();
    IVec na = vec_neg(a);
    rows.push_back(row_ge(std::move(a), b));
    rows.push_back(row_ge(std::move(na), -b));
  }
  return fm_feasible(m, std::move(rows));
}

std::vector<int> levi_nodes(const GroupDatum& g, const QVec& a) {
  std::vector<int> out;
  for (int i = 0; i < g.ss_rank(); ++i)
    if (a[static_cast<size_t>(i)] == 0) out.push_back(i);
  return out;
}

// A facet of a full-dimensional polytope: <normal, x> >= offset holds on the
// polytope with equality exactly on `verts`.  `key` identifies the affine
// hull independently of scaling and orientation.
struct FacetRec {
  IVec normal;
  Int offset = 0;
  std::vector<int> verts;
  IVec key;
};

IVec hyperplane_key(IVec normal, const Int& offset) {
  normal.push_back(offset);
  normal = primitive_of(normal);
  for (const Int& x : normal) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : normal) y = -y;
    break;
  }
  return normal;
}

// Facets via the cone over the lifted vertices (v, 1): its facet normals
// (n, -c) are exactly the valid inequalities <n, x> >= c tight on a facet.
// Requires the polytope to span the weight space.
std::vector<FacetRec> facets_of(const Polytope& p) {
  const int d = p.group.weight_dim();
  std::vector<IVec> lifted;
  for (const QVec& v : p.vertices) {
    QVec h = v;
    h.push_back(Rat(1));
    lifted.push_back(primitive_direction(h));
  }
  RationalCone cone = RationalCone::from_generators(d + 1, lifted);
  std::vector<FacetRec> out;
  for (const IVec& f : cone.facets) {
    FacetRec rec;
    rec.normal = IVec(f.begin(), f.end() - 1);
    rec.offset = -f.back();
    for (size_t v = 0; v < p.vertices.size(); ++v)
      if (dot_q(rec.normal, p.vertices[v]) == rec.offset) rec.verts.push_back(static_cast<int>(v));
    rec.key = hyperplane_key(rec.normal, rec.offset);
    out.push_back(std::move(rec));
  }
  return out;
}

// All nonempty faces as sorted vertex-id sets, the polytope itself included:
// every proper face is an iterated intersection with facet vertex sets.
std::vector<std::vector<int>> faces_of(size_t nverts, const std::vector<FacetRec>& facets) {
  std::vector<int> all(nverts);
  for (size_t i = 0; i < nverts; ++i) all[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{all};
  std::vector<std::vector<int>> queue{all};
  for (size_t q = 0; q < queue.size(); ++q) {
    std::vector<int> cur = queue[q];
    for (const FacetRec& f : facets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), f.verts.begin(), f.verts.end(),
                            std::back_inserter(inter));
      if (inter.empty() || !seen.insert(inter).second) continue;
      queue.push_back(std::move(inter));
    }
  }
  return queue;
}

QVec face_witness(const Polytope& p, const std::vector<int>& face) {
  QVec w(p.vertices[0].size(), Rat(0));
  for (int v : face)
    for (size_t i = 0; i < w.size(); ++i) w[i] += p.vertices[static_cast<size_t>(v)][i];
  Rat c(static_cast<long>(face.size()));
  for (Rat& x : w) x /= c;
  return w;
}

// Tangent cone directions at vertex `idx` in lambda0 coordinates, primitive.
// Reports DegenerateDimension when an edge direction leaves the span of the
// lattice; spanning of the full lattice rank is the cone factory's check.
std::vector<IVec> cone_coords(const Polytope& p, const IntegerLattice& lambda0, size_t idx) {
  std::vector<IVec> gens;
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    if (v == idx) continue;
    auto c = lambda0.coords_of_q(q_sub(p.vertices[v], p.vertices[idx]));
    if (!c)
      fail(Errc::DegenerateDimension,
           "edge direction " + vec_str(q_sub(p.vertices[v], p.vertices[idx])) +
               " is not in the span of the lattice");
    gens.push_back(primitive_direction(*c));
  }
  return gens;
}

void check_in_chamber(const Polytope& p) {
  for (const QVec& v : p.vertices)
    for (int i = 0; i < p.group.ss_rank(); ++i)
      if (v[static_cast<size_t>(i)] < 0)
        fail(Errc::VertexOutsideChamber, "vertex " + vec_str(v) + " is not dominant");
}

void validate_model(const Polytope& p, const IntegerLattice& lambda0, const LocalModel& lm) {
  if (lm.vertex < 0 || lm.vertex >= static_cast<int>(p.vertices.size()))
    fail(Errc::InvalidLocalModel, "local model names a vertex that does not exist");
  if (lm.matrix.nr != lm.target.weight_dim() || lm.matrix.nc != lambda0.rank())
    fail(Errc::InvalidLocalModel, "local model matrix has the wrong shape");
  if (rank_of(lm.matrix) != lambda0.rank())
    fail(Errc::InvalidLocalModel, "local model matrix is not injective on the lattice");
  std::vector<char> covered(static_cast<size_t>(lm.target.ss_rank()), 0);
  for (const auto& [t, s] : lm.root_correspondence) {
    if (t < 0 || t >= lm.target.ss_rank() || s < 0 || s >= p.group.ss_rank())
      fail(Errc::InvalidLocalModel, "correspondence index out of range");
    covered[static_cast<size_t>(t)] = 1;
    if (!(p.vertices[static_cast<size_t>(lm.vertex)][static_cast<size_t>(s)] == 0))
      fail(Errc::InvalidLocalModel,
           "corresponding root " + std::to_string(s) + " does not vanish on the vertex");
    for (int j = 0; j < lambda0.rank(); ++j)
      if (lm.matrix.at(t, j) != lambda0.basis.at(s, j))
        fail(Errc::InvalidLocalModel,
             "the model does not preserve the coroot pairing of node " + std::to_string(s));
  }
  for (char c : covered)
    if (!c)
      fail(Errc::InvalidLocalModel, "every simple root of the target needs a declared correspondence");
}

// Push the local monoid through the model and judge it over the target.
Verdict model_verdict(const IntegerLattice& lambda0, const LocalModel& lm, const WeightMonoid& gamma) {
  std::vector<IVec> pushed;
  for (const IVec& w : gamma.generators) {
    auto c = lambda0.coords_of(w);
    if (!c) fail(Errc::InvalidLocalModel, "local monoid generator outside the lattice");
    pushed.push_back(mat_vec(lm.matrix, *c));
  }
  return smooth_verdict(WeightMonoid::make(lm.target, std::move(pushed)));
}

}  // namespace

Polytope Polytope::make(GroupDatum g, std::vector<QVec> points) {
  Polytope p;
  p.group = std::move(g);
  const int d = p.group.weight_dim();
  if (points.empty()) fail(Errc::EmptyInput, "a polytope needs at least one vertex");
  for (const QVec& v : points)
    if (static_cast<int>(v.size()) != d) fail(Errc::DimensionMismatch, "vertex has wrong length");
  p.vertices = std::move(points);
  check_in_chamber(p);
  for (size_t k = 0; k < p.vertices.size(); ++k) {
    for (size_t j = 0; j < k; ++j)
      if (p.vertices[j] == p.vertices[k])
        fail(Errc::RedundantVertex, "duplicate vertex " + vec_str(p.vertices[k]));
    if (in_hull(p.vertices, k))
      fail(Errc::RedundantVertex,
           "vertex " + vec_str(p.vertices[k]) + " is a convex combination of the others");
  }
  std::vector<IVec> diffs;
  for (size_t k = 1; k < p.vertices.size(); ++k)
    diffs.push_back(primitive_direction(q_sub(p.vertices[k], p.vertices[0])));
  p.dim = diffs.empty() ? 0 : rank_of(IMat::from_columns(diffs, d));
  return p;
}

int Polytope::vertex_index(const QVec& a) const {
  for (size_t k = 0; k < vertices.size(); ++k)
    if (vertices[k] == a) return static_cast<int>(k);
  fail(Errc::NotAVertex, vec_str(a) + " is not a vertex of the polytope");
}

RationalCone tangent_cone(const Polytope& p, const QVec& a) {
  const size_t idx = static_cast<size_t>(p.vertex_index(a));
  std::vector<IVec> gens;
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    if (v == idx) continue;
    gens.push_back(primitive_direction(q_sub(p.vertices[v], a)));
  }
  return RationalCone::from_generators(p.group.weight_dim(), gens);
}

WeightMonoid local_monoid(const Polytope& p, const IntegerLattice& lambda0, const QVec& a) {
  if (lambda0.ambient != p.group.weight_dim())
    fail(Errc::DimensionMismatch, "lattice does not live in the weight space of the group");
  const size_t idx = static_cast<size_t>(p.vertex_index(a));
  const std::vector<int> levi = levi_nodes(p.group, a);
  std::vector<IVec> gens = cone_coords(p, lambda0, idx);
  if (gens.empty()) return WeightMonoid::make_levi(p.group, {}, levi);
  RationalCone cone = RationalCone::from_generators(lambda0.rank(), gens);
  HilbertBasis hb = hilbert_basis(cone);
  std::vector<IVec> out;
  for (const IVec& u : hb.units) {
    out.push_back(lambda0.from_coords(u));
    out.push_back(lambda0.from_coords(vec_neg(u)));
  }
  for (const IVec& h : hb.irreducibles) out.push_back(lambda0.from_coords(h));
  std::sort(out.begin(), out.end());
  return WeightMonoid::make_levi(p.group, std::move(out), levi);
}

bool is_delzant(const Polytope& p, const IntegerLattice& lambda0) {
  if (lambda0.ambient != p.group.weight_dim())
    fail(Errc::DimensionMismatch, "lattice does not live in the weight space of the group");
  const int r = lambda0.rank();
  if (p.dim != r) return false;
  for (size_t idx = 0; idx < p.vertices.size(); ++idx) {
    std::vector<IVec> gens;
    for (size_t v = 0; v < p.vertices.size(); ++v) {
      if (v == idx) continue;
      auto c = lambda0.coords_of_q(q_sub(p.vertices[v], p.vertices[idx]));
      if (!c) return false;
      gens.push_back(primitive_direction(*c));
    }
    if (gens.empty()) {
      if (r == 0) continue;
      return false;
    }
    if (rank_of(IMat::from_columns(gens, r)) != r) return false;
    HilbertBasis hb = hilbert_basis(RationalCone::from_generators(r, gens));
    if (!hb.units.empty()) return false;
    if (static_cast<int>(hb.irreducibles.size()) != r) return false;
    if (!part_of_basis(hb.irreducibles)) return false;
  }
  return true;
}

ReflectiveCheck is_reflective_polytope(const Polytope& p) {
  ReflectiveCheck r;
  if (p.dim != p.group.weight_dim()) {
    r.why = "the polytope does not span the weight space";
    return r;
  }
  const std::vector<FacetRec> facets = facets_of(p);
  // Every facet must meet the open Weyl chamber; a facet all of whose
  // vertices lie on one wall lies inside that wall.  This runs before the
  // stability check so that a wall-contained facet, which breaks both
  // conditions, is reported here.
  for (const FacetRec& f : facets)
    for (int i = 0; i < p.group.ss_rank(); ++i) {
      bool positive = false;
      for (int v : f.verts)
        if (p.vertices[static_cast<size_t>(v)][static_cast<size_t>(i)] > 0) {
          positive = true;
          break;
        }
      if (!positive) {
        r.why = "a facet of the polytope does not meet the open Weyl chamber";
        return r;
      }
    }
  // Wall stability of the supporting hyperplanes.  The walls support the
  // polytope, so they cut no new faces: the set of active walls and the set
  // of incident facet hyperplanes are constant on the relative interior of
  // each face, and the barycenter is a witness for both.
  for (const std::vector<int>& face : faces_of(p.vertices.size(), facets)) {
    QVec w = face_witness(p, face);
    std::vector<int> active = levi_nodes(p.group, w);
    if (active.empty()) continue;
    std::set<IVec> incident;
    std::vector<const FacetRec*> touching;
    for (const FacetRec& f : facets)
      if (dot_q(f.normal, w) == f.offset) {
        incident.insert(f.key);
        touching.push_back(&f);
      }
    for (int i : active) {
      const IVec alpha = p.group.simple_root(i);
      for (const FacetRec* f : touching) {
        IVec n2 = f->normal;
        n2[static_cast<size_t>(i)] -= dot(f->normal, alpha);
        if (!incident.count(hyperplane_key(std::move(n2), f->offset))) {
          r.why = "the facet hyperplanes through " + vec_str(w) +
                  " are not stable under the simple reflection s_" + std::to_string(i);
          return r;
        }
      }
    }
  }
  r.reflective = true;
  return r;
}

const char* pair_outcome_name(PairOutcome o) {
  switch (o) {
    case PairOutcome::Satisfied: return "Satisfied";
    case PairOutcome::Violated: return "Violated";
    case PairOutcome::Undecided: return "Undecided";
  }
  return "?";
}

PolytopeReport check_pair(const Polytope& p, const IntegerLattice& lambda0,
                          const std::vector<LocalModel>& local_models) {
  const GroupDatum& g = p.group;
  if (lambda0.ambient != g.weight_dim())
    fail(Errc::DimensionMismatch, "lattice does not live in the weight space of the group");
  check_in_chamber(p);

  std::map<int, const LocalModel*> by_vertex;
  for (const LocalModel& lm : local_models) {
    validate_model(p, lambda0, lm);
    if (!by_vertex.emplace(lm.vertex, &lm).second)
      fail(Errc::InvalidLocalModel, "two local models for one vertex");
  }

  PolytopeReport rep;
  ReflectiveCheck refl = is_reflective_polytope(p);
  rep.reflective = refl.reflective;
  rep.reflective_why = refl.why;
  rep.delzant = is_delzant(p, lambda0);

  for (size_t k = 0; k < p.vertices.size(); ++k) {
    VertexReport vr;
    vr.vertex = static_cast<int>(k);
    vr.levi = levi_nodes(g, p.vertices[k]);
    vr.gamma = local_monoid(p, lambda0, p.vertices[k]);
    vr.lattice_matches = vr.gamma.lattice == lambda0;
    rep.vertices.push_back(std::move(vr));
  }

  // Global route: lattice stable under every vertex stabilizer and
  // containing every vertex Levi's simple roots, polytope reflective and
  // Delzant.  Then every vertex monoid is smooth at once.
  bool lattice_conditions = true;
  for (const VertexReport& vr : rep.vertices)
    for (int i : vr.levi) {
      if (!lambda0.contains(g.simple_root(i))) lattice_conditions = false;
      for (int j = 0; j < lambda0.rank() && lattice_conditions; ++j)
        if (!lambda0.contains(g.reflect(i, lambda0.basis.col(j)))) lattice_conditions = false;
      if (!lattice_conditions) break;
    }
  rep.global_route = lattice_conditions && rep.reflective && rep.delzant;

  if (rep.global_route) {
    for (VertexReport& vr : rep.vertices) {
      vr.verdict.outcome = Outcome::Smooth;
      vr.verdict.route = Route::Reflective;
      vr.verdict.sp = vr.gamma.sp;
      vr.verdict.hypotheses = {{"polytope is reflective", true},
                               {"polytope is Delzant for the lattice", true},
                               {"Levi simple roots lie in the lattice", true},
                               {"lattice is stable under the vertex stabilizers", true}};
    }
  } else {
    for (VertexReport& vr : rep.vertices) {
      const bool full_levi = static_cast<int>(vr.levi.size()) == g.ss_rank();
      if (vr.levi.empty()) {
        GroupDatum torus = GroupDatum::make({}, g.weight_dim());
        vr.verdict = check_toric_smooth(WeightMonoid::make(torus, vr.gamma.generators));
      } else if (full_levi && vr.gamma.is_G_saturated()) {
        vr.verdict = check_gsat_smooth(vr.gamma);
      } else if (auto it = by_vertex.find(vr.vertex); it != by_vertex.end()) {
        vr.verdict = model_verdict(lambda0, *it->second, vr.gamma);
      } else {
        vr.verdict.outcome = Outcome::Undecided;
        vr.verdict.reason =
            "no implemented criterion applies: the Levi is neither a torus nor the full group "
            "with a G-saturated local monoid, and no local model was supplied";
      }
    }
  }

  bool violated = false, undecided = false;
  for (const VertexReport& vr : rep.vertices) {
    if (vr.verdict.outcome == Outcome::NotSmooth || !vr.lattice_matches) violated = true;
    else if (vr.verdict.outcome == Outcome::Undecided) undecided = true;
  }
  rep.overall = violated    ? PairOutcome::Violated
                : undecided ? PairOutcome::Undecided
                            : PairOutcome::Satisfied;
  return rep;
}

}  // namespace wmsmooth
