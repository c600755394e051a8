#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wmsmooth/monoid.hpp>
#include <wmsmooth/sl2c.hpp>
#include <wmsmooth/spherical_roots.hpp>

namespace wmsmooth {

enum class Outcome { Smooth, NotSmooth, Undecided };
enum class Route { Toric, GSaturated, Sl2Cx, Reflective };

const char* outcome_name(Outcome o);
const char* route_name(Route r);

// A smoothness decision together with the data needed to re-derive it by
// hand.  `reason` names the failed condition for NotSmooth and the missing
// criterion for Undecided; the remaining fields are filled per route.
struct Verdict {
  Outcome outcome = Outcome::Undecided;
  Route route = Route::GSaturated;
  std::string reason;

  std::vector<SphericalRoot> sigma_n;       // adapted spherical roots
  std::vector<int> sp;                      // simple nodes orthogonal to the monoid
  std::vector<int> s_gamma;                 // the support set S_Gamma
  std::vector<SphericalRoot> triple_sigma;  // adapted roots supported on S_Gamma

  std::optional<Sl2cFamily> family;  // SL(2) x C^x route

  // reflective route: (hypothesis name, holds) in the order checked
  std::vector<std::pair<std::string, bool>> hypotheses;
};

// Smoothness of a G-saturated monoid: the coroot restrictions on
// S_Gamma \ S^p must be part of a basis of the lattice dual, distinct nodes
// with equal restrictions must sum into the lattice, and the localized triple
// (S_Gamma, S^p, Sigma) must be admissible.  Throws NotNormal, NotGSaturated.
Verdict check_gsat_smooth(const WeightMonoid& m);

// Does every simple reflection of g map the lattice onto itself?
bool w_invariant_lattice(const IntegerLattice& lattice, const GroupDatum& g);

struct ReflectiveCheck {
  bool reflective = false;
  std::string why;  // first failed condition; empty when reflective
};

// Reflectivity of a normal monoid: full rank, the facet hyperplanes of its
// cone permuted by every simple reflection, and every facet meeting the open
// Weyl chamber.  Throws NotNormal.
ReflectiveCheck check_reflective(const WeightMonoid& m);

// One-directional smoothness test: reflective + simple roots inside the
// lattice + dual-cone rays part of a basis of the lattice dual + lattice
// W-invariant imply Smooth (and force semisimple type (A1)^r with the adapted
// roots equal to the simple roots, which is asserted).  Anything else is
// Undecided, never NotSmooth.  Throws NotNormal.
Verdict check_reflective_smooth(const WeightMonoid& m);

// Smoothness over a torus: the monoid must be a free monoid over its unit
// lattice, i.e. Hilbert-basis units and irreducibles Z-linearly independent.
// Throws NotTorus, NotNormal.
Verdict check_toric_smooth(const WeightMonoid& m);

// Dispatch: torus groups, then G-saturated monoids, then the SL(2) x C^x
// classification, then the reflective route; Undecided when no implemented
// criterion applies.  Throws NotNormal.
Verdict smooth_verdict(const WeightMonoid& m);

}  // namespace wmsmooth
