#pragma once

#include <optional>

#include <wmsmooth/monoid.hpp>
#include <wmsmooth/spherical_roots.hpp>

namespace wmsmooth {

// Classification of the smooth weight monoids of SL(2) x C^x.  The group has
// one A1 component and a one-dimensional central torus; weights are written
// (coefficient of omega, coefficient of epsilon) with alpha = 2 omega.
//
// The fourteen families of smooth monoids, by generators and parameter range
// (w = omega, e = epsilon; unused parameters stay zero):
//    1   {0}
//    2   <be, -be>                     b >= 1
//    3   <be>                          b != 0
//    4   <w + be>                      b in Z
//    5   <aw>                          a in {2, 4}
//    6   <w + ce, be, -be>             b >= 1, |c| <= b/2
//    7   <aw, be, -be>                 a in {2, 4}, b >= 1
//    8   <aw, be>                      a in {2, 4}, b != 0
//    9   <2w + be, 2w - be, 2be, -2be> b >= 1
//   10   <2w, aw + be>                 a >= 1, b != 0
//   11   <aw + be, aw - be, 2w>        a >= 1, b >= 1
//   12   <2w + be, 2be>                b != 0
//   13   <w + be, ce>                  b in Z, c != 0
//   14   <4w, 2be, 2w + be>            b != 0
struct Sl2cFamily {
  int id = 0;
  Int a = 0, b = 0, c = 0;
  bool operator==(const Sl2cFamily&) const = default;
};

// The SL(2) x C^x group datum: a single A1 component plus a rank-one torus.
GroupDatum sl2c_group();

// The monoid generated by the listed generators of the given family member.
// Throws InvalidParams when a parameter is outside the family's range or a
// parameter unused by the family is nonzero.
WeightMonoid table4_instance(const Sl2cFamily& f);
WeightMonoid table4_instance(int id, Int a = 0, Int b = 0, Int c = 0);

// Matches a normal monoid against the fourteen families; nullopt means the
// monoid is not smooth.  Parameters come out canonicalized (family 6 reduces
// c modulo b into (-b/2, b/2], family 11 takes b positive), so equal monoids
// classify identically.  Throws WrongGroup for any other group datum and
// NotNormal for a non-normal monoid.
std::optional<Sl2cFamily> classify_sl2c(const WeightMonoid& m);

// Adapted spherical roots by the closed-form rank criteria for this group;
// always one of {}, {alpha}, {2 alpha}, and agrees with sigma_n.  Same
// preconditions as classify_sl2c.
std::vector<SphericalRoot> sigma_n_sl2c(const WeightMonoid& m);

}  // namespace wmsmooth
