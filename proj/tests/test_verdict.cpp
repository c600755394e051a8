#include "wmsmooth/verdict.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wmsmooth/admissible.hpp"
#include "wmsmooth/errors.hpp"

using namespace wmsmooth;
using wmt::iv;
using wmt::ivs;

namespace {

GroupDatum simple(SimpleType t, int rank, int torus = 0) {
  return GroupDatum::make({{t, rank}}, torus);
}

GroupDatum torus(int n) { return GroupDatum::make({}, n); }

WeightMonoid make(const GroupDatum& g, std::vector<IVec> gens) {
  return WeightMonoid::make(g, std::move(gens));
}

bool contains_word(const std::string& s, const std::string& w) {
  return s.find(w) != std::string::npos;
}

}  // namespace

TEST_CASE("verdict: rank-one monoids over the smallest simple group") {
  GroupDatum a1 = simple(SimpleType::A, 1);
  for (long k = 1; k <= 12; ++k) {
    CAPTURE(k);
    Verdict v = smooth_verdict(make(a1, {iv({k})}));
    CHECK(v.route == Route::GSaturated);
    bool smooth = (k == 1 || k == 2 || k == 4);
    CHECK(v.outcome == (smooth ? Outcome::Smooth : Outcome::NotSmooth));
    if (!smooth) CHECK(contains_word(v.reason, "basis"));
  }
}

TEST_CASE("verdict: saturated monoids over simple groups") {
  GroupDatum a2 = simple(SimpleType::A, 2);

  Verdict v1 = check_gsat_smooth(make(a2, ivs({{1, 0}})));
  CHECK(v1.outcome == Outcome::Smooth);
  CHECK(v1.sp == std::vector<int>{1});
  CHECK(v1.s_gamma == std::vector<int>{0, 1});
  CHECK(v1.sigma_n.empty());

  Verdict v2 = check_gsat_smooth(make(a2, ivs({{1, 1}})));
  CHECK(v2.outcome == Outcome::Smooth);
  REQUIRE(v2.sigma_n.size() == 1);
  CHECK(v2.sigma_n[0].pattern == "A-string");
  CHECK(v2.s_gamma.empty());

  Verdict v3 = check_gsat_smooth(make(a2, ivs({{1, 0}, {0, 1}})));
  CHECK(v3.outcome == Outcome::Smooth);

  // the saturation of the doubled weight lattice
  Verdict v4 = check_gsat_smooth(make(a2, ivs({{2, 0}, {0, 2}})));
  CHECK(v4.outcome == Outcome::Smooth);
  REQUIRE(v4.sigma_n.size() == 2);
  CHECK(v4.sigma_n[0].pattern == "A1-doubled");
  CHECK(v4.sigma_n[1].pattern == "A1-doubled");
  CHECK(v4.s_gamma.empty());

  Verdict vb = check_gsat_smooth(make(simple(SimpleType::B, 2), ivs({{1, 0}, {0, 1}})));
  CHECK(vb.outcome == Outcome::Smooth);
  REQUIRE(vb.sigma_n.size() == 1);
  CHECK(vb.sigma_n[0].pattern == "B-string");
  CHECK(vb.s_gamma == std::vector<int>{1});

  Verdict vc = check_gsat_smooth(make(simple(SimpleType::C, 2), ivs({{1, 0}, {0, 1}})));
  CHECK(vc.outcome == Outcome::Smooth);
  REQUIRE(vc.sigma_n.size() == 1);
  CHECK(vc.s_gamma == std::vector<int>{0});
  CHECK(vc.triple_sigma.empty());

  Verdict vg = check_gsat_smooth(make(simple(SimpleType::G, 2), ivs({{1, 0}, {0, 1}})));
  CHECK(vg.outcome == Outcome::NotSmooth);
  CHECK(contains_word(vg.reason, "admissible"));
}

TEST_CASE("verdict: the basis condition fails over a product group") {
  GroupDatum a11 = GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 0);

  Verdict v1 = check_gsat_smooth(make(a11, ivs({{1, 3}})));
  CHECK(v1.outcome == Outcome::NotSmooth);
  CHECK(contains_word(v1.reason, "basis"));

  Verdict v2 = check_gsat_smooth(make(a11, ivs({{3, 3}})));
  CHECK(v2.outcome == Outcome::NotSmooth);
  CHECK(contains_word(v2.reason, "basis"));
}

TEST_CASE("verdict: equal restrictions must sum into the lattice") {
  GroupDatum g = GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 1);
  Verdict v = check_gsat_smooth(make(g, ivs({{1, 1, 1}, {0, 0, 3}, {0, 0, -3}})));
  CHECK(v.outcome == Outcome::NotSmooth);
  CHECK(contains_word(v.reason, "alpha_0 + alpha_1"));
  CHECK(v.s_gamma == std::vector<int>{0, 1});
  CHECK(v.sigma_n.empty());
}

TEST_CASE("verdict: certificates re-verify independently") {
  std::vector<WeightMonoid> fixtures = {
      make(simple(SimpleType::A, 2), ivs({{1, 0}})),
      make(simple(SimpleType::B, 2), ivs({{1, 0}, {0, 1}})),
      make(simple(SimpleType::C, 2), ivs({{1, 0}, {0, 1}})),
      make(simple(SimpleType::A, 1), ivs({{2}})),
  };
  for (const WeightMonoid& m : fixtures) {
    Verdict v = check_gsat_smooth(m);
    REQUIRE(v.outcome == Outcome::Smooth);
    std::vector<IVec> coeffs;
    for (const SphericalRoot& s : v.triple_sigma) coeffs.push_back(s.root_coeffs(m.group.ss_rank()));
    CHECK(admissible_triple(m.group, v.s_gamma, v.sp, coeffs));
  }
}

TEST_CASE("verdict: toric monoids") {
  Verdict v1 = check_toric_smooth(make(torus(2), ivs({{1, 0}, {0, 1}, {0, -1}})));
  CHECK(v1.outcome == Outcome::Smooth);
  CHECK(v1.route == Route::Toric);

  Verdict v2 = check_toric_smooth(make(torus(2), ivs({{1, 1}, {1, -1}, {1, 0}})));
  CHECK(v2.outcome == Outcome::NotSmooth);
  CHECK(contains_word(v2.reason, "independent"));

  CHECK(check_toric_smooth(make(torus(1), {})).outcome == Outcome::Smooth);
  CHECK(check_toric_smooth(make(torus(1), ivs({{1}}))).outcome == Outcome::Smooth);
  CHECK(smooth_verdict(make(torus(2), ivs({{1, 0}, {0, 2}}))).outcome == Outcome::Smooth);

  auto code_of = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.code;
    }
    FAIL("expected throw");
    return Errc::InvalidComponent;
  };
  CHECK(code_of([&] { check_toric_smooth(make(simple(SimpleType::A, 1), ivs({{1}}))); }) ==
        Errc::NotTorus);
  CHECK(code_of([&] { check_toric_smooth(make(torus(1), ivs({{2}, {3}}))); }) == Errc::NotNormal);
}

TEST_CASE("verdict: lattice Weyl invariance") {
  GroupDatum a2 = simple(SimpleType::A, 2);
  CHECK(w_invariant_lattice(IntegerLattice::from_generators(ivs({{2, 0}, {0, 2}}), 2), a2));
  CHECK_FALSE(w_invariant_lattice(IntegerLattice::from_generators(ivs({{1, 0}}), 2), a2));

  GroupDatum sl2c = GroupDatum::make({{SimpleType::A, 1}}, 1);
  CHECK(w_invariant_lattice(IntegerLattice::from_generators(ivs({{1, 5}, {1, -5}}), 2), sl2c));
  CHECK_FALSE(w_invariant_lattice(IntegerLattice::from_generators(ivs({{1, 5}}), 2), sl2c));
}

TEST_CASE("verdict: reflectivity of the cone") {
  GroupDatum sl2c = GroupDatum::make({{SimpleType::A, 1}}, 1);
  for (long b : {3, 5, 7}) {
    CAPTURE(b);
    ReflectiveCheck r = check_reflective(make(sl2c, {iv({1, b}), iv({1, -b})}));
    CHECK(r.reflective);
    CHECK(r.why.empty());
  }

  ReflectiveCheck r1 = check_reflective(make(simple(SimpleType::A, 1), ivs({{1}})));
  CHECK_FALSE(r1.reflective);
  CHECK(contains_word(r1.why, "chamber"));

  ReflectiveCheck r2 = check_reflective(make(simple(SimpleType::A, 2), ivs({{1, 0}, {0, 1}})));
  CHECK_FALSE(r2.reflective);

  ReflectiveCheck r3 = check_reflective(make(sl2c, ivs({{1, 0}, {0, 1}, {0, -1}})));
  CHECK_FALSE(r3.reflective);

  ReflectiveCheck r4 = check_reflective(make(simple(SimpleType::A, 2), ivs({{1, 1}})));
  CHECK_FALSE(r4.reflective);
  CHECK(contains_word(r4.why, "full rank"));
}

TEST_CASE("verdict: reflective smoothness route") {
  GroupDatum sl2c = GroupDatum::make({{SimpleType::A, 1}}, 1);
  for (long b : {3, 5, 7}) {
    CAPTURE(b);
    WeightMonoid m = make(sl2c, {iv({1, b}), iv({1, -b})});
    Verdict v = check_reflective_smooth(m);
    CHECK(v.outcome == Outcome::Smooth);
    CHECK(v.route == Route::Reflective);
    for (const auto& [name, holds] : v.hypotheses) {
      CAPTURE(name);
      CHECK(holds);
    }
    REQUIRE(v.sigma_n.size() == 1);
    CHECK(v.sigma_n[0].is_simple());
    // dual rays pair nonnegatively with every simple root
    for (const IVec& delta : m.e_rays) CHECK(m.pair(delta, m.group.simple_root(0)) >= 0);
  }

  Verdict u = check_reflective_smooth(make(simple(SimpleType::A, 2), ivs({{1, 0}, {0, 1}})));
  CHECK(u.outcome == Outcome::Undecided);
  CHECK(contains_word(u.reason, "reflective"));

  Verdict u2 = check_reflective_smooth(make(simple(SimpleType::A, 2), ivs({{2, 0}, {0, 2}})));
  CHECK(u2.outcome == Outcome::Undecided);
}

TEST_CASE("verdict: dispatcher routes and consistency") {
  GroupDatum a1 = simple(SimpleType::A, 1);
  GroupDatum sl2c = GroupDatum::make({{SimpleType::A, 1}}, 1);

  Verdict t = smooth_verdict(make(torus(1), ivs({{2}})));
  CHECK(t.route == Route::Toric);
  CHECK(t.outcome == Outcome::Smooth);

  Verdict g = smooth_verdict(make(a1, ivs({{4}})));
  CHECK(g.route == Route::GSaturated);
  CHECK(g.outcome == Outcome::Smooth);

  Verdict s = smooth_verdict(make(sl2c, ivs({{2, 1}, {0, 2}})));
  CHECK(s.route == Route::Sl2Cx);
  CHECK(s.outcome == Outcome::Smooth);
  REQUIRE(s.family.has_value());
  CHECK(s.family->id == 12);

  Verdict n = smooth_verdict(make(sl2c, ivs({{3, 0}, {0, 1}})));
  CHECK(n.route == Route::Sl2Cx);
  CHECK(n.outcome == Outcome::NotSmooth);
  CHECK(contains_word(n.reason, "families"));

  // two independent planar factors force the reflective route
  GroupDatum prod = GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 2);
  WeightMonoid pm = make(prod, ivs({{1, 0, 3, 0}, {1, 0, -3, 0}, {0, 1, 0, 3}, {0, 1, 0, -3}}));
  REQUIRE_FALSE(pm.is_G_saturated());
  Verdict p = smooth_verdict(pm);
  CHECK(p.route == Route::Reflective);
  CHECK(p.outcome == Outcome::Smooth);
  CHECK(p.sigma_n.size() == 2);

  Verdict und = smooth_verdict(make(simple(SimpleType::A, 2), ivs({{2, 1}, {1, 2}})));
  CHECK(und.route == Route::Reflective);
  CHECK(und.outcome == Outcome::Undecided);
  CHECK(contains_word(und.reason, "no implemented criterion"));

  // monoids reachable both through saturation and the classification agree
  for (auto gens : {ivs({{1, 0}, {0, 1}, {0, -1}}), ivs({{2, 0}, {0, 1}, {0, -1}}),
                    ivs({{2, 0}}), ivs({{3, 0}})}) {
    WeightMonoid m = make(sl2c, gens);
    Verdict v = smooth_verdict(m);
    bool classified = classify_sl2c(m).has_value();
    CHECK((v.outcome == Outcome::Smooth) == classified);
  }
}

TEST_CASE("verdict: preconditions") {
  auto code_of = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.code;
    }
    FAIL("expected throw");
    return Errc::InvalidComponent;
  };
  GroupDatum a1 = simple(SimpleType::A, 1);
  GroupDatum sl2c = GroupDatum::make({{SimpleType::A, 1}}, 1);

  CHECK(code_of([&] { check_gsat_smooth(make(a1, ivs({{2}, {3}}))); }) == Errc::NotNormal);
  CHECK(code_of([&] { smooth_verdict(make(a1, ivs({{2}, {3}}))); }) == Errc::NotNormal);
  CHECK(code_of([&] { check_reflective(make(a1, ivs({{2}, {3}}))); }) == Errc::NotNormal);
  CHECK(code_of([&] { check_reflective_smooth(make(a1, ivs({{2}, {3}}))); }) == Errc::NotNormal);
  CHECK(code_of([&] { check_gsat_smooth(make(sl2c, ivs({{1, 3}, {1, -3}}))); }) ==
        Errc::NotGSaturated);
}
