#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wmsmooth/errors.hpp"
#include "wmsmooth/spherical_roots.hpp"

using namespace wmsmooth;
using wmt::iv;

namespace {

GroupDatum simple(SimpleType t, int rank, int torus = 0) {
  return GroupDatum::make({{t, rank}}, torus);
}

std::set<IVec> coeff_set(const GroupDatum& g, const std::vector<SphericalRoot>& v) {
  std::set<IVec> s;
  for (const auto& r : v) s.insert(r.root_coeffs(g.ss_rank()));
  return s;
}

const SphericalRoot* find_rc(const GroupDatum& g, const std::vector<SphericalRoot>& v,
                             const IVec& rc) {
  for (const auto& r : v)
    if (r.root_coeffs(g.ss_rank()) == rc) return &r;
  return nullptr;
}

std::string expected_support(const SphericalRoot& s) {
  int k = static_cast<int>(s.nodes.size());
  if (s.pattern == "A1" || s.pattern == "A1-doubled") return "A1";
  if (s.pattern == "A1xA1") return "A1xA1";
  if (s.pattern == "A-string") return "A" + std::to_string(k);
  if (s.pattern == "A3-mid") return "A3";
  if (s.pattern == "B-string" || s.pattern == "B-doubled") return "B" + std::to_string(k);
  if (s.pattern == "B3-special") return "B3";
  if (s.pattern == "C-string") return "C" + std::to_string(k);
  if (s.pattern == "D-string") return "D" + std::to_string(k);
  if (s.pattern == "F4") return "F4";
  return "G2";
}

std::vector<std::string> patterns_of(const std::vector<SphericalRoot>& v) {
  std::vector<std::string> p;
  for (const auto& r : v) p.push_back(r.pattern);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("spherical root counts per group") {
  struct Row {
    GroupDatum g;
    size_t count;
  };
  const Row rows[] = {
      {simple(SimpleType::A, 1), 2},  {simple(SimpleType::A, 2), 5},
      {simple(SimpleType::A, 3), 11}, {simple(SimpleType::A, 4), 19},
      {simple(SimpleType::B, 2), 6},  {simple(SimpleType::C, 2), 6},
      {simple(SimpleType::B, 3), 13}, {simple(SimpleType::C, 3), 11},
      {simple(SimpleType::D, 4), 23}, {simple(SimpleType::D, 5), 34},
      {simple(SimpleType::E, 6), 47}, {simple(SimpleType::F, 4), 20},
      {simple(SimpleType::G, 2), 6},
      {GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 0), 5},
      {GroupDatum::make({{SimpleType::A, 2}, {SimpleType::B, 2}}, 1), 15},
      {simple(SimpleType::A, 1, 2), 2},
      {GroupDatum::make({}, 3), 0},
  };
  for (const auto& row : rows) {
    auto roots = spherically_closed_roots(row.g);
    CAPTURE(row.g.component_label(0));
    CHECK(roots.size() == row.count);
    CHECK(coeff_set(row.g, roots).size() == roots.size());  // no duplicates
  }
}

TEST_CASE("identical root sets for the two rank-2 double-bond conventions") {
  auto b2 = simple(SimpleType::B, 2);
  auto c2 = simple(SimpleType::C, 2);
  CHECK(coeff_set(b2, spherically_closed_roots(b2)) ==
        coeff_set(c2, spherically_closed_roots(c2)));
}

TEST_CASE("spot contents") {
  SUBCASE("G2") {
    auto g = simple(SimpleType::G, 2);
    auto v = spherically_closed_roots(g);
    auto* lng = find_rc(g, v, iv({4, 2}));
    REQUIRE(lng != nullptr);
    CHECK(lng->pattern == "G2-long");
    CHECK(lng->nodes == std::vector<int>{0, 1});
    auto* sum = find_rc(g, v, iv({1, 1}));
    REQUIRE(sum != nullptr);
    CHECK(sum->pattern == "G2-sum");
    CHECK(find_rc(g, v, iv({3, 2})) == nullptr);  // long dominant root is not in the list
  }
  SUBCASE("B3") {
    auto g = simple(SimpleType::B, 3);
    auto v = spherically_closed_roots(g);
    auto* sp = find_rc(g, v, iv({1, 2, 3}));
    REQUIRE(sp != nullptr);
    CHECK(sp->pattern == "B3-special");
    CHECK(sp->nodes == std::vector<int>{0, 1, 2});
    CHECK(find_rc(g, v, iv({1, 1, 1}))->pattern == "B-string");
    CHECK(find_rc(g, v, iv({2, 2, 2}))->pattern == "B-doubled");
    CHECK(find_rc(g, v, iv({0, 1, 1}))->pattern == "B-string");
    CHECK(find_rc(g, v, iv({1, 1, 0}))->pattern == "A-string");
    CHECK(find_rc(g, v, iv({1, 2, 1})) == nullptr);  // no C-shape inside B3
  }
  SUBCASE("C3") {
    auto g = simple(SimpleType::C, 3);
    auto v = spherically_closed_roots(g);
    auto* cs = find_rc(g, v, iv({1, 2, 1}));
    REQUIRE(cs != nullptr);
    CHECK(cs->pattern == "C-string");
    CHECK(cs->nodes == std::vector<int>{0, 1, 2});
    auto* bs = find_rc(g, v, iv({0, 1, 1}));
    REQUIRE(bs != nullptr);
    CHECK(bs->pattern == "B-string");
    CHECK(bs->nodes == std::vector<int>{2, 1});  // long end of the pair comes first
    CHECK(find_rc(g, v, iv({1, 2, 3})) == nullptr);
  }
  SUBCASE("F4") {
    auto g = simple(SimpleType::F, 4);
    auto v = spherically_closed_roots(g);
    CHECK(find_rc(g, v, iv({1, 2, 3, 2}))->pattern == "F4");
    auto* cs = find_rc(g, v, iv({0, 1, 2, 1}));
    REQUIRE(cs != nullptr);
    CHECK(cs->pattern == "C-string");
    CHECK(cs->nodes == std::vector<int>{3, 2, 1});
    CHECK(find_rc(g, v, iv({1, 2, 3, 0}))->pattern == "B3-special");
    CHECK(find_rc(g, v, iv({1, 1, 1, 0}))->pattern == "B-string");
  }
  SUBCASE("D4 fork orientations") {
    auto g = simple(SimpleType::D, 4);
    auto v = spherically_closed_roots(g);
    for (const auto& rc : {iv({2, 2, 1, 1}), iv({1, 2, 2, 1}), iv({1, 2, 1, 2})}) {
      auto* r = find_rc(g, v, rc);
      REQUIRE(r != nullptr);
      CHECK(r->pattern == "D-string");
    }
    CHECK(find_rc(g, v, iv({2, 2, 2, 1})) == nullptr);
  }
  SUBCASE("A3 and A4 middles") {
    auto a3 = simple(SimpleType::A, 3);
    auto v3 = spherically_closed_roots(a3);
    CHECK(find_rc(a3, v3, iv({1, 2, 1}))->pattern == "A3-mid");
    CHECK(find_rc(a3, v3, iv({1, 0, 1}))->pattern == "A1xA1");
    auto a4 = simple(SimpleType::A, 4);
    auto v4 = spherically_closed_roots(a4);
    CHECK(find_rc(a4, v4, iv({1, 2, 1, 0}))->pattern == "A3-mid");
    CHECK(find_rc(a4, v4, iv({0, 1, 2, 1}))->pattern == "A3-mid");
    CHECK(find_rc(a4, v4, iv({2, 1, 2, 0})) == nullptr);
  }
}

TEST_CASE("structural properties of the enumeration") {
  std::vector<GroupDatum> groups = {
      simple(SimpleType::A, 4),
      simple(SimpleType::B, 3),
      simple(SimpleType::C, 3),
      simple(SimpleType::D, 5),
      simple(SimpleType::E, 6),
      simple(SimpleType::F, 4),
      simple(SimpleType::G, 2),
      GroupDatum::make({{SimpleType::A, 2}, {SimpleType::B, 2}}, 1),
  };
  for (const auto& g : groups) {
    auto roots = spherically_closed_roots(g);
    CHECK(roots == spherically_closed_roots(g));  // deterministic
    for (const auto& s : roots) {
      CAPTURE(s.pattern);
      REQUIRE(s.nodes.size() == s.coeffs.size());
      for (const auto& c : s.coeffs) CHECK(c >= 1);
      CHECK(s.weight == g.root_to_weight(s.root_coeffs(g.ss_rank())));
      std::vector<int> sorted_nodes = s.nodes;
      std::sort(sorted_nodes.begin(), sorted_nodes.end());
      CHECK(support_type(g, sorted_nodes) == expected_support(s));
    }
  }
}

TEST_CASE("compatibility with a parabolic set") {
  SUBCASE("B-string needs inner nodes inside, short end outside") {
    auto g = simple(SimpleType::B, 3);
    auto v = spherically_closed_roots(g);
    const auto& s = *find_rc(g, v, iv({1, 1, 1}));
    CHECK(compatible_with_sp(g, s, {1}));
    CHECK(compatible_with_sp(g, s, {0, 1}));
    CHECK_FALSE(compatible_with_sp(g, s, {1, 2}));
    CHECK_FALSE(compatible_with_sp(g, s, {}));
    const auto& tail = *find_rc(g, v, iv({0, 1, 1}));  // two-node version
    CHECK(compatible_with_sp(g, tail, {}));
    CHECK(compatible_with_sp(g, tail, {0}));
    CHECK_FALSE(compatible_with_sp(g, tail, {2}));
  }
  SUBCASE("C-string needs the tail from the third node on") {
    auto g = simple(SimpleType::C, 3);
    auto v = spherically_closed_roots(g);
    const auto& s = *find_rc(g, v, iv({1, 2, 1}));
    CHECK(compatible_with_sp(g, s, {2}));
    CHECK(compatible_with_sp(g, s, {1, 2}));
    CHECK_FALSE(compatible_with_sp(g, s, {}));
    CHECK_FALSE(compatible_with_sp(g, s, {0, 1}));
  }
  SUBCASE("generic rule uses the vanishing pairings") {
    auto a3 = simple(SimpleType::A, 3);
    auto v3 = spherically_closed_roots(a3);
    const auto& mid = *find_rc(a3, v3, iv({1, 2, 1}));  // ends pair to zero
    CHECK(compatible_with_sp(a3, mid, {0, 2}));
    CHECK(compatible_with_sp(a3, mid, {0, 1, 2}));
    CHECK_FALSE(compatible_with_sp(a3, mid, {0}));
    auto a2 = simple(SimpleType::A, 2);
    auto v2 = spherically_closed_roots(a2);
    const auto& str = *find_rc(a2, v2, iv({1, 1}));  // no vanishing pairings
    CHECK(compatible_with_sp(a2, str, {}));
    CHECK(compatible_with_sp(a2, str, {0}));
    auto g2 = simple(SimpleType::G, 2);
    auto vg = spherically_closed_roots(g2);
    const auto& lng = *find_rc(g2, vg, iv({4, 2}));  // second node pairs to zero
    CHECK(compatible_with_sp(g2, lng, {1}));
    CHECK_FALSE(compatible_with_sp(g2, lng, {}));
    const auto& sum = *find_rc(g2, vg, iv({1, 1}));
    CHECK(compatible_with_sp(g2, sum, {}));
    auto b2 = simple(SimpleType::B, 2);
    auto vb = spherically_closed_roots(b2);
    const auto& dbl = *find_rc(b2, vb, iv({2, 2}));  // doubled pair: short node vanishes
    CHECK(compatible_with_sp(b2, dbl, {1}));
    CHECK_FALSE(compatible_with_sp(b2, dbl, {}));
  }
}

TEST_CASE("adapted roots of saturated monoids") {
  auto a1 = simple(SimpleType::A, 1);
  auto check_patterns = [](const WeightMonoid& m, const std::vector<std::string>& want) {
    auto got = patterns_of(sigma_n_gsat(m));
    CHECK(got == want);
    CHECK(sigma_n(m) == sigma_n_gsat(m));  // general criteria agree on saturated input
  };

  check_patterns(WeightMonoid::make(a1, {iv({1})}), {});
  check_patterns(WeightMonoid::make(a1, {iv({2})}), {"A1-doubled"});
  check_patterns(WeightMonoid::make(a1, {iv({3})}), {});
  check_patterns(WeightMonoid::make(a1, {iv({4})}), {"A1-doubled"});

  auto a2 = simple(SimpleType::A, 2);
  check_patterns(WeightMonoid::make(a2, {iv({1, 1})}), {"A-string"});
  check_patterns(WeightMonoid::make(a2, {iv({1, 0}), iv({0, 1})}), {"A-string"});
  check_patterns(WeightMonoid::make(a2, {iv({1, 0})}), {});

  auto b2 = simple(SimpleType::B, 2);
  check_patterns(WeightMonoid::make(b2, {iv({1, 0}), iv({0, 1})}), {"B-string"});

  auto g2 = simple(SimpleType::G, 2);
  check_patterns(WeightMonoid::make(g2, {iv({1, 0}), iv({0, 1})}), {"G2-sum"});
  check_patterns(WeightMonoid::make(g2, {iv({2, 0})}), {"G2-long"});
  check_patterns(WeightMonoid::make(g2, {iv({1, 0})}), {"G2-long"});

  auto a11 = GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 0);
  check_patterns(WeightMonoid::make(a11, {iv({1, 1})}), {"A1xA1"});
  check_patterns(WeightMonoid::make(a11, {iv({3, 3})}), {});

  auto a1t = simple(SimpleType::A, 1, 1);
  check_patterns(WeightMonoid::make(a1t, {iv({2, 0}), iv({0, 1}), iv({0, -1})}),
                 {"A1-doubled"});
  check_patterns(WeightMonoid::make(a1t, {iv({0, 1}), iv({0, -1})}), {});

  SUBCASE("rejects unsaturated monoids") {
    CHECK_THROWS_AS((void)sigma_n_gsat(WeightMonoid::make(a1t, {iv({1, 1}), iv({1, -1})})),
                    Error);
    CHECK_THROWS_AS((void)sigma_n_gsat(WeightMonoid::make(a1t, {iv({2, 0}), iv({1, 1})})),
                    Error);
    auto torus = GroupDatum::make({}, 1);
    CHECK_THROWS_AS((void)sigma_n_gsat(WeightMonoid::make(torus, {iv({1})})), Error);
    try {
      (void)sigma_n_gsat(WeightMonoid::make(a1t, {iv({1, 1}), iv({1, -1})}));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code == Errc::NotGSaturated);
    }
  }
}

TEST_CASE("adapted roots of normal monoids") {
  auto a1t = simple(SimpleType::A, 1, 1);

  SUBCASE("a simple root can be adapted when the monoid is not saturated") {
    auto m = WeightMonoid::make(a1t, {iv({1, 1}), iv({1, -1})});
    auto v = sigma_n(m);
    REQUIRE(v.size() == 1);
    CHECK(v[0].pattern == "A1");
    CHECK(v[0].nodes == std::vector<int>{0});

    auto m2 = WeightMonoid::make(a1t, {iv({2, 0}), iv({1, 1})});
    auto v2 = sigma_n(m2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].pattern == "A1");
  }

  SUBCASE("torus monoids carry no roots") {
    auto torus = GroupDatum::make({}, 1);
    CHECK(sigma_n(WeightMonoid::make(torus, {iv({1})})).empty());
  }

  SUBCASE("rejects non-normal monoids") {
    auto torus = GroupDatum::make({}, 1);
    auto m = WeightMonoid::make(torus, {iv({2}), iv({3})});
    try {
      (void)sigma_n(m);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code == Errc::NotNormal);
    }
  }
}

TEST_CASE("largest nonpositive coroot support") {
  auto a1 = simple(SimpleType::A, 1);
  auto a2 = simple(SimpleType::A, 2);
  auto b2 = simple(SimpleType::B, 2);
  auto g2 = simple(SimpleType::G, 2);
  auto a1t = simple(SimpleType::A, 1, 1);

  auto sg = [](const WeightMonoid& m) { return s_gamma(m, sigma_n(m)); };

  CHECK(sg(WeightMonoid::make(a1, {iv({1})})) == std::vector<int>{0});
  CHECK(sg(WeightMonoid::make(a1, {iv({2})})) == std::vector<int>{});
  CHECK(sg(WeightMonoid::make(a1, {iv({3})})) == std::vector<int>{0});

  CHECK(sg(WeightMonoid::make(a2, {iv({1, 0})})) == std::vector<int>{0, 1});
  CHECK(sg(WeightMonoid::make(a2, {iv({1, 1})})) == std::vector<int>{});
  CHECK(sg(WeightMonoid::make(a2, {iv({1, 0}), iv({0, 1})})) == std::vector<int>{});

  CHECK(sg(WeightMonoid::make(b2, {iv({1, 0}), iv({0, 1})})) == std::vector<int>{1});
  CHECK(sg(WeightMonoid::make(g2, {iv({1, 0}), iv({0, 1})})) == std::vector<int>{0, 1});
  CHECK(sg(WeightMonoid::make(g2, {iv({2, 0})})) == std::vector<int>{1});

  CHECK(sg(WeightMonoid::make(a1t, {iv({2, 0}), iv({0, 1}), iv({0, -1})})) ==
        std::vector<int>{});

  SUBCASE("vanishing nodes always make it in") {
    for (auto m : {WeightMonoid::make(a2, {iv({1, 0})}),
                   WeightMonoid::make(g2, {iv({2, 0})}),
                   WeightMonoid::make(b2, {iv({0, 1})})}) {
      auto s = sg(m);
      for (int p : m.sp) CHECK(std::find(s.begin(), s.end(), p) != s.end());
    }
  }
}
