#include "doctest.h"
#include "test_util.hpp"
#include "wmsmooth/errors.hpp"
#include "wmsmooth/group.hpp"

using namespace wmsmooth;
using wmt::im;
using wmt::iv;

namespace {

GroupDatum simple(SimpleType t, int n, int torus = 0) {
  return GroupDatum::make({{t, n}}, torus);
}

}  // namespace

TEST_CASE("cartan matrices") {
  CHECK(cartan_matrix(SimpleType::A, 1) == im({{2}}));
  CHECK(cartan_matrix(SimpleType::A, 3) == im({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  CHECK(cartan_matrix(SimpleType::B, 2) == im({{2, -1}, {-2, 2}}));
  CHECK(cartan_matrix(SimpleType::B, 3) == im({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  CHECK(cartan_matrix(SimpleType::C, 3) == im({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  CHECK(cartan_matrix(SimpleType::D, 4) ==
        im({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
  CHECK(cartan_matrix(SimpleType::F, 4) ==
        im({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  CHECK(cartan_matrix(SimpleType::G, 2) == im({{2, -3}, {-1, 2}}));

  // E6: chain 1-3-4-5-6 plus 2-4 (one-based).
  IMat e6 = cartan_matrix(SimpleType::E, 6);
  CHECK(e6.at(0, 2) == -1);
  CHECK(e6.at(1, 3) == -1);
  CHECK(e6.at(0, 1) == 0);
  CHECK(e6.at(2, 3) == -1);
  CHECK(e6.at(3, 4) == -1);
  CHECK(e6.at(4, 5) == -1);
  CHECK(e6 == e6.transposed());

  CHECK_THROWS_AS(cartan_matrix(SimpleType::B, 1), Error);
  CHECK_THROWS_AS(cartan_matrix(SimpleType::D, 3), Error);
  CHECK_THROWS_AS(cartan_matrix(SimpleType::E, 5), Error);
  CHECK_THROWS_AS(cartan_matrix(SimpleType::F, 3), Error);
  CHECK_THROWS_AS(cartan_matrix(SimpleType::G, 3), Error);
  CHECK_THROWS_AS(cartan_matrix(SimpleType::A, 0), Error);
}

TEST_CASE("weight coordinates, roots, reflections") {
  GroupDatum a2 = simple(SimpleType::A, 2, 1);
  CHECK(a2.ss_rank() == 2);
  CHECK(a2.weight_dim() == 3);
  CHECK(a2.simple_root(0) == iv({2, -1, 0}));
  CHECK(a2.simple_root(1) == iv({-1, 2, 0}));
  CHECK(a2.root_to_weight(iv({1, 1})) == iv({1, 1, 0}));

  IVec omega1 = iv({1, 0, 5});
  CHECK(a2.dominant(omega1));
  CHECK(a2.reflect(0, omega1) == iv({-1, 1, 5}));
  CHECK_FALSE(a2.dominant(a2.reflect(0, omega1)));
  CHECK(a2.reflect(0, a2.reflect(0, omega1)) == omega1);
  CHECK(GroupDatum::pairing(0, a2.simple_root(0)) == 2);
  CHECK(GroupDatum::pairing(1, a2.simple_root(0)) == -1);

  GroupDatum torus = GroupDatum::make({}, 2);
  CHECK(torus.weight_dim() == 2);
  CHECK(torus.dominant(iv({-3, 7})));

  GroupDatum b2a1 = GroupDatum::make({{SimpleType::B, 2}, {SimpleType::A, 1}}, 0);
  CHECK(b2a1.component_of(0) == 0);
  CHECK(b2a1.component_of(2) == 1);
  CHECK(b2a1.component_start(1) == 2);
  CHECK(b2a1.component_label(0) == "B2");
  CHECK(b2a1.simple_root(2) == iv({0, 0, 2}));
  CHECK(b2a1.cartan().at(1, 0) == -2);
  CHECK_FALSE(b2a1.adjacent(1, 2));
}

TEST_CASE("support types of induced subdiagrams") {
  GroupDatum b3 = simple(SimpleType::B, 3);
  CHECK(support_type(b3, {0, 1, 2}) == "B3");
  CHECK(support_type(b3, {1, 2}) == "B2");
  CHECK(support_type(b3, {0, 1}) == "A2");
  CHECK(support_type(b3, {0, 2}) == "A1xA1");
  CHECK(support_type(b3, {}) == "");

  GroupDatum c3 = simple(SimpleType::C, 3);
  CHECK(support_type(c3, {1, 2}) == "B2");  // two-node double bond, canonical name
  CHECK(support_type(c3, {0, 1, 2}) == "C3");

  GroupDatum a5 = simple(SimpleType::A, 5);
  CHECK(support_type(a5, {0, 2, 3}) == "A1xA2");
  CHECK(support_type(a5, {0, 1, 2, 3, 4}) == "A5");

  GroupDatum d5 = simple(SimpleType::D, 5);
  CHECK(support_type(d5, {0, 1, 2, 3, 4}) == "D5");
  CHECK(support_type(d5, {1, 2, 3, 4}) == "D4");
  CHECK(support_type(d5, {0, 1, 2, 3}) == "A4");

  GroupDatum e6 = simple(SimpleType::E, 6);
  CHECK(support_type(e6, {0, 2, 3, 4, 5}) == "A5");
  CHECK(support_type(e6, {0, 1, 2, 3, 4, 5}) == "E6");
  CHECK(support_type(e6, {1, 2, 3, 4}) == "D4");

  GroupDatum e8 = simple(SimpleType::E, 8);
  CHECK(support_type(e8, {0, 1, 2, 3, 4, 5, 6, 7}) == "E8");
  CHECK(support_type(e8, {0, 1, 2, 3, 4, 5, 6}) == "E7");

  GroupDatum f4 = simple(SimpleType::F, 4);
  CHECK(support_type(f4, {0, 1, 2, 3}) == "F4");
  CHECK(support_type(f4, {0, 1, 2}) == "B3");
  CHECK(support_type(f4, {1, 2, 3}) == "C3");
  CHECK(support_type(f4, {1, 2}) == "B2");

  GroupDatum g2 = simple(SimpleType::G, 2);
  CHECK(support_type(g2, {0, 1}) == "G2");
  CHECK(support_type(g2, {0}) == "A1");

  GroupDatum mixed = GroupDatum::make({{SimpleType::A, 2}, {SimpleType::C, 4}}, 1);
  CHECK(support_type(mixed, {0, 1, 3, 4, 5}) == "A2xC3");
}

TEST_CASE("diagram automorphism counts") {
  auto count = [](const GroupDatum& g) { return diagram_automorphisms(g).size(); };
  CHECK(count(simple(SimpleType::A, 1)) == 1);
  CHECK(count(simple(SimpleType::A, 4)) == 2);
  CHECK(count(simple(SimpleType::B, 3)) == 1);
  CHECK(count(simple(SimpleType::C, 4)) == 1);
  CHECK(count(simple(SimpleType::D, 4)) == 6);
  CHECK(count(simple(SimpleType::D, 5)) == 2);
  CHECK(count(simple(SimpleType::E, 6)) == 2);
  CHECK(count(simple(SimpleType::E, 7)) == 1);
  CHECK(count(simple(SimpleType::F, 4)) == 1);
  CHECK(count(simple(SimpleType::G, 2)) == 1);
  CHECK(count(GroupDatum::make({{SimpleType::A, 2}, {SimpleType::A, 2}}, 0)) == 8);
  CHECK(count(GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 0)) == 2);
  CHECK(count(GroupDatum::make({{SimpleType::A, 1}, {SimpleType::B, 2}}, 3)) == 1);

  // Every returned permutation preserves the Cartan matrix.
  GroupDatum d4 = simple(SimpleType::D, 4);
  for (const std::vector<int>& p : diagram_automorphisms(d4))
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(d4.cartan().at(p[i], p[j]) == d4.cartan().at(i, j));
}

TEST_CASE("diagram embeddings into a node subset") {
  auto all = [](int r) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = i;
    return v;
  };

  // A2 pattern into A3: directed strings i -> i+1 and i+1 -> i.
  GroupDatum a3 = simple(SimpleType::A, 3);
  auto emb = diagram_embeddings(a3, cartan_matrix(SimpleType::A, 2), all(3));
  CHECK(emb.size() == 4);
  for (const auto& phi : emb) CHECK(a3.adjacent(phi[0], phi[1]));

  // Restricting `allowed` drops every image touching the excluded node.
  emb = diagram_embeddings(a3, cartan_matrix(SimpleType::A, 2), {0, 1});
  REQUIRE(emb.size() == 2);
  CHECK(emb[0] != emb[1]);

  // Arrow direction matters: B2's short node maps one way only.
  GroupDatum b3 = simple(SimpleType::B, 3);
  auto b2 = diagram_embeddings(b3, cartan_matrix(SimpleType::B, 2), all(3));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == std::vector<int>{1, 2});
  CHECK(diagram_embeddings(b3, cartan_matrix(SimpleType::C, 2), all(3)).size() == 1);

  // A1 pattern = one node per allowed entry; empty pattern = one empty map.
  CHECK(diagram_embeddings(a3, cartan_matrix(SimpleType::A, 1), {0, 2}).size() == 2);
  CHECK(diagram_embeddings(a3, IMat(0, 0), all(3)).size() == 1);

  // No room: pattern larger than the allowed set.
  CHECK(diagram_embeddings(a3, cartan_matrix(SimpleType::A, 3), {0, 1}).empty());

  // Across components nothing connects, so A2 cannot straddle A1 x A1.
  GroupDatum a1a1 = GroupDatum::make({{SimpleType::A, 1}, {SimpleType::A, 1}}, 0);
  CHECK(diagram_embeddings(a1a1, cartan_matrix(SimpleType::A, 2), all(2)).empty());

  // D4 by triality: A3 embeds via any ordered pair of outer nodes.
  GroupDatum d4 = simple(SimpleType::D, 4);
  CHECK(diagram_embeddings(d4, cartan_matrix(SimpleType::A, 3), all(4)).size() == 6);
}

TEST_CASE("diagram components of a node subset") {
  GroupDatum a5 = simple(SimpleType::A, 5);
  using VV = std::vector<std::vector<int>>;
  CHECK(diagram_components(a5, {0, 1, 2, 3, 4}) == VV{{0, 1, 2, 3, 4}});
  CHECK(diagram_components(a5, {4, 0, 2}) == VV{{0}, {2}, {4}});
  CHECK(diagram_components(a5, {3, 1, 0, 4}) == VV{{0, 1}, {3, 4}});
  CHECK(diagram_components(a5, {}) == VV{});

  GroupDatum d4 = simple(SimpleType::D, 4);
  CHECK(diagram_components(d4, {0, 2, 3}) == VV{{0}, {2}, {3}});
  CHECK(diagram_components(d4, {0, 1, 3}) == VV{{0, 1, 3}});

  GroupDatum two = GroupDatum::make({{SimpleType::A, 2}, {SimpleType::B, 2}}, 1);
  CHECK(diagram_components(two, {0, 1, 2, 3}) == VV{{0, 1}, {2, 3}});
}
