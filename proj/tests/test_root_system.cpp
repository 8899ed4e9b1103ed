#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "abid/root_system.hpp"

using namespace abid;

namespace {

Coeffs C(std::initializer_list<int> v) { return Coeffs(v); }

// Independent oracle: Delta = W . Pi.  Generates the orbit of the simple
// roots under the simple reflections, using only the Cartan matrix; no
// root-string arithmetic involved.
std::set<Coeffs> orbit_positive_roots(const RootSystem& rs) {
  const int n = rs.rank();
  std::set<Coeffs> orbit;
  std::vector<Coeffs> queue;
  for (int i = 1; i <= n; ++i) {
    Coeffs e(n, 0);
    e[i - 1] = 1;
    orbit.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs c = queue.back();
    queue.pop_back();
    for (int i = 1; i <= n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += c[j] * rs.cartan(j + 1, i);
      Coeffs img = c;
      img[i - 1] -= pair;
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  std::set<Coeffs> positive;
  for (const Coeffs& c : orbit)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.insert(c);
  return positive;
}

int classical_count(SimpleType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("simple type parsing and validity") {
  CHECK(SimpleType::parse("D4") == SimpleType{Family::D, 4});
  CHECK(SimpleType::parse("Dn4") == SimpleType{Family::D, 4});
  CHECK(SimpleType::parse("e6") == SimpleType{Family::E, 6});
  CHECK_THROWS_AS(SimpleType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("H3"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(SimpleType{Family::F, 5}), std::invalid_argument);
  CHECK(canonical_types(8).size() == 32);
}

TEST_CASE("A2: the smallest non-trivial system") {
  RootSystem rs({Family::A, 2});
  REQUIRE(rs.size() == 3);
  CHECK(rs.root(rs.theta()) == C({1, 1}));
  CHECK(rs.pairing(rs.simple(1), rs.simple(2)) == -1);  // off-diagonal Cartan entry
  CHECK(rs.root_sum(rs.simple(1), rs.simple(2)) == rs.theta());
  CHECK(rs.root_sum(rs.theta(), rs.simple(1)) == -1);  // above the highest root
}

TEST_CASE("root catalogue matches the reflection-orbit oracle") {
  for (SimpleType t : {SimpleType{Family::A, 3}, SimpleType{Family::B, 3},
                       SimpleType{Family::C, 2}, SimpleType{Family::D, 4},
                       SimpleType{Family::G, 2}, SimpleType{Family::F, 4}}) {
    RootSystem rs(t);
    std::set<Coeffs> oracle = orbit_positive_roots(rs);
    std::set<Coeffs> built;
    for (int r = 0; r < rs.size(); ++r) built.insert(rs.root(r));
    CHECK_MESSAGE(oracle == built, t.name());
  }
}

TEST_CASE("D4 catalogue") {
  RootSystem rs({Family::D, 4});
  REQUIRE(rs.size() == 12);
  CHECK(rs.root(rs.theta()) == C({1, 2, 1, 1}));  // alpha_2 central
  CHECK(rs.index_of(C({1, 1, 1, 1})) >= 0);
  CHECK(rs.index_of(C({1, 2, 1, 0})) == -1);
  // covering pairs step by one simple root
  for (auto [lo, hi] : rs.cover_relations()) CHECK(rs.height(hi) == rs.height(lo) + 1);
}

TEST_CASE("G2 catalogue") {
  RootSystem rs({Family::G, 2});
  REQUIRE(rs.size() == 6);
  CHECK(rs.root(rs.theta()) == C({3, 2}));
  CHECK(rs.is_long(rs.theta()));
  CHECK(rs.long_mask().count() == 3);
  CHECK(rs.long_simples() == std::vector<int>{2});
}

TEST_CASE("C2 inner products and H") {
  RootSystem rs({Family::C, 2});
  REQUIRE(rs.size() == 4);
  CHECK(rs.root(rs.theta()) == C({2, 1}));
  // scaled form: (a1,a1) = 2, (a2,a2) = 4, (a1,a2) = -2
  CHECK(rs.bilinear(C({1, 0}), C({1, 0})) == 2);
  CHECK(rs.bilinear(C({0, 1}), C({0, 1})) == 4);
  CHECK(rs.bilinear(C({1, 0}), C({0, 1})) == -2);
  CHECK(rs.pairing(C({0, 1}), rs.root(rs.theta())) == 0);  // (a2, theta^vee) = 0
  // H = {a1, a1+a2, theta}
  std::set<Coeffs> h;
  for (int g : rs.heis().indices()) h.insert(rs.root(g));
  CHECK(h == std::set<Coeffs>{C({1, 0}), C({1, 1}), C({2, 1})});
  CHECK(rs.pi_heis() == std::vector<int>{1});
  CHECK_FALSE(rs.theta_fundamental());
}

TEST_CASE("theta coroot pairing is 1 at alpha_theta when theta is fundamental") {
  for (SimpleType t : {SimpleType{Family::B, 3}, SimpleType{Family::D, 5},
                       SimpleType{Family::E, 6}, SimpleType{Family::E, 7},
                       SimpleType{Family::E, 8}, SimpleType{Family::F, 4},
                       SimpleType{Family::G, 2}}) {
    RootSystem rs(t);
    REQUIRE_MESSAGE(rs.theta_fundamental(), t.name());
    int at = rs.alpha_theta();
    CHECK(rs.is_long(rs.simple(at)));
    CHECK(rs.pairing(rs.root(rs.theta()), rs.root(rs.simple(at))) == 1);
    CHECK(rs.pairing(rs.root(rs.simple(at)), rs.root(rs.theta())) == 1);
  }
}

TEST_CASE("invariants across the catalogue up to rank 8") {
  for (SimpleType t : canonical_types(8)) {
    RootSystem rs(t);
    CAPTURE(t.name());
    CHECK(rs.size() == classical_count(t));
    // theta is the unique maximal root
    int above = 0;
    for (int r = 0; r < rs.size(); ++r) {
      if (rs.leq(r, rs.theta())) ++above;
      Coeffs neg = rs.root(r);
      for (int& x : neg) x = -x;
      CHECK(rs.index_of(neg) == -1);
      for (int s = 0; s < rs.size(); ++s) {
        if (rs.root_sum(r, s) >= 0) CHECK(rs.root_sum(r, s) == rs.root_sum(s, r));
        // exactness of the pairing table
        CHECK(2 * rs.bilinear(r, s) == rs.pairing(r, s) * rs.norm2(s));
      }
    }
    CHECK(above == rs.size());
    CHECK(rs.is_long(rs.theta()));
    bool simply_laced = t.family == Family::A || t.family == Family::D || t.family == Family::E;
    CHECK((rs.long_mask().count() == rs.size()) == simply_laced);
    // #(Pi cap H): 2 for A-like labels (A_n with n >= 2), 1 otherwise
    size_t expect_h = (t.family == Family::A && t.rank >= 2) ? 2 : 1;
    CHECK(rs.pi_heis().size() == expect_h);
    bool expect_fundamental =
        !(t.family == Family::A || t.family == Family::C ||
          (t.family == Family::B && t.rank == 2));
    CHECK(rs.theta_fundamental() == expect_fundamental);
  }
}

TEST_CASE("root string bounds: p - q = (mu, gamma^vee)") {
  for (SimpleType t : {SimpleType{Family::B, 3}, SimpleType{Family::G, 2}}) {
    RootSystem rs(t);
    for (int g = 0; g < rs.size(); ++g)
      for (int mu = 0; mu < rs.size(); ++mu) {
        if (g == mu) continue;
        int p = 0, q = 0;
        Coeffs down = rs.root(mu);
        for (;;) {
          for (int j = 0; j < rs.rank(); ++j) down[j] -= rs.root(g)[j];
          if (!rs.is_root(down)) break;
          ++p;
        }
        Coeffs up = rs.root(mu);
        for (;;) {
          for (int j = 0; j < rs.rank(); ++j) up[j] += rs.root(g)[j];
          if (!rs.is_root(up)) break;
          ++q;
        }
        CHECK(p - q == rs.pairing(mu, g));
      }
  }
}

TEST_CASE("leq is the coefficientwise order") {
  RootSystem d4({Family::D, 4});
  CHECK(d4.leq(d4.index_of(C({1, 1, 0, 0})), d4.theta()));
  RootSystem a3({Family::A, 3});
  CHECK_FALSE(a3.leq(a3.simple(1), a3.simple(2)));
  for (SimpleType t : {SimpleType{Family::A, 4}, SimpleType{Family::C, 3}}) {
    RootSystem rs(t);
    for (int r = 0; r < rs.size(); ++r) CHECK(rs.leq(rs.simple(1 + r % rs.rank()), rs.theta()));
  }
}

TEST_CASE("D3 is accepted and looks like A3") {
  RootSystem rs({Family::D, 3});
  CHECK(rs.size() == 6);
  CHECK_FALSE(rs.theta_fundamental());
  CHECK(rs.pi_heis().size() == 2);
}

TEST_CASE("catalogue JSON shape") {
  RootSystem rs({Family::C, 2});
  auto j = rs.catalogue_json();
  CHECK(j["type"] == "C");
  CHECK(j["rank"] == 2);
  CHECK(j["positive_roots"].size() == 4);
  CHECK(j["theta_index"] == 3);
  CHECK(j["cartan"][0][1] == -1);
  CHECK(j["cartan"][1][0] == -2);
}

TEST_CASE("paper E6 permutation is a diagram isomorphism") {
  RootSystem rs({Family::E, 6});
  const auto& p2b = paper_e6_to_bourbaki();
  const auto& b2p = bourbaki_to_paper_e6();
  for (int p = 1; p <= 6; ++p) CHECK(b2p[p2b[p]] == p);
  // paper diagram: chain 1-2-3-4-5 with 6 attached to 3
  auto adj = [&](int p, int q) { return rs.dynkin_adjacent(p2b[p], p2b[q]); };
  CHECK(adj(1, 2));
  CHECK(adj(2, 3));
  CHECK(adj(3, 4));
  CHECK(adj(4, 5));
  CHECK(adj(3, 6));
  CHECK_FALSE(adj(1, 6));
  CHECK_FALSE(adj(5, 6));
  // Pi cap H = {alpha_6} in the paper numbering
  CHECK(rs.pi_heis() == std::vector<int>{p2b[6]});
}
