#include <doctest.h>

#include <algorithm>
#include <set>

#include "abid/ideals.hpp"
#include "abid/weyl.hpp"

using namespace abid;

namespace {

Coeffs C(std::initializer_list<int> v) { return Coeffs(v); }

RootSet make(const RootSystem& rs, std::initializer_list<Coeffs> roots) {
  RootSet s;
  for (const Coeffs& c : roots) {
    int idx = rs.index_of(c);
    REQUIRE(idx >= 0);
    s.set(idx);
  }
  return s;
}

std::set<RootSet> as_set(const std::vector<RootSet>& v) { return {v.begin(), v.end()}; }

// W-Catalan numbers = number of upper ideals of the root poset.
int w_catalan(SimpleType t) {
  if (t.family == Family::A) {
    // Catalan(n+1)
    long c = 1;
    for (int k = 1; k <= t.rank + 1; ++k) c = c * 2 * (2 * k - 1) / (k + 1);
    return static_cast<int>(c);
  }
  if (t.family == Family::B || t.family == Family::C) {
    long c = 1;  // binom(2n, n)
    for (int k = 1; k <= t.rank; ++k) c = c * (t.rank + k) / k;
    return static_cast<int>(c);
  }
  if (t.family == Family::D && t.rank == 4) return 50;
  if (t.family == Family::G) return 8;
  if (t.family == Family::F) return 105;
  return -1;
}

}  // namespace

TEST_CASE("ideal predicates") {
  RootSystem rs({Family::C, 2});
  CHECK(is_upper_ideal(rs, RootSet{}));
  CHECK(is_abelian_ideal(rs, RootSet{}));
  RootSet not_upper = make(rs, {C({1, 0})});
  CHECK_FALSE(is_upper_ideal(rs, not_upper));
  RootSet non_abelian = make(rs, {C({2, 1}), C({1, 1}), C({1, 0})});
  CHECK(is_upper_ideal(rs, non_abelian));
  CHECK_FALSE(is_abelian_ideal(rs, non_abelian));  // a1 + (a1+a2) = theta
  CHECK(upward_closure(rs, make(rs, {C({1, 0})})) ==
        make(rs, {C({1, 0}), C({1, 1}), C({2, 1})}));
}

TEST_CASE("enumerate_abelian on the smallest types") {
  SUBCASE("A1") {
    RootSystem rs({Family::A, 1});
    auto ideals = enumerate_abelian(rs);
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0].none());
    CHECK(ideals[1] == make(rs, {C({1})}));
  }
  SUBCASE("A2") {
    RootSystem rs({Family::A, 2});
    auto got = as_set(enumerate_abelian(rs));
    std::set<RootSet> want{RootSet{}, make(rs, {C({1, 1})}),
                           make(rs, {C({1, 1}), C({1, 0})}),
                           make(rs, {C({1, 1}), C({0, 1})})};
    CHECK(got == want);
  }
  SUBCASE("C2") {
    RootSystem rs({Family::C, 2});
    auto got = as_set(enumerate_abelian(rs));
    std::set<RootSet> want{RootSet{}, make(rs, {C({2, 1})}),
                           make(rs, {C({2, 1}), C({1, 1})}),
                           make(rs, {C({2, 1}), C({1, 1}), C({0, 1})})};
    CHECK(got == want);
  }
}

TEST_CASE("Peterson count across the catalogue") {
  for (SimpleType t : canonical_types(8)) {
    RootSystem rs(t);
    CHECK_MESSAGE(enumerate_abelian(rs).size() == (size_t(1) << t.rank), t.name());
  }
}

TEST_CASE("every enumerated set is an abelian ideal (E7 spot check)") {
  RootSystem rs({Family::E, 7});
  for (const AbelianIdeal& a : enumerate_abelian(rs)) CHECK(is_abelian_ideal(rs, a));
}

TEST_CASE("frontier") {
  SUBCASE("empty and full") {
    RootSystem rs({Family::A, 3});
    Frontier fe = frontier(rs, RootSet{});
    CHECK(fe.min_roots.empty());
    CHECK(fe.max_complement == std::vector<int>{rs.theta()});
    RootSet full;
    for (int g = 0; g < rs.size(); ++g) full.set(g);
    Frontier ff = frontier(rs, full);
    CHECK(ff.max_complement.empty());
    std::set<int> simples{rs.simple(1), rs.simple(2), rs.simple(3)};
    CHECK(std::set<int>(ff.min_roots.begin(), ff.min_roots.end()) == simples);
  }
  SUBCASE("the five-root D4 ideal") {
    RootSystem rs({Family::D, 4});
    RootSet ideal = make(rs, {C({1, 1, 1, 0}), C({1, 1, 0, 1}), C({0, 1, 1, 1}),
                              C({1, 1, 1, 1}), C({1, 2, 1, 1})});
    Frontier f = frontier(rs, ideal);
    std::set<int> mins{rs.index_of(C({1, 1, 1, 0})), rs.index_of(C({1, 1, 0, 1})),
                       rs.index_of(C({0, 1, 1, 1}))};
    CHECK(std::set<int>(f.min_roots.begin(), f.min_roots.end()) == mins);
    std::set<int> maxc{rs.index_of(C({1, 1, 0, 0})), rs.index_of(C({0, 1, 1, 0})),
                       rs.index_of(C({0, 1, 0, 1}))};
    CHECK(std::set<int>(f.max_complement.begin(), f.max_complement.end()) == maxc);
  }
}

TEST_CASE("fibers of small types") {
  SUBCASE("A2: three singleton fibres") {
    RootSystem rs({Family::A, 2});
    auto fib = fibers(rs);
    REQUIRE(fib.size() == 3);
    for (const auto& [mu, f] : fib) CHECK(f.ideals.size() == 1);
  }
  SUBCASE("C2: fibre structure") {
    RootSystem rs({Family::C, 2});
    auto fib = fibers(rs);
    REQUIRE(fib.size() == 2);  // long positive roots: theta and a2
    const Fiber& ftheta = fib.at(rs.theta());
    CHECK(ftheta.ideals.size() == 1);
    CHECK(ftheta.min_ideal == make(rs, {C({2, 1})}));
    const Fiber& fa2 = fib.at(rs.index_of(C({0, 1})));
    CHECK(fa2.ideals.size() == 2);
    CHECK(fa2.min_ideal == make(rs, {C({2, 1}), C({1, 1})}));
    CHECK(fa2.max_ideal == make(rs, {C({2, 1}), C({1, 1}), C({0, 1})}));
  }
  SUBCASE("the fibre of theta always has min {theta}") {
    for (SimpleType t : canonical_types(6)) {
      RootSystem rs(t);
      auto fib = fibers(rs);
      RootSet just_theta;
      just_theta.set(rs.theta());
      CHECK_MESSAGE(fib.at(rs.theta()).min_ideal == just_theta, t.name());
    }
  }
}

TEST_CASE("fiber min/max bracket every member") {
  for (SimpleType t : canonical_types(8)) {
    RootSystem rs(t);
    for (const auto& [mu, f] : fibers(rs)) {
      for (const AbelianIdeal& a : f.ideals) {
        CHECK(f.min_ideal.is_subset_of(a));
        CHECK(a.is_subset_of(f.max_ideal));
      }
      // singleton iff (theta, mu) != 0
      CHECK((f.ideals.size() == 1) == (rs.bilinear(mu, rs.theta()) != 0));
    }
  }
}

TEST_CASE("ideal_min_from_mover") {
  SUBCASE("mu = theta") {
    RootSystem rs({Family::B, 3});
    RootSet just_theta;
    just_theta.set(rs.theta());
    CHECK(ideal_min_from_mover(rs, rs.theta()) == just_theta);
  }
  SUBCASE("C2, mu = a2") {
    RootSystem rs({Family::C, 2});
    CHECK(ideal_min_from_mover(rs, rs.index_of(C({0, 1}))) ==
          make(rs, {C({2, 1}), C({1, 1})}));
  }
  SUBCASE("matches the fibre minimum everywhere (rank <= 8)") {
    for (SimpleType t : canonical_types(8)) {
      RootSystem rs(t);
      auto fib = fibers(rs);
      for (int mu : rs.long_positive_roots())
        CHECK(ideal_min_from_mover(rs, mu) == fib.at(mu).min_ideal);
    }
  }
  SUBCASE("root-minimal ideals are exactly those inside H") {
    for (SimpleType t : canonical_types(6)) {
      RootSystem rs(t);
      for (const auto& [mu, f] : fibers(rs))
        for (const AbelianIdeal& a : f.ideals)
          CHECK((a == f.min_ideal) == a.is_subset_of(rs.heis()));
    }
  }
}

TEST_CASE("upper-ideal enumeration hits the W-Catalan count") {
  for (SimpleType t : canonical_types(4)) {
    RootSystem rs(t);
    auto upper = enumerate_upper(rs);
    CHECK_MESSAGE(static_cast<int>(upper.size()) == w_catalan(t), t.name());
    for (const UpperIdeal& u : upper) CHECK(is_upper_ideal(rs, u));
    CHECK(as_set(upper).size() == upper.size());  // duplicate-free
  }
}

TEST_CASE("upper-ideal sampling is deterministic and valid") {
  RootSystem rs({Family::B, 5});
  auto a = sample_upper(rs, 42, 200);
  auto b = sample_upper(rs, 42, 200);
  CHECK(a == b);
  auto c = sample_upper(rs, 43, 200);
  CHECK(a != c);
  for (const UpperIdeal& u : a) CHECK(is_upper_ideal(rs, u));
}

TEST_CASE("ideal JSON record") {
  RootSystem rs({Family::A, 2});
  RootSet ideal = make(rs, {C({1, 1}), C({1, 0})});
  auto j = ideal_json(rs, ideal, rootlet(rs, ideal), true, true);
  CHECK(j["dim"] == 2);
  CHECK(j["roots"].size() == 2);
  CHECK(j["rootlet"] == nlohmann::json(C({1, 0})));
  CHECK(j["is_fiber_min"] == true);
  auto empty = ideal_json(rs, RootSet{}, std::nullopt, false, false);
  CHECK(empty["rootlet"].is_null());
}
