#include <doctest.h>

#include <algorithm>
#include <set>

#include "abid/normalisers.hpp"
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

RootSet full(const RootSystem& rs) {
  RootSet s;
  for (int g = 0; g < rs.size(); ++g) s.set(g);
  return s;
}

const auto kMethods = {NormaliserMethod::bracket, NormaliserMethod::via_min,
                       NormaliserMethod::via_max, NormaliserMethod::minuscule};

}  // namespace

TEST_CASE("SimpleSubset conversions are involutive") {
  SimpleSubset s = SimpleSubset::excluded_of({1, 3});
  CHECK(s.as_levi(4).indices() == std::vector<int>{2, 4});
  CHECK(s.as_levi(4).as_excluded(4) == s);
  CHECK(s.as_excluded(4) == s);
  CHECK(SimpleSubset::levi_of({2, 4}).as_excluded(4).indices() == std::vector<int>{1, 3});
}

TEST_CASE("normaliser of the empty and tiny ideals") {
  RootSystem rs({Family::A, 2});
  SUBCASE("empty ideal: the normaliser is all of g") {
    for (auto m : {NormaliserMethod::bracket, NormaliserMethod::via_min,
                   NormaliserMethod::via_max, NormaliserMethod::minuscule})
      CHECK(normaliser(rs, RootSet{}, m).indices() == std::vector<int>{1, 2});
  }
  SUBCASE("{theta}: Levi simples are the theta-orthogonal ones") {
    RootSet ideal;
    ideal.set(rs.theta());
    for (auto m : kMethods) CHECK(normaliser(rs, ideal, m).indices().empty());
    RootSystem d4({Family::D, 4});
    RootSet th;
    th.set(d4.theta());
    for (auto m : kMethods)
      CHECK(normaliser(d4, th, m).indices() == std::vector<int>{1, 3, 4});
  }
  SUBCASE("A2 excluded sets from the paper walkthrough") {
    RootSet i1 = make(rs, {C({1, 1}), C({1, 0})});
    CHECK(normaliser(rs, i1, NormaliserMethod::bracket).as_excluded(2).indices() ==
          std::vector<int>{1});
    RootSet i2;
    i2.set(rs.theta());
    CHECK(normaliser(rs, i2, NormaliserMethod::bracket).as_excluded(2).indices() ==
          std::vector<int>{1, 2});
  }
}

TEST_CASE("D4: the five-root ideal has S = {1,3,4}") {
  RootSystem rs({Family::D, 4});
  RootSet ideal = make(rs, {C({1, 1, 1, 0}), C({1, 1, 0, 1}), C({0, 1, 1, 1}),
                            C({1, 1, 1, 1}), C({1, 2, 1, 1})});
  for (auto m : kMethods)
    CHECK(normaliser(rs, ideal, m).as_excluded(4).indices() == std::vector<int>{1, 3, 4});
}

TEST_CASE("domain errors") {
  RootSystem rs({Family::C, 2});
  SUBCASE("via_max rejects the full ideal") {
    CHECK_THROWS_AS(static_cast<void>(normaliser(rs, full(rs), NormaliserMethod::via_max)),
                    std::domain_error);
    CHECK(normaliser(rs, full(rs), NormaliserMethod::bracket).indices().empty());
  }
  SUBCASE("minuscule rejects non-abelian ideals") {
    RootSet upper = make(rs, {C({2, 1}), C({1, 1}), C({1, 0})});
    CHECK_THROWS_AS(static_cast<void>(normaliser(rs, upper, NormaliserMethod::minuscule)),
                    std::domain_error);
  }
  SUBCASE("non-ideals are rejected") {
    RootSet stray = make(rs, {C({1, 0})});
    CHECK_THROWS_AS(static_cast<void>(normaliser(rs, stray, NormaliserMethod::bracket)),
                    std::invalid_argument);
  }
}

TEST_CASE("all methods agree on abelian ideals (rank <= 5)") {
  for (SimpleType t : canonical_types(5)) {
    RootSystem rs(t);
    RootSet u = full(rs);
    for (const AbelianIdeal& a : enumerate_abelian(rs)) {
      SimpleSubset ref = normaliser(rs, a, NormaliserMethod::bracket);
      CHECK(normaliser(rs, a, NormaliserMethod::via_min) == ref);
      CHECK(normaliser(rs, a, NormaliserMethod::minuscule) == ref);
      if (!(a == u)) CHECK(normaliser(rs, a, NormaliserMethod::via_max) == ref);
    }
  }
}

TEST_CASE("bracket, via_min, via_max agree on every upper ideal (rank <= 4)") {
  for (SimpleType t : canonical_types(4)) {
    RootSystem rs(t);
    RootSet u = full(rs);
    for (const UpperIdeal& ideal : enumerate_upper(rs)) {
      SimpleSubset ref = normaliser(rs, ideal, NormaliserMethod::bracket);
      CHECK(normaliser(rs, ideal, NormaliserMethod::via_min) == ref);
      if (!(ideal == u)) CHECK(normaliser(rs, ideal, NormaliserMethod::via_max) == ref);
    }
  }
}

TEST_CASE("predicted_levi_min") {
  SUBCASE("mu = theta") {
    for (SimpleType t : {SimpleType{Family::A, 4}, SimpleType{Family::F, 4}}) {
      RootSystem rs(t);
      SimpleSubset p = predicted_levi_min(rs, rs.theta());
      for (int i = 1; i <= rs.rank(); ++i)
        CHECK(p.contains(i) == (rs.bilinear(rs.simple(i), rs.theta()) == 0));
    }
  }
  SUBCASE("A_n interior simples: S = {a1, ai, an}") {
    for (int n : {3, 4, 5, 6, 7, 8}) {
      RootSystem rs({Family::A, n});
      for (int i = 2; i <= n - 1; ++i) {
        auto s = predicted_levi_min(rs, rs.simple(i)).as_excluded(n).indices();
        CHECK(s == std::vector<int>{1, i, n});
      }
    }
  }
  SUBCASE("A_n endpoints: S = {a1} resp. {an}") {
    RootSystem rs({Family::A, 5});
    CHECK(predicted_levi_min(rs, rs.simple(1)).as_excluded(5).indices() ==
          std::vector<int>{1});
    CHECK(predicted_levi_min(rs, rs.simple(5)).as_excluded(5).indices() ==
          std::vector<int>{5});
    // a longer H-root: mu = a1+a2+a3 has S = {a1, a3}
    CHECK(predicted_levi_min(rs, rs.index_of(C({1, 1, 1, 0, 0}))).as_excluded(5).indices() ==
          std::vector<int>{1, 3});
  }
  SUBCASE("alpha_theta: the excluded set is its Dynkin neighbourhood") {
    for (SimpleType t : {SimpleType{Family::D, 4}, SimpleType{Family::E, 6},
                         SimpleType{Family::F, 4}, SimpleType{Family::G, 2},
                         SimpleType{Family::B, 4}}) {
      RootSystem rs(t);
      int at = rs.alpha_theta();
      REQUIRE(at > 0);
      auto s = predicted_levi_min(rs, rs.simple(at)).as_excluded(rs.rank());
      for (int i = 1; i <= rs.rank(); ++i) CHECK(s.contains(i) == rs.dynkin_adjacent(i, at));
    }
  }
  SUBCASE("matches the computed normaliser for every long root (rank <= 6)") {
    for (SimpleType t : canonical_types(6)) {
      RootSystem rs(t);
      auto fib = fibers(rs);
      for (int mu : rs.long_positive_roots())
        CHECK(predicted_levi_min(rs, mu) ==
              normaliser(rs, fib.at(mu).min_ideal, NormaliserMethod::via_min));
    }
  }
  SUBCASE("short roots are rejected") {
    RootSystem rs({Family::B, 3});
    CHECK_THROWS_AS(static_cast<void>(predicted_levi_min(rs, rs.simple(3))),
                    std::invalid_argument);
  }
}

TEST_CASE("predicted_levi_max") {
  SUBCASE("A_n interior: S_max = {ai}") {
    for (int n : {3, 5, 8}) {
      RootSystem rs({Family::A, n});
      for (int i = 2; i <= n - 1; ++i)
        CHECK(predicted_levi_max(rs, i).as_excluded(n).indices() == std::vector<int>{i});
    }
  }
  SUBCASE("D4, alpha_1: S_max = {a1}") {
    RootSystem rs({Family::D, 4});
    CHECK(predicted_levi_max(rs, 1).as_excluded(4).indices() == std::vector<int>{1});
  }
  SUBCASE("C_n, alpha_n: S_max = {an}") {
    for (int n : {2, 4, 8}) {
      RootSystem rs({Family::C, n});
      CHECK(predicted_levi_max(rs, n).as_excluded(n).indices() == std::vector<int>{n});
    }
  }
  SUBCASE("matches the computed normaliser for every long simple (rank <= 8)") {
    for (SimpleType t : canonical_types(8)) {
      RootSystem rs(t);
      auto fib = fibers(rs);
      RootSet u = full(rs);
      for (int i : rs.long_simples()) {
        const AbelianIdeal& imax = fib.at(rs.simple(i)).max_ideal;
        auto m = imax == u ? NormaliserMethod::bracket : NormaliserMethod::via_max;
        CHECK(predicted_levi_max(rs, i) == normaliser(rs, imax, m));
      }
    }
  }
  SUBCASE("short simples are rejected") {
    RootSystem rs({Family::C, 3});
    CHECK_THROWS_AS(static_cast<void>(predicted_levi_max(rs, 1)), std::invalid_argument);
  }
}

TEST_CASE("E6 paper examples under the declared permutation") {
  RootSystem rs({Family::E, 6});
  const auto& p2b = paper_e6_to_bourbaki();
  auto to_paper = [&](SimpleSubset s) {
    std::vector<int> out;
    for (int i : s.as_excluded(6).indices()) out.push_back(bourbaki_to_paper_e6()[i]);
    std::sort(out.begin(), out.end());
    return out;
  };
  // (4a): S[a3]_min = {1,3,5,6}, S[a3]_max = {1,3,5} in the paper numbering
  CHECK(to_paper(predicted_levi_min(rs, rs.simple(p2b[3]))) == std::vector<int>{1, 3, 5, 6});
  CHECK(to_paper(predicted_levi_max(rs, p2b[3])) == std::vector<int>{1, 3, 5});
  // (4b): S[a2]_min = {1,4,6}, S[a2]_max = {1,4}
  CHECK(to_paper(predicted_levi_min(rs, rs.simple(p2b[2]))) == std::vector<int>{1, 4, 6});
  CHECK(to_paper(predicted_levi_max(rs, p2b[2])) == std::vector<int>{1, 4});
}

TEST_CASE("normaliser JSON record") {
  RootSystem rs({Family::A, 2});
  RootSet ideal;
  ideal.set(rs.theta());
  SimpleSubset levi = normaliser(rs, ideal, NormaliserMethod::bracket);
  auto j = normaliser_json(rs, ideal, levi, true);
  CHECK(j["ideal"] == nlohmann::json::array({2}));
  CHECK(j["levi_simples"].empty());
  CHECK(j["excluded_simples"] == nlohmann::json::array({1, 2}));
  CHECK(j["methods_agreed"] == true);
}
