#include "abid/gradings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "abid/weyl.hpp"

namespace abid {

Grading grading(const RootSystem& rs, const SimpleSubset& s) {
  SimpleSubset supp = s.as_excluded(rs.rank());
  Grading g;
  g.support = supp;
  g.degree.resize(rs.size());
  for (int r = 0; r < rs.size(); ++r) {
    int d = 0;
    for (int i : supp.indices()) d += rs.root(r)[i - 1];
    g.degree[r] = d;
  }
  g.height = g.degree[rs.theta()];
  return g;
}

RootSet tail(const RootSystem& rs, const SimpleSubset& s, int j) {
  if (j < 1) throw std::invalid_argument("tail needs j >= 1");
  Grading g = grading(rs, s);
  RootSet out;
  for (int r = 0; r < rs.size(); ++r)
    if (g.degree[r] >= j) out.set(r);
  if (!is_upper_ideal(rs, out)) throw std::logic_error("tail is not an upper ideal");
  if (j >= g.height / 2 + 1 && !is_abelian_ideal(rs, out))
    throw std::logic_error("tail above half height is not abelian");
  return out;
}

AbelianIdeal f2(const RootSystem& rs, const SimpleSubset& s) {
  int h = grading(rs, s).height;
  return tail(rs, s, h / 2 + 1);
}

SimpleSubset f1(const RootSystem& rs, const AbelianIdeal& ideal) {
  SimpleSubset levi = normaliser(rs, ideal, NormaliserMethod::bracket);
  if (levi != normaliser(rs, ideal, NormaliserMethod::via_min))
    throw std::logic_error("normaliser routes disagree in f1");
  return levi.as_excluded(rs.rank());
}

std::pair<SimpleSubset, SimpleSubset> collision_pair(const RootSystem& rs) {
  if (!rs.theta_fundamental())
    throw std::domain_error("collision_pair needs theta fundamental (not type A or C)");
  int at = rs.alpha_theta();
  SimpleSubset s1;
  s1.as = SimpleSubset::As::excluded;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.dynkin_adjacent(i, at)) s1.add(i);
  SimpleSubset s2 = s1;
  s2.add(at);
  AbelianIdeal target = ideal_min_from_mover(rs, rs.simple(at));
  if (f2(rs, s1) != target || f2(rs, s2) != target)
    throw std::logic_error("collision pair does not collide onto a(alpha_theta)");
  return {s1, s2};
}

MapScanReport scan_maps(const RootSystem& rs) {
  const int n = rs.rank();
  MapScanReport rep;
  rep.type_id = rs.type();
  auto ideals = enumerate_abelian(rs);

  std::map<RootSet, uint32_t> f1_of;   // ideal -> S mask
  std::map<uint32_t, RootSet> f2_of;   // S mask -> ideal
  std::set<uint32_t> image_f1;
  std::set<RootSet> image_f2;
  for (const AbelianIdeal& a : ideals) {
    uint32_t s = f1(rs, a).mask;
    f1_of[a] = s;
    image_f1.insert(s);
  }
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    SimpleSubset s = SimpleSubset{mask, SimpleSubset::As::excluded};
    RootSet a = f2(rs, s);
    f2_of[mask] = a;
    image_f2.insert(a);
  }
  rep.image_f1_size = static_cast<int>(image_f1.size());
  rep.image_f2_size = static_cast<int>(image_f2.size());

  auto F = [&](uint32_t mask) { return f1_of.at(f2_of.at(mask)); };
  auto Ft = [&](const RootSet& a) { return f2_of.at(f1_of.at(a)); };

  std::set<uint32_t> image_F;
  std::set<RootSet> image_Ft;
  auto wit = nlohmann::json::object();
  wit["parabolics"] = 1 << n;
  wit["ideals"] = static_cast<int>(ideals.size());
  auto subset_json = [&](uint32_t mask) {
    return SimpleSubset{mask, SimpleSubset::As::excluded}.indices();
  };

  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    uint32_t fp = F(mask);
    image_F.insert(fp);
    if (F(fp) != fp) {
      rep.F_idempotent = false;
      wit["F_not_idempotent"].push_back(
          {{"S", subset_json(mask)}, {"F(S)", subset_json(fp)}, {"F2(S)", subset_json(F(fp))}});
    }
    if (fp == mask) rep.reflexive_parabolics.push_back(mask);
    // F(p) >= p means the excluded set shrinks
    if ((fp & ~mask) != 0) {
      rep.F_extensive = false;
      wit["F_not_extensive"].push_back({{"S", subset_json(mask)}, {"F(S)", subset_json(fp)}});
    }
  }
  for (const AbelianIdeal& a : ideals) {
    RootSet fa = Ft(a);
    image_Ft.insert(fa);
    if (Ft(fa) != fa) {
      rep.Ftilde_idempotent = false;
      wit["Ftilde_not_idempotent"].push_back(
          {{"ideal", a.indices()}, {"Ftilde", fa.indices()}, {"Ftilde2", Ft(fa).indices()}});
    }
    if (fa == a) rep.reflexive_ideals.push_back(a);
  }
  rep.image_F_size = static_cast<int>(image_F.size());
  rep.image_Ftilde_size = static_cast<int>(image_Ft.size());

  // do f1/f2 restrict to mutually inverse bijections between the images?
  for (const RootSet& a : image_Ft)
    if (f2_of.at(f1_of.at(a)) != a) {
      rep.images_mutually_bijective = false;
      wit["bijection_failures"].push_back({{"ideal", a.indices()}});
    }
  for (uint32_t mask : image_F)
    if (f1_of.at(f2_of.at(mask)) != mask) {
      rep.images_mutually_bijective = false;
      wit["bijection_failures"].push_back({{"S", subset_json(mask)}});
    }
  rep.witnesses = std::move(wit);
  return rep;
}

nlohmann::json MapScanReport::json(const RootSystem& rs) const {
  nlohmann::json j;
  j["type_id"] = type_id.name();
  j["image_f1_size"] = image_f1_size;
  j["image_f2_size"] = image_f2_size;
  j["image_F_size"] = image_F_size;
  j["image_Ftilde_size"] = image_Ftilde_size;
  j["reflexive_ideals"] = nlohmann::json::array();
  for (const auto& a : reflexive_ideals) j["reflexive_ideals"].push_back(a.indices());
  j["reflexive_parabolics"] = nlohmann::json::array();
  for (uint32_t m : reflexive_parabolics)
    j["reflexive_parabolics"].push_back(SimpleSubset{m, SimpleSubset::As::excluded}.indices());
  j["F_idempotent"] = F_idempotent;
  j["Ftilde_idempotent"] = Ftilde_idempotent;
  j["images_mutually_bijective"] = images_mutually_bijective;
  j["F_extensive"] = F_extensive;
  j["witnesses"] = witnesses;
  (void)rs;
  return j;
}

std::string map_scan_markdown_header() {
  return "| type | #Im f1 | #Im f2 | #Im F | #Im F~ | reflexive ideals | F^2=F | F~^2=F~ | "
         "images bijective | F extensive |\n"
         "|------|--------|--------|-------|--------|------------------|-------|---------|"
         "------------------|-------------|";
}

std::string map_scan_markdown_row(const RootSystem& rs, const MapScanReport& r) {
  auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  std::string row = "| " + rs.type().name();
  row += " | " + std::to_string(r.image_f1_size);
  row += " | " + std::to_string(r.image_f2_size);
  row += " | " + std::to_string(r.image_F_size);
  row += " | " + std::to_string(r.image_Ftilde_size);
  row += " | " + std::to_string(r.reflexive_ideals.size());
  row += " | " + yn(r.F_idempotent);
  row += " | " + yn(r.Ftilde_idempotent);
  row += " | " + yn(r.images_mutually_bijective);
  row += " | " + yn(r.F_extensive) + " |";
  return row;
}

}  // namespace abid
