#include "abid/ideals.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "abid/weyl.hpp"

namespace abid {

bool is_upper_ideal(const RootSystem& rs, const RootSet& s) {
  for (int g : s.indices())
    if (!rs.upset(g).is_subset_of(s)) return false;
  return true;
}

bool is_abelian_ideal(const RootSystem& rs, const RootSet& s) {
  if (!is_upper_ideal(rs, s)) return false;
  for (int g : s.indices())
    if (!s.is_subset_of(rs.nonsummable(g))) return false;
  return true;
}

RootSet upward_closure(const RootSystem& rs, const RootSet& s) {
  RootSet out;
  for (int g : s.indices()) out = out | rs.upset(g);
  return out;
}

std::vector<AbelianIdeal> enumerate_abelian(const RootSystem& rs) {
  const int m = rs.size();
  std::unordered_set<RootSet, RootSet::Hash> seen;
  std::deque<RootSet> queue;
  seen.insert(RootSet{});
  queue.push_back(RootSet{});
  while (!queue.empty()) {
    RootSet ideal = queue.front();
    queue.pop_front();
    // candidates: maximal roots of the complement keeping the set abelian
    for (int g = 0; g < m; ++g) {
      if (ideal.test(g)) continue;
      RootSet strictly_above = rs.upset(g);
      strictly_above.reset(g);
      if (!strictly_above.is_subset_of(ideal)) continue;  // not maximal in complement
      if (!ideal.is_subset_of(rs.nonsummable(g))) continue;
      RootSet next = ideal;
      next.set(g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<AbelianIdeal> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  uint64_t expected = uint64_t(1) << rs.rank();
  if (out.size() != expected)
    throw std::logic_error("abelian ideal count mismatch for " + rs.type().name() + ": got " +
                           std::to_string(out.size()) + ", expected " + std::to_string(expected));
  return out;
}

Frontier frontier(const RootSystem& rs, const UpperIdeal& ideal) {
  Frontier f;
  for (int g = 0; g < rs.size(); ++g) {
    if (ideal.test(g)) {
      if ((rs.downset(g) & ideal).count() == 1) f.min_roots.push_back(g);
    } else {
      if ((rs.upset(g) - ideal).count() == 1) f.max_complement.push_back(g);
    }
  }
  return f;
}

std::map<int, Fiber> fibers(const RootSystem& rs) {
  std::map<int, Fiber> out;
  for (const AbelianIdeal& ideal : enumerate_abelian(rs)) {
    if (ideal.none()) continue;
    int mu = rootlet(rs, ideal);
    Fiber& f = out[mu];
    f.rootlet = mu;
    f.ideals.push_back(ideal);
  }
  for (int mu : rs.long_positive_roots())
    if (!out.count(mu))
      throw std::logic_error("rootlet fibration misses " + rs.root_string(mu) + " in " +
                             rs.type().name());
  for (auto& [mu, f] : out) {
    f.min_ideal = f.ideals.front();
    f.max_ideal = f.ideals.front();
    for (const AbelianIdeal& a : f.ideals) {
      if (a.count() < f.min_ideal.count()) f.min_ideal = a;
      if (a.count() > f.max_ideal.count()) f.max_ideal = a;
    }
    for (const AbelianIdeal& a : f.ideals)
      if (!f.min_ideal.is_subset_of(a) || !a.is_subset_of(f.max_ideal))
        throw std::logic_error("fibre of " + rs.root_string(mu) +
                               " lacks a unique min/max in " + rs.type().name());
  }
  return out;
}

AbelianIdeal ideal_min_from_mover(const RootSystem& rs, int mu_idx) {
  WeylWord w = minimal_mover(rs, mu_idx);
  w.letters.push_back(0);  // w_mu * s_0
  return ideal_of_minuscule(rs, w);
}

std::vector<UpperIdeal> enumerate_upper(const RootSystem& rs) {
  // Walk the roots by decreasing height; a root may enter only when all
  // its covers are already in.  Linear in the output count.
  const int m = rs.size();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = m - 1 - i;  // canonical order is by height
  std::vector<UpperIdeal> out;
  RootSet current;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      out.push_back(current);
      return;
    }
    int g = order[pos];
    self(self, pos + 1);
    RootSet above = rs.upset(g);
    above.reset(g);
    if (above.is_subset_of(current)) {
      current.set(g);
      self(self, pos + 1);
      current.reset(g);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

std::vector<UpperIdeal> sample_upper(const RootSystem& rs, uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ (uint64_t(rs.type().rank) << 8) ^
                      uint64_t(static_cast<char>(rs.type().family)));
  const int m = rs.size();
  std::vector<UpperIdeal> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    int picks = static_cast<int>(rng() % (m + 1));
    RootSet gens;
    for (int t = 0; t < picks; ++t) gens.set(static_cast<int>(rng() % m));
    out.push_back(upward_closure(rs, gens));
  }
  return out;
}

nlohmann::json ideal_json(const RootSystem& rs, const RootSet& ideal,
                          std::optional<int> rootlet_idx, bool is_fiber_min,
                          bool is_fiber_max) {
  nlohmann::json j;
  j["roots"] = ideal.indices();
  j["dim"] = ideal.count();
  if (rootlet_idx)
    j["rootlet"] = rs.root(*rootlet_idx);
  else
    j["rootlet"] = nullptr;
  j["is_fiber_min"] = is_fiber_min;
  j["is_fiber_max"] = is_fiber_max;
  return j;
}

}  // namespace abid
