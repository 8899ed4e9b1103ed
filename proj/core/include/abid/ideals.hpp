#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "abid/root_system.hpp"

namespace abid {

// Upper ideals and abelian ideals are membership sets over the indexed
// positive roots; the predicates below are the validity checks.
using UpperIdeal = RootSet;
using AbelianIdeal = RootSet;

bool is_upper_ideal(const RootSystem& rs, const RootSet& s);
bool is_abelian_ideal(const RootSystem& rs, const RootSet& s);

RootSet upward_closure(const RootSystem& rs, const RootSet& s);

// All abelian ideals, in canonical order (by dimension, then membership).
// Exactly 2^rank of them; a count mismatch is an engine bug.
std::vector<AbelianIdeal> enumerate_abelian(const RootSystem& rs);

struct Frontier {
  std::vector<int> min_roots;       // minimal members of I
  std::vector<int> max_complement;  // maximal members of Delta^+ \ I
};
Frontier frontier(const RootSystem& rs, const UpperIdeal& ideal);

struct Fiber {
  int rootlet = -1;  // long positive root index
  std::vector<AbelianIdeal> ideals;
  AbelianIdeal min_ideal, max_ideal;
};

// The rootlet fibration over the long positive roots.  Every nonzero
// abelian ideal lands in exactly one fibre; min/max are inclusion-wise
// comparable with every member (hard error otherwise).
std::map<int, Fiber> fibers(const RootSystem& rs);

// Ideal of w_mu * s_0, the minuscule element of the root-minimal ideal.
AbelianIdeal ideal_min_from_mover(const RootSystem& rs, int mu_idx);

// Exhaustive upper-ideal enumeration (use only for small ranks: the count
// is the W-Catalan number) and a seeded sampler for the larger ones.
std::vector<UpperIdeal> enumerate_upper(const RootSystem& rs);
std::vector<UpperIdeal> sample_upper(const RootSystem& rs, uint64_t seed, int count);

nlohmann::json ideal_json(const RootSystem& rs, const RootSet& ideal,
                          std::optional<int> rootlet_idx, bool is_fiber_min,
                          bool is_fiber_max);

}  // namespace abid
