#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abid/ideals.hpp"
#include "abid/normalisers.hpp"
#include "abid/root_system.hpp"

namespace abid {

// Z-grading attached to S subset Pi: deg = 1 on S, 0 elsewhere, extended
// linearly; height = deg(theta).
struct Grading {
  SimpleSubset support;       // as the excluded set S
  std::vector<int> degree;    // per positive-root index
  int height = 0;
};

Grading grading(const RootSystem& rs, const SimpleSubset& s);

// g(>= j): roots of degree >= j; an upper ideal, abelian once
// j >= floor(height/2) + 1 (asserted).
RootSet tail(const RootSystem& rs, const SimpleSubset& s, int j);

// f_2: parabolic -> abelian ideal, the tail above half height.
AbelianIdeal f2(const RootSystem& rs, const SimpleSubset& s);

// f_1: abelian ideal -> excluded set of its normaliser.
SimpleSubset f1(const RootSystem& rs, const AbelianIdeal& ideal);

// Two distinct subsets with the same f_2 image (needs theta fundamental).
std::pair<SimpleSubset, SimpleSubset> collision_pair(const RootSystem& rs);

struct MapScanReport {
  SimpleType type_id;
  int image_f1_size = 0;
  int image_f2_size = 0;
  int image_F_size = 0;       // F = f1 . f2 on parabolics
  int image_Ftilde_size = 0;  // F~ = f2 . f1 on ideals
  std::vector<AbelianIdeal> reflexive_ideals;
  std::vector<uint32_t> reflexive_parabolics;  // S masks
  bool F_idempotent = true;
  bool Ftilde_idempotent = true;
  bool images_mutually_bijective = true;
  bool F_extensive = true;  // F(p) contains p for every parabolic
  nlohmann::json witnesses;  // evidence for every false flag, domain sizes otherwise

  nlohmann::json json(const RootSystem& rs) const;
};

// Exhaustive evaluation of f1 over all abelian ideals and f2 over all
// 2^rank subsets; conjectures are reported, never asserted.
MapScanReport scan_maps(const RootSystem& rs);

std::string map_scan_markdown_header();
std::string map_scan_markdown_row(const RootSystem& rs, const MapScanReport& r);

}  // namespace abid
