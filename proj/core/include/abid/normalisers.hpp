#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "abid/ideals.hpp"
#include "abid/root_system.hpp"

namespace abid {

// Subset of the simple roots, tagged by what it encodes: the Levi simples
// Pi(l) of a standard parabolic, or the excluded set S = Pi \ Pi(l).
struct SimpleSubset {
  enum class As { levi, excluded };

  uint32_t mask = 0;  // bit i-1 = alpha_i
  As as = As::levi;

  bool contains(int i) const { return (mask >> (i - 1)) & 1; }
  void add(int i) { mask |= uint32_t(1) << (i - 1); }
  int size() const;
  std::vector<int> indices() const;  // 1-based, ascending

  SimpleSubset complement(int rank) const;
  SimpleSubset as_levi(int rank) const;      // involutive conversions
  SimpleSubset as_excluded(int rank) const;

  bool operator==(const SimpleSubset&) const = default;

  static SimpleSubset levi_of(const std::vector<int>& indices);
  static SimpleSubset excluded_of(const std::vector<int>& indices);
};

enum class NormaliserMethod { bracket, via_min, via_max, minuscule };

NormaliserMethod parse_method(std::string_view name);
std::string method_name(NormaliserMethod m);

// Levi simple set of the normaliser of a b-stable subspace, by the chosen
// route.  via_max requires I != Delta^+; minuscule requires I abelian.
SimpleSubset normaliser(const RootSystem& rs, const UpperIdeal& ideal, NormaliserMethod method);

// Closed-form Pi[mu]_min for mu long positive (all four cases).
SimpleSubset predicted_levi_min(const RootSystem& rs, int mu_idx);
// Closed-form Pi[alpha~]_max for a long simple root (1-based index).
SimpleSubset predicted_levi_max(const RootSystem& rs, int alpha_simple);

nlohmann::json normaliser_json(const RootSystem& rs, const UpperIdeal& ideal,
                               const SimpleSubset& levi, bool methods_agreed);

}  // namespace abid
