#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace abid {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple type label such as D4.  Valid ranks: A n>=1, B n>=2, C n>=2,
// D n>=3 (D3 is an A3 relabelling), E 6..8, F 4, G 2.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  bool operator==(const SimpleType&) const = default;
  std::string name() const;

  // Accepts "D4", "Dn4", "e6", ... ; throws std::invalid_argument on junk.
  static SimpleType parse(std::string_view token);
  static bool valid(Family f, int rank);
};

// The canonical catalogue: A1..Amax, B2.., C2.., D4.., E6..E8, F4, G2,
// restricted to rank <= max_rank.
std::vector<SimpleType> canonical_types(int max_rank);

// Membership set over the indexed positive roots.  Fixed capacity; every
// simple type of rank <= 16 (and A_n up to n = 22) fits.
class RootSet {
public:
  static constexpr int capacity = 256;

  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const;
  bool none() const { return !any(); }
  bool any() const;

  RootSet operator&(const RootSet& o) const;
  RootSet operator|(const RootSet& o) const;
  RootSet operator-(const RootSet& o) const;  // set difference
  bool intersects(const RootSet& o) const;
  bool is_subset_of(const RootSet& o) const;

  bool operator==(const RootSet&) const = default;
  std::strong_ordering operator<=>(const RootSet& o) const;

  std::vector<int> indices() const;  // ascending
  static RootSet of(const std::vector<int>& indices);

  struct Hash {
    size_t operator()(const RootSet& s) const;
  };

private:
  std::array<uint64_t, capacity / 64> w_{};
};

using Coeffs = std::vector<int>;

// A root written over the simple basis; level is the delta-coefficient
// (0 for finite roots).
struct Root {
  Coeffs coeffs;
  int level = 0;

  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const {
    if (level != o.level) return level < o.level;
    return coeffs < o.coeffs;
  }
};

// Immutable catalogue of one finite simple root system, all-integer.
// Positive roots are indexed in a canonical order: by height, then
// lexicographically on the coefficient vector.
class RootSystem {
public:
  explicit RootSystem(SimpleType type);

  SimpleType type() const { return type_; }
  int rank() const { return type_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }  // #positive roots

  const Coeffs& root(int idx) const { return roots_[idx]; }
  int height(int idx) const { return heights_[idx]; }
  int norm2(int idx) const { return norm2_[idx]; }
  bool is_long(int idx) const { return long_mask_.test(idx); }
  const RootSet& long_mask() const { return long_mask_; }
  std::vector<int> long_positive_roots() const { return long_mask_.indices(); }
  std::vector<int> long_simples() const;  // Pi_l as 1-based simple numbers

  int theta() const { return theta_; }
  int simple(int i) const { return simple_idx_[i - 1]; }  // alpha_i, 1-based
  int simple_number_of(int idx) const;                    // 1-based, 0 if not simple

  // index of a positive root, -1 if the vector is not one
  int index_of(const Coeffs& c) const;
  bool is_root(const Coeffs& c) const;  // positive or negative

  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // (a_i, a_j^vee)
  bool dynkin_adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

  // Scaled W-invariant bilinear form; short simple roots have norm 2.
  int bilinear(const Coeffs& x, const Coeffs& y) const;
  int bilinear(int i, int j) const { return bilinear_[i][j]; }
  // Exact Cartan pairing (x, mu^vee)
  int pairing(const Coeffs& x, const Coeffs& mu) const;
  int pairing(int gamma, int mu) const { return pairing_[gamma][mu]; }
  int pairing_simple(const Coeffs& x, int i) const;  // (x, alpha_i^vee)
  int theta_pairing(const Coeffs& x) const;          // (x, theta^vee)

  // gamma + mu as a root index, -1 if not a root
  int root_sum(int gamma, int mu) const { return sum_[gamma][mu]; }
  // gamma - alpha_i as a root index, -1 if not a positive root
  int sub_simple(int gamma, int i) const { return sub_simple_[gamma][i - 1]; }

  bool leq(int gamma, int mu) const;  // the order on Delta^+
  const RootSet& upset(int idx) const { return upset_[idx]; }
  const RootSet& downset(int idx) const { return downset_[idx]; }
  const std::vector<std::pair<int, int>>& cover_relations() const { return covers_; }

  // gamma + mu not a root for the whole mask
  const RootSet& nonsummable(int idx) const { return nonsummable_[idx]; }

  const RootSet& heis() const { return heis_; }       // {gamma | (gamma,theta) != 0}
  std::vector<int> pi_heis() const;                   // Pi cap H, 1-based
  bool theta_fundamental() const { return theta_fundamental_; }
  int alpha_theta() const { return alpha_theta_; }    // 1-based; 0 unless theta fundamental

  std::string root_string(int idx) const;             // "1211" or "[1,2,1,1]"
  std::string coeff_string(const Coeffs& c) const;
  nlohmann::json catalogue_json() const;

private:
  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;  // symmetriser d_i, short = 1
  std::vector<Coeffs> roots_;
  std::vector<int> heights_;
  std::vector<int> norm2_;
  std::vector<int> simple_idx_;
  int theta_ = -1;
  bool theta_fundamental_ = false;
  int alpha_theta_ = 0;
  RootSet long_mask_, heis_;
  std::vector<std::vector<int>> bilinear_sym_;  // on the simple basis
  std::vector<std::vector<int16_t>> sum_;
  std::vector<std::vector<int16_t>> sub_simple_;
  std::vector<std::vector<int8_t>> pairing_;
  std::vector<std::vector<int>> bilinear_;
  std::vector<RootSet> upset_, downset_, nonsummable_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> theta_coroot_row_;  // (alpha_j, theta^vee)
};

// Bridge between the Bourbaki E6 numbering (chain 1-3-4-5-6, node 2 on 4)
// and the numbering used when reproducing published E6 examples (chain
// 1-2-3-4-5, node 6 on 3).  Index 0 of the arrays is unused.
const std::array<int, 7>& paper_e6_to_bourbaki();
const std::array<int, 7>& bourbaki_to_paper_e6();

}  // namespace abid
