#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "abid/root_system.hpp"

namespace abid {

// Element of the affine Weyl group given by a word in the generators
// s_0, ..., s_n (0 is the affine reflection, alpha_0 = delta - theta).
// Words act right-to-left: the last letter is applied first.
struct WeylWord {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const WeylWord&) const = default;
  std::string str() const;  // space-separated letters
  WeylWord inverse() const;
  static WeylWord parse(std::string_view text);
};

// Finite set of positive affine roots, kept in canonical order.
struct InversionSet {
  std::set<Root> roots;

  int size() const { return static_cast<int>(roots.size()); }
  bool operator==(const InversionSet&) const = default;
  nlohmann::json json() const;  // list of {coeffs, level}
};

bool is_positive_affine(const RootSystem& rs, const Root& x);

// s_i(x); i in 0..rank
Root reflect(const RootSystem& rs, int i, const Root& x);
Root act(const RootSystem& rs, const WeylWord& w, const Root& x);
Root act(const RootSystem& rs, const WeylWord& w, int pos_root_idx);

InversionSet inversion_set(const RootSystem& rs, const WeylWord& w);
bool same_element(const RootSystem& rs, const WeylWord& a, const WeylWord& b);

// Reconstruct the unique reduced word with the given inversion set.
// Ties are broken towards the least simple index, or towards the first
// match in `priority` (a permutation of 1..rank) when one is supplied.
// Throws std::invalid_argument when the set is not biconvex.
WeylWord word_from_inversion_set(const RootSystem& rs, const InversionSet& n,
                                 std::span<const int> priority = {});

// The minuscule element of the abelian ideal: N(w) = {delta - gamma}.
WeylWord minuscule_word(const RootSystem& rs, const RootSet& abelian_ideal,
                        std::span<const int> priority = {});

// w_mu: the minimal-length element of W with w_mu(theta) = mu; mu long.
WeylWord minimal_mover(const RootSystem& rs, int mu_idx,
                       std::span<const int> priority = {});

// tau(ideal) = w(alpha_0) + delta, a long positive root (index).
int rootlet(const RootSystem& rs, const RootSet& abelian_ideal);

// Ideal recovered from a minuscule element (inverse of minuscule_word);
// throws if w is not minuscule.
RootSet ideal_of_minuscule(const RootSystem& rs, const WeylWord& w);

}  // namespace abid
