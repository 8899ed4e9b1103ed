#include "abid/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abid {

std::string WeylWord::str() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters[i]);
  }
  return s;
}

WeylWord WeylWord::inverse() const {
  WeylWord w{letters};
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

WeylWord WeylWord::parse(std::string_view text) {
  WeylWord w;
  std::istringstream in{std::string(text)};
  int x;
  while (in >> x) {
    if (x < 0) throw std::invalid_argument("negative letter in word");
    w.letters.push_back(x);
  }
  return w;
}

nlohmann::json InversionSet::json() const {
  auto arr = nlohmann::json::array();
  for (const Root& r : roots) arr.push_back({{"coeffs", r.coeffs}, {"level", r.level}});
  return arr;
}

bool is_positive_affine(const RootSystem& rs, const Root& x) {
  if (x.level != 0) return x.level > 0;
  return rs.index_of(x.coeffs) >= 0;
}

Root reflect(const RootSystem& rs, int i, const Root& x) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("reflection index out of range");
  Root y = x;
  if (i == 0) {
    // s_0(x) = x + (x, theta^vee)(delta - theta)
    int k = rs.theta_pairing(x.coeffs);
    const Coeffs& th = rs.root(rs.theta());
    for (int j = 0; j < rs.rank(); ++j) y.coeffs[j] -= k * th[j];
    y.level += k;
  } else {
    int k = rs.pairing_simple(x.coeffs, i);
    y.coeffs[i - 1] -= k;
  }
  return y;
}

Root act(const RootSystem& rs, const WeylWord& w, const Root& x) {
  if (!rs.is_root(x.coeffs)) throw std::invalid_argument("act: finite part is not a root");
  Root y = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = reflect(rs, *it, y);
  return y;
}

Root act(const RootSystem& rs, const WeylWord& w, int pos_root_idx) {
  return act(rs, w, Root{rs.root(pos_root_idx), 0});
}

InversionSet inversion_set(const RootSystem& rs, const WeylWord& w) {
  // N(w s_i) = s_i(N(w) \ {a_i}) u ({a_i} if a_i not in N(w))
  auto alpha = [&](int i) -> Root {
    if (i == 0) {
      Coeffs c = rs.root(rs.theta());
      for (int& x : c) x = -x;
      return Root{std::move(c), 1};
    }
    Coeffs c(rs.rank(), 0);
    c[i - 1] = 1;
    return Root{std::move(c), 0};
  };
  InversionSet n;
  for (int i : w.letters) {
    Root a = alpha(i);
    std::set<Root> next;
    bool had = false;
    for (const Root& r : n.roots) {
      if (r == a) {
        had = true;
        continue;
      }
      next.insert(reflect(rs, i, r));
    }
    if (!had) next.insert(std::move(a));
    n.roots = std::move(next);
  }
  return n;
}

bool same_element(const RootSystem& rs, const WeylWord& a, const WeylWord& b) {
  return inversion_set(rs, a) == inversion_set(rs, b);
}

namespace {

std::string describe(const RootSystem& rs, const InversionSet& n) {
  std::string s = "{";
  bool first = true;
  for (const Root& r : n.roots) {
    if (!first) s += ", ";
    first = false;
    s += rs.coeff_string(r.coeffs);
    if (r.level != 0) s += "+" + std::to_string(r.level) + "d";
  }
  return s + "}";
}

}  // namespace

WeylWord word_from_inversion_set(const RootSystem& rs, const InversionSet& n,
                                 std::span<const int> priority) {
  const int rank = rs.rank();
  std::vector<int> order;
  order.push_back(0);
  if (priority.empty()) {
    for (int i = 1; i <= rank; ++i) order.push_back(i);
  } else {
    for (int i : priority) order.push_back(i);
  }

  auto is_affine_simple = [&](const Root& r, int i) {
    if (i == 0) {
      if (r.level != 1) return false;
      const Coeffs& th = rs.root(rs.theta());
      for (int j = 0; j < rank; ++j)
        if (r.coeffs[j] != -th[j]) return false;
      return true;
    }
    if (r.level != 0) return false;
    for (int j = 0; j < rank; ++j)
      if (r.coeffs[j] != (j == i - 1 ? 1 : 0)) return false;
    return true;
  };

  std::set<Root> work = n.roots;
  std::vector<int> picked;
  while (!work.empty()) {
    int found = -1;
    const Root* member = nullptr;
    for (int i : order) {
      for (const Root& r : work)
        if (is_affine_simple(r, i)) {
          found = i;
          member = &r;
          break;
        }
      if (found >= 0) break;
    }
    if (found < 0)
      throw std::invalid_argument("set is not biconvex (no simple member): " + describe(rs, n));
    Root a = *member;
    work.erase(a);
    std::set<Root> next;
    for (const Root& r : work) next.insert(reflect(rs, found, r));
    work = std::move(next);
    picked.push_back(found);
  }
  WeylWord w;
  w.letters.assign(picked.rbegin(), picked.rend());
  if (inversion_set(rs, w) != n)
    throw std::invalid_argument("set is not biconvex (round trip failed): " + describe(rs, n));
  return w;
}

WeylWord minuscule_word(const RootSystem& rs, const RootSet& ideal,
                        std::span<const int> priority) {
  for (int g : ideal.indices()) {
    if (!rs.upset(g).is_subset_of(ideal) || !ideal.is_subset_of(rs.nonsummable(g)))
      throw std::invalid_argument("not an abelian ideal");
  }
  InversionSet n;
  for (int g : ideal.indices()) {
    Coeffs c = rs.root(g);
    for (int& x : c) x = -x;
    n.roots.insert(Root{std::move(c), 1});
  }
  try {
    return word_from_inversion_set(rs, n, priority);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("minuscule reconstruction failed for an abelian ideal");
  }
}

WeylWord minimal_mover(const RootSystem& rs, int mu_idx, std::span<const int> priority) {
  if (mu_idx < 0 || mu_idx >= rs.size()) throw std::invalid_argument("mover: not a positive root");
  if (!rs.is_long(mu_idx)) throw std::invalid_argument("mover: root is not long");
  InversionSet n;  // N(w_mu^{-1}) = {gamma | (gamma, mu^vee) = -1}
  for (int g = 0; g < rs.size(); ++g)
    if (rs.pairing(g, mu_idx) == -1) n.roots.insert(Root{rs.root(g), 0});
  WeylWord w = word_from_inversion_set(rs, n, priority).inverse();
  if (w.length() != n.size()) throw std::logic_error("mover: length mismatch");
  Root image = act(rs, w, rs.theta());
  if (image.level != 0 || rs.index_of(image.coeffs) != mu_idx)
    throw std::logic_error("mover: w(theta) != mu");
  return w;
}

int rootlet(const RootSystem& rs, const RootSet& ideal) {
  if (ideal.none()) throw std::invalid_argument("rootlet of the empty ideal is undefined");
  WeylWord w = minuscule_word(rs, ideal);
  Coeffs a0 = rs.root(rs.theta());
  for (int& x : a0) x = -x;
  Root img = act(rs, w, Root{std::move(a0), 1});
  img.level += 1;
  if (img.level != 0) throw std::logic_error("rootlet: image not a finite root");
  int idx = rs.index_of(img.coeffs);
  if (idx < 0 || !rs.is_long(idx)) throw std::logic_error("rootlet: image not a long positive root");
  return idx;
}

RootSet ideal_of_minuscule(const RootSystem& rs, const WeylWord& w) {
  InversionSet n = inversion_set(rs, w);
  RootSet ideal;
  for (const Root& r : n.roots) {
    if (r.level != 1) throw std::invalid_argument("word is not minuscule");
    Coeffs c = r.coeffs;
    for (int& x : c) x = -x;
    int idx = rs.index_of(c);
    if (idx < 0) throw std::invalid_argument("word is not minuscule");
    ideal.set(idx);
  }
  return ideal;
}

}  // namespace abid
