#include "abid/normalisers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "abid/weyl.hpp"

namespace abid {

int SimpleSubset::size() const { return std::popcount(mask); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

SimpleSubset SimpleSubset::complement(int rank) const {
  SimpleSubset s = *this;
  s.mask = ~mask & ((uint32_t(1) << rank) - 1);
  return s;
}

SimpleSubset SimpleSubset::as_levi(int rank) const {
  if (as == As::levi) return *this;
  SimpleSubset s = complement(rank);
  s.as = As::levi;
  return s;
}

SimpleSubset SimpleSubset::as_excluded(int rank) const {
  if (as == As::excluded) return *this;
  SimpleSubset s = complement(rank);
  s.as = As::excluded;
  return s;
}

SimpleSubset SimpleSubset::levi_of(const std::vector<int>& indices) {
  SimpleSubset s;
  s.as = As::levi;
  for (int i : indices) s.add(i);
  return s;
}

SimpleSubset SimpleSubset::excluded_of(const std::vector<int>& indices) {
  SimpleSubset s;
  s.as = As::excluded;
  for (int i : indices) s.add(i);
  return s;
}

NormaliserMethod parse_method(std::string_view name) {
  if (name == "bracket") return NormaliserMethod::bracket;
  if (name == "via_min" || name == "via-min" || name == "min") return NormaliserMethod::via_min;
  if (name == "via_max" || name == "via-max" || name == "max") return NormaliserMethod::via_max;
  if (name == "minuscule") return NormaliserMethod::minuscule;
  throw std::invalid_argument("unknown normaliser method '" + std::string(name) + "'");
}

std::string method_name(NormaliserMethod m) {
  switch (m) {
    case NormaliserMethod::bracket: return "bracket";
    case NormaliserMethod::via_min: return "via_min";
    case NormaliserMethod::via_max: return "via_max";
    case NormaliserMethod::minuscule: return "minuscule";
  }
  return "?";
}

namespace {

RootSet full_set(const RootSystem& rs) {
  RootSet s;
  for (int g = 0; g < rs.size(); ++g) s.set(g);
  return s;
}

SimpleSubset excluded_to_levi(uint32_t excluded_mask, int rank) {
  SimpleSubset s;
  s.as = SimpleSubset::As::excluded;
  s.mask = excluded_mask;
  return s.as_levi(rank);
}

}  // namespace

SimpleSubset normaliser(const RootSystem& rs, const UpperIdeal& ideal, NormaliserMethod method) {
  const int n = rs.rank();
  if (!is_upper_ideal(rs, ideal))
    throw std::invalid_argument("normaliser: the set is not an upper ideal");
  uint32_t excluded = 0;
  switch (method) {
    case NormaliserMethod::bracket: {
      // alpha obstructs iff alpha in I, or gamma - alpha lands outside I
      for (int i = 1; i <= n; ++i) {
        bool obstructed = ideal.test(rs.simple(i));
        for (int g : ideal.indices()) {
          if (obstructed) break;
          int below = rs.sub_simple(g, i);
          if (below >= 0 && !ideal.test(below)) obstructed = true;
        }
        if (obstructed) excluded |= uint32_t(1) << (i - 1);
      }
      break;
    }
    case NormaliserMethod::via_min: {
      Frontier f = frontier(rs, ideal);
      for (int i = 1; i <= n; ++i)
        for (int g : f.min_roots)
          if (g == rs.simple(i) || rs.sub_simple(g, i) >= 0) {
            excluded |= uint32_t(1) << (i - 1);
            break;
          }
      break;
    }
    case NormaliserMethod::via_max: {
      if (ideal == full_set(rs))
        throw std::domain_error("via_max is undefined on the full ideal Delta^+");
      Frontier f = frontier(rs, ideal);
      for (int i = 1; i <= n; ++i)
        for (int g : f.max_complement)
          if (rs.root_sum(g, rs.simple(i)) >= 0) {
            excluded |= uint32_t(1) << (i - 1);
            break;
          }
      break;
    }
    case NormaliserMethod::minuscule: {
      if (!is_abelian_ideal(rs, ideal))
        throw std::domain_error("the minuscule method needs an abelian ideal");
      WeylWord w = minuscule_word(rs, ideal);
      SimpleSubset levi;
      levi.as = SimpleSubset::As::levi;
      for (int i = 1; i <= n; ++i) {
        Root img = act(rs, w, rs.simple(i));
        bool in_affine_pi = false;
        if (img.level == 0) {
          int idx = rs.index_of(img.coeffs);
          in_affine_pi = idx >= 0 && rs.height(idx) == 1;
        } else if (img.level == 1) {
          Coeffs neg = img.coeffs;
          for (int& x : neg) x = -x;
          in_affine_pi = rs.index_of(neg) == rs.theta();
        }
        if (in_affine_pi) levi.add(i);
      }
      return levi;
    }
  }
  return excluded_to_levi(excluded, n);
}

namespace {

// Simple roots orthogonal to mu, pushed through w_mu^{-1}; lands in Pi by
// the orthogonal-transport lemma.
uint32_t transported_orthogonals(const RootSystem& rs, int mu_idx, const WeylWord& w_mu) {
  WeylWord winv = w_mu.inverse();
  uint32_t mask = 0;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (rs.bilinear(rs.simple(i), mu_idx) != 0) continue;
    Root img = act(rs, winv, rs.simple(i));
    int idx = img.level == 0 ? rs.index_of(img.coeffs) : -1;
    if (idx < 0 || rs.height(idx) != 1)
      throw std::logic_error("w_mu^{-1} moved an orthogonal simple out of Pi");
    int k = rs.simple_number_of(idx);
    mask |= uint32_t(1) << (k - 1);
  }
  return mask;
}

// Endpoints of the (chain) support of a root in the Dynkin diagram.
uint32_t support_endpoints(const RootSystem& rs, int mu_idx) {
  const Coeffs& c = rs.root(mu_idx);
  uint32_t mask = 0;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (c[i - 1] == 0) continue;
    int neighbours = 0;
    for (int j = 1; j <= rs.rank(); ++j)
      if (c[j - 1] != 0 && rs.dynkin_adjacent(i, j)) ++neighbours;
    if (neighbours <= 1) mask |= uint32_t(1) << (i - 1);
  }
  return mask;
}

}  // namespace

SimpleSubset predicted_levi_min(const RootSystem& rs, int mu_idx) {
  if (mu_idx < 0 || mu_idx >= rs.size() || !rs.is_long(mu_idx))
    throw std::invalid_argument("predicted_levi_min needs a long positive root");
  const int n = rs.rank();
  SimpleSubset levi;
  levi.as = SimpleSubset::As::levi;
  if (mu_idx == rs.theta()) {  // (iv)
    for (int i = 1; i <= n; ++i)
      if (rs.bilinear(rs.simple(i), rs.theta()) == 0) levi.add(i);
    return levi;
  }
  if (rs.bilinear(mu_idx, rs.theta()) == 0) {  // (ii)
    levi.mask = transported_orthogonals(rs, mu_idx, minimal_mover(rs, mu_idx));
    return levi;
  }
  // (iii): mu in H \ {theta}
  if (rs.theta_fundamental()) {  // (iii a)
    levi.mask = transported_orthogonals(rs, mu_idx, minimal_mover(rs, mu_idx));
    levi.add(rs.alpha_theta());
    return levi;
  }
  if (rs.pi_heis().size() == 1)  // (iii b): no such mu exists in C-like types
    throw std::logic_error("long root in H \\ {theta} cannot exist when theta = 2*omega");
  // (iii c): A-like types; Pi minus the support endpoints of mu
  levi.mask = ~support_endpoints(rs, mu_idx) & ((uint32_t(1) << n) - 1);
  return levi;
}

SimpleSubset predicted_levi_max(const RootSystem& rs, int alpha_simple) {
  const int n = rs.rank();
  if (alpha_simple < 1 || alpha_simple > n || !rs.is_long(rs.simple(alpha_simple)))
    throw std::invalid_argument("predicted_levi_max needs a long simple root");
  int mu = rs.simple(alpha_simple);
  auto pi_h = rs.pi_heis();
  bool a_endpoint = !rs.theta_fundamental() &&
                    std::find(pi_h.begin(), pi_h.end(), alpha_simple) != pi_h.end();
  if (a_endpoint)  // A_n with alpha_1 or alpha_n: the fibre is a singleton
    return predicted_levi_min(rs, mu);
  SimpleSubset levi;
  levi.as = SimpleSubset::As::levi;
  levi.mask = transported_orthogonals(rs, mu, minimal_mover(rs, mu));
  for (int i : pi_h) levi.add(i);
  return levi;
}

nlohmann::json normaliser_json(const RootSystem& rs, const UpperIdeal& ideal,
                               const SimpleSubset& levi, bool methods_agreed) {
  nlohmann::json j;
  j["ideal"] = ideal.indices();
  j["levi_simples"] = levi.as_levi(rs.rank()).indices();
  j["excluded_simples"] = levi.as_excluded(rs.rank()).indices();
  j["methods_agreed"] = methods_agreed;
  return j;
}

}  // namespace abid
