#include "abid/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace abid {

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool SimpleType::valid(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType SimpleType::parse(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty type token");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("unknown family in type token '" + std::string(token) + "'");
  size_t pos = 1;
  if (pos < token.size() && (token[pos] == 'n' || token[pos] == 'N')) ++pos;  // allow "Dn4"
  if (pos >= token.size()) throw std::invalid_argument("missing rank in type token '" + std::string(token) + "'");
  int rank = 0;
  for (; pos < token.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(token[pos])))
      throw std::invalid_argument("bad rank in type token '" + std::string(token) + "'");
    rank = rank * 10 + (token[pos] - '0');
    if (rank > 1000) throw std::invalid_argument("rank out of range in '" + std::string(token) + "'");
  }
  SimpleType t{static_cast<Family>(f), rank};
  if (!valid(t.family, t.rank))
    throw std::invalid_argument("invalid rank for family in type token '" + std::string(token) + "'");
  return t;
}

std::vector<SimpleType> canonical_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

int RootSet::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool RootSet::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

RootSet RootSet::operator&(const RootSet& o) const {
  RootSet r;
  for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
  return r;
}

RootSet RootSet::operator|(const RootSet& o) const {
  RootSet r;
  for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
  return r;
}

RootSet RootSet::operator-(const RootSet& o) const {
  RootSet r;
  for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
  return r;
}

bool RootSet::intersects(const RootSet& o) const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & o.w_[k]) return true;
  return false;
}

bool RootSet::is_subset_of(const RootSet& o) const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

std::strong_ordering RootSet::operator<=>(const RootSet& o) const {
  for (size_t k = w_.size(); k-- > 0;)
    if (w_[k] != o.w_[k]) return w_[k] <=> o.w_[k];
  return std::strong_ordering::equal;
}

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(w_.size()); ++k) {
    uint64_t w = w_[k];
    while (w) {
      out.push_back(k * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

RootSet RootSet::of(const std::vector<int>& indices) {
  RootSet s;
  for (int i : indices) s.set(i);
  return s;
}

size_t RootSet::Hash::operator()(const RootSet& s) const {
  size_t h = 0xcbf29ce484222325ull;
  for (int k = 0; k < RootSet::capacity / 64; ++k) {
    h ^= s.w_[k];
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int aij = -1, int aji = -1) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 1, n, -2, -1);  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 1, n, -1, -2);  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3, -2, -1);  // alpha_3, alpha_4 short
      bond(3, 4);
      break;
    case Family::G:
      bond(1, 2, -1, -3);  // alpha_1 short
      break;
  }
  return a;
}

// Symmetriser: smallest positive integers with a_ij * d_j = a_ji * d_i,
// so that B_ij = a_ij * d_j is symmetric and d_i = (alpha_i, alpha_i)/2.
std::vector<int> symmetriser(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::pair<int, int>> d(n, {0, 1});  // num/den, 0 = unset
  d[0] = {1, 1};
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || d[i].first == 0 || d[j].first != 0) continue;
        // d_j / d_i = a_ji / a_ij
        int num = d[i].first * a[j][i];
        int den = d[i].second * a[i][j];
        if (den < 0) num = -num, den = -den;
        int g = std::gcd(std::abs(num), den);
        d[j] = {num / g, den / g};
        changed = true;
      }
  }
  int lcm = 1;
  for (auto [num, den] : d) lcm = std::lcm(lcm, den);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = d[i].first * (lcm / d[i].second);
  int g = 0;
  for (int x : out) g = std::gcd(g, x);
  for (int& x : out) x /= g;
  return out;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(type) {
  if (!SimpleType::valid(type.family, type.rank))
    throw std::invalid_argument("invalid rank for family " + type.name());
  const int n = type.rank;
  cartan_ = cartan_matrix(type);
  sym_ = symmetriser(cartan_);
  bilinear_sym_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bilinear_sym_[i][j] = cartan_[i][j] * sym_[j];

  // Close Pi under root strings, height by height.
  std::map<Coeffs, int> index;
  std::vector<Coeffs> found;
  for (int i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    index.emplace(c, static_cast<int>(found.size()));
    found.push_back(c);
  }
  size_t level_begin = 0;
  while (level_begin < found.size()) {
    size_t level_end = found.size();
    for (size_t r = level_begin; r < level_end; ++r) {
      for (int i = 0; i < n; ++i) {
        Coeffs gamma = found[r];
        // p = steps down the alpha_i-string through gamma
        int p = 0;
        Coeffs down = gamma;
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || !index.count(down)) break;
          ++p;
        }
        int pair = 0;  // (gamma, alpha_i^vee)
        for (int j = 0; j < n; ++j) pair += gamma[j] * cartan_[j][i];
        if (p - pair <= 0) continue;
        Coeffs up = gamma;
        up[i] += 1;
        if (!index.count(up)) {
          index.emplace(up, static_cast<int>(found.size()));
          found.push_back(up);
        }
      }
    }
    level_begin = level_end;
  }
  if (static_cast<int>(found.size()) > RootSet::capacity)
    throw std::invalid_argument(type.name() + " exceeds the supported number of positive roots");

  // canonical index order: height, then lexicographic on coefficients
  std::sort(found.begin(), found.end(), [](const Coeffs& x, const Coeffs& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0);
    int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  roots_ = std::move(found);
  const int m = size();
  index.clear();
  for (int r = 0; r < m; ++r) index.emplace(roots_[r], r);

  heights_.resize(m);
  norm2_.resize(m);
  simple_idx_.assign(n, -1);
  for (int r = 0; r < m; ++r) {
    heights_[r] = std::accumulate(roots_[r].begin(), roots_[r].end(), 0);
    norm2_[r] = bilinear(roots_[r], roots_[r]);
    if (heights_[r] == 1)
      for (int i = 0; i < n; ++i)
        if (roots_[r][i] == 1) simple_idx_[i] = r;
  }
  theta_ = m - 1;  // unique root of maximal height sorts last
  int max_norm = *std::max_element(norm2_.begin(), norm2_.end());
  for (int r = 0; r < m; ++r)
    if (norm2_[r] == max_norm) long_mask_.set(r);
  if (!long_mask_.test(theta_)) throw std::logic_error("highest root is not long");

  sum_.assign(m, std::vector<int16_t>(m, -1));
  sub_simple_.assign(m, std::vector<int16_t>(n, -1));
  pairing_.assign(m, std::vector<int8_t>(m, 0));
  bilinear_.assign(m, std::vector<int>(m, 0));
  nonsummable_.assign(m, RootSet{});
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      Coeffs c(n);
      for (int j = 0; j < n; ++j) c[j] = roots_[r][j] + roots_[s][j];
      auto it = index.find(c);
      if (it != index.end())
        sum_[r][s] = static_cast<int16_t>(it->second);
      else
        nonsummable_[r].set(s);
      bilinear_[r][s] = bilinear(roots_[r], roots_[s]);
      int num = 2 * bilinear_[r][s];
      if (num % norm2_[s] != 0) throw std::logic_error("non-integral Cartan pairing");
      pairing_[r][s] = static_cast<int8_t>(num / norm2_[s]);
    }
    for (int i = 0; i < n; ++i) {
      Coeffs c = roots_[r];
      c[i] -= 1;
      auto it = index.find(c);
      if (it != index.end()) sub_simple_[r][i] = static_cast<int16_t>(it->second);
    }
  }

  upset_.assign(m, RootSet{});
  downset_.assign(m, RootSet{});
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      if (leq(r, s)) {
        upset_[r].set(s);
        downset_[s].set(r);
      }
  for (int r = 0; r < m; ++r)
    for (int i = 1; i <= n; ++i) {
      int below = sub_simple(r, i);
      if (below >= 0) covers_.emplace_back(below, r);
    }
  std::sort(covers_.begin(), covers_.end());

  for (int r = 0; r < m; ++r)
    if (bilinear_[r][theta_] != 0) heis_.set(r);

  // theta is fundamental iff exactly one simple pairs with it, with value 1.
  theta_coroot_row_.resize(n);
  int nonzero = 0, last = 0;
  for (int i = 0; i < n; ++i) {
    int num = 2 * bilinear(roots_[simple_idx_[i]], roots_[theta_]);
    theta_coroot_row_[i] = num / norm2_[theta_];
    if (theta_coroot_row_[i] != 0) {
      ++nonzero;
      last = i + 1;
    }
  }
  theta_fundamental_ = (nonzero == 1 && theta_coroot_row_[last - 1] == 1);
  alpha_theta_ = theta_fundamental_ ? last : 0;
}

std::vector<int> RootSystem::long_simples() const {
  std::vector<int> out;
  for (int i = 1; i <= rank(); ++i)
    if (is_long(simple(i))) out.push_back(i);
  return out;
}

int RootSystem::simple_number_of(int idx) const {
  if (heights_[idx] != 1) return 0;
  for (int i = 0; i < rank(); ++i)
    if (roots_[idx][i] == 1) return i + 1;
  return 0;
}

int RootSystem::index_of(const Coeffs& c) const {
  // roots are sorted by (height, lex); binary search within the height block
  auto cmp = [this](int idx, const Coeffs& v) {
    int hv = std::accumulate(v.begin(), v.end(), 0);
    if (heights_[idx] != hv) return heights_[idx] < hv;
    return roots_[idx] < v;
  };
  int lo = 0, hi = size();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (cmp(mid, c))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && roots_[lo] == c) return lo;
  return -1;
}

bool RootSystem::is_root(const Coeffs& c) const {
  if (index_of(c) >= 0) return true;
  Coeffs neg(c.size());
  for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  return index_of(neg) >= 0;
}

int RootSystem::bilinear(const Coeffs& x, const Coeffs& y) const {
  int n = rank(), acc = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) acc += x[i] * y[j] * bilinear_sym_[i][j];
  }
  return acc;
}

int RootSystem::pairing(const Coeffs& x, const Coeffs& mu) const {
  int nn = bilinear(mu, mu);
  if (nn == 0) throw std::invalid_argument("pairing against the zero vector");
  int num = 2 * bilinear(x, mu);
  if (num % nn != 0) throw std::logic_error("non-integral pairing");
  return num / nn;
}

int RootSystem::pairing_simple(const Coeffs& x, int i) const {
  int acc = 0;
  for (int j = 0; j < rank(); ++j) acc += x[j] * cartan_[j][i - 1];
  return acc;
}

int RootSystem::theta_pairing(const Coeffs& x) const {
  int acc = 0;
  for (int j = 0; j < rank(); ++j) acc += x[j] * theta_coroot_row_[j];
  return acc;
}

bool RootSystem::leq(int gamma, int mu) const {
  const Coeffs& g = roots_[gamma];
  const Coeffs& m = roots_[mu];
  for (int i = 0; i < rank(); ++i)
    if (g[i] > m[i]) return false;
  return true;
}

std::vector<int> RootSystem::pi_heis() const {
  std::vector<int> out;
  for (int i = 1; i <= rank(); ++i)
    if (heis_.test(simple(i))) out.push_back(i);
  return out;
}

std::string RootSystem::coeff_string(const Coeffs& c) const {
  bool digits = c.size() <= 9;
  for (int x : c)
    if (x < 0 || x > 9) digits = false;
  std::string s;
  if (digits) {
    for (int x : c) s += static_cast<char>('0' + x);
  } else {
    s = "[";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    s += "]";
  }
  return s;
}

std::string RootSystem::root_string(int idx) const { return coeff_string(roots_[idx]); }

nlohmann::json RootSystem::catalogue_json() const {
  nlohmann::json j;
  j["type"] = std::string(1, static_cast<char>(type_.family));
  j["rank"] = rank();
  j["positive_roots"] = nlohmann::json::array();
  for (int r = 0; r < size(); ++r) j["positive_roots"].push_back(roots_[r]);
  j["theta_index"] = theta_;
  j["long_indices"] = long_mask_.indices();
  j["cartan"] = cartan_;
  return j;
}

const std::array<int, 7>& paper_e6_to_bourbaki() {
  static const std::array<int, 7> p2b{0, 1, 3, 4, 5, 6, 2};
  return p2b;
}

const std::array<int, 7>& bourbaki_to_paper_e6() {
  static const std::array<int, 7> b2p = [] {
    std::array<int, 7> out{};
    const auto& p2b = paper_e6_to_bourbaki();
    for (int p = 1; p <= 6; ++p) out[p2b[p]] = p;
    return out;
  }();
  return b2p;
}

}  // namespace abid
