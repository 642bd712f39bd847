#include "qalcove/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "qalcove/errors.hpp"

namespace qalcove {

namespace {

bool admissible(char s, int n) {
  switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

// Symmetric matrix <alpha_i, alpha_j> with short roots of squared length 2.
IntMatrix simple_root_gram(const LieType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  IntMatrix b(n, n);
  auto link = [&](std::size_t i, std::size_t j, std::int64_t v) {
    b(i, j) = v;
    b(j, i) = v;
  };
  switch (t.series()) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) b(i, i) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) b(i, i) = 4;
      b(n - 1, n - 1) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) b(i, i) = 2;
      b(n - 1, n - 1) = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) b(i, i) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (std::size_t i = 0; i < n; ++i) b(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b(0, 0) = b(1, 1) = 4;
      b(2, 2) = b(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      b(0, 0) = 2;
      b(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return b;
}

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw SelfCheckFailure("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

LieType LieType::make(char series, int rank, int max_rank) {
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (!admissible(s, rank)) {
    throw ValidationError("inadmissible Lie type " + std::string(1, s) + std::to_string(rank));
  }
  if (rank > max_rank) {
    throw ValidationError("rank " + std::to_string(rank) + " exceeds the configured ceiling of " +
                          std::to_string(max_rank));
  }
  return LieType(s, rank);
}

LieType LieType::parse(std::string_view text, int max_rank) {
  if (text.size() < 2) throw ValidationError("malformed Lie type '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ValidationError("malformed Lie type '" + std::string(text) + "'");
  }
  return make(text[0], rank, max_rank);
}

RootConstants tabulated_constants(const LieType& t) {
  const int n = t.rank();
  switch (t.series()) {
    case 'A': return {n + 1, 1, n + 1, n + 1};
    case 'B': {
      const int m = n / 2;
      return n % 2 ? RootConstants{2, 2, 4 * m + 2, 4 * m + 1} : RootConstants{1, 2, 4 * m, 4 * m - 1};
    }
    case 'C': return {1, 2, 2 * n, n + 1};
    case 'D': {
      const int m = n / 2;
      return n % 2 ? RootConstants{4, 1, 4 * m, 4 * m} : RootConstants{2, 1, 4 * m - 2, 4 * m - 2};
    }
    case 'E':
      if (n == 6) return {3, 1, 12, 12};
      if (n == 7) return {2, 1, 18, 18};
      return {1, 1, 30, 30};
    case 'F': return {1, 2, 12, 9};
    case 'G': return {1, 3, 6, 4};
  }
  throw ValidationError("unknown series");
}

std::shared_ptr<const RootSystem> RootSystem::build(const LieType& t) {
  return std::shared_ptr<const RootSystem>(new RootSystem(t));
}

RootSystem::RootSystem(const LieType& t) : type_(t), rank_(static_cast<std::size_t>(t.rank())) {
  const std::size_t n = rank_;
  const IntMatrix b = simple_root_gram(t);

  d_.resize(n);
  for (std::size_t i = 0; i < n; ++i) d_[i] = b(i, i) / 2;

  cartan_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_(i, j) = 2 * b(i, j) / b(j, j);
  cartan_inverse_ = invert(cartan_);

  simple_roots_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Weight a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = cartan_(i, j);
    simple_roots_.push_back(std::move(a));
  }

  // <lambda_i, lambda_j> = d_i (A^{-1})_{ji}; L clears every denominator.
  std::int64_t L = 1;
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram[i][j] = Rational(d_[i]) * cartan_inverse_[j][i];
      L = std::lcm(L, gram[i][j].denominator());
    }
  gram_L_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = gram[i][j] * Rational(L);
      gram_L_(i, j) = v.numerator();
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram_L_(i, j) != gram_L_(j, i)) throw SelfCheckFailure("weight Gram matrix is not symmetric");

  // Positive roots by closure over root strings, in the simple-root basis.
  std::set<std::vector<std::int64_t>> known;
  std::vector<std::vector<std::int64_t>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    known.insert(c);
    layer.push_back(c);
  }
  auto to_weight = [&](const std::vector<std::int64_t>& c) {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i)
      if (c[i])
        for (std::size_t j = 0; j < n; ++j) w[j] += c[i] * cartan_(i, j);
    return w;
  };
  while (!layer.empty()) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& c : layer) {
      const Weight w = to_weight(c);
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        auto down = c;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        const std::int64_t q = p - w[i];
        if (q > 0) {
          auto up = c;
          up[i] += 1;
          if (!known.contains(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  std::vector<std::vector<std::int64_t>> coeffs(known.begin(), known.end());
  std::sort(coeffs.begin(), coeffs.end(), [](const auto& x, const auto& y) {
    const auto hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    const auto hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    return hx != hy ? hx < hy : x < y;
  });

  for (const auto& c : coeffs) {
    std::int64_t norm2 = 0;  // <beta, beta>
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm2 += c[i] * c[j] * b(i, j);
    const std::int64_t half = norm2 / 2;
    std::vector<std::int64_t> co(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((c[i] * d_[i]) % half != 0) throw SelfCheckFailure("non-integral coroot coefficients");
      co[i] = c[i] * d_[i] / half;
    }
    root_index_.emplace(to_weight(c), positive_roots_.size());
    positive_roots_.push_back(to_weight(c));
    root_coeffs_.push_back(c);
    coroot_coeffs_.push_back(std::move(co));
    half_norms_.push_back(half);
  }

  rho_ = Weight(std::vector<std::int64_t>(n, 1));

  const std::int64_t D = *std::max_element(d_.begin(), d_.end());
  bool found_theta = false, found_phi = false;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    if (!positive_roots_[k].is_dominant()) continue;
    if (half_norms_[k] == D) {
      if (found_theta) throw SelfCheckFailure("two dominant long roots");
      theta_index_ = k;
      found_theta = true;
    }
    if (half_norms_[k] == 1) {
      if (found_phi) throw SelfCheckFailure("two dominant short roots");
      phi_index_ = k;
      found_phi = true;
    }
  }
  if (!found_theta || !found_phi) throw SelfCheckFailure("missing highest root");

  constants_.L = static_cast<int>(L);
  constants_.D = static_cast<int>(D);
  constants_.h = static_cast<int>(coroot_pairing(rho_, phi_index_) + 1);
  constants_.hv = static_cast<int>(coroot_pairing(rho_, theta_index_) + 1);

  if (positive_roots_.size() * 2 != n * static_cast<std::size_t>(constants_.h)) {
    throw SelfCheckFailure("number of positive roots disagrees with rank*h/2 for " + t.to_string());
  }
  const RootConstants expected = tabulated_constants(t);
  if (!(expected == constants_)) {
    throw SelfCheckFailure("computed (L, D, h, hv) for " + t.to_string() + " disagree with the table");
  }

  // |W| = prod (m_i + 1) over exponents; exponent k occurs c_k - c_{k+1} times,
  // where c_k counts positive roots of height k.
  std::map<std::int64_t, std::int64_t> by_height;
  for (const auto& c : root_coeffs_) ++by_height[std::accumulate(c.begin(), c.end(), std::int64_t{0})];
  for (const auto& [k, ck] : by_height) {
    const auto it = by_height.find(k + 1);
    const std::int64_t mult = ck - (it == by_height.end() ? 0 : it->second);
    for (std::int64_t r = 0; r < mult; ++r) weyl_order_ *= static_cast<std::uint64_t>(k + 1);
  }
}

std::optional<std::size_t> RootSystem::find_positive_root(const Weight& w) const {
  auto it = root_index_.find(w);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t RootSystem::inner_product_L(const Weight& a, const Weight& b) const {
  if (a.rank() != rank_ || b.rank() != rank_) throw ValidationError("weight rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    s += a[i] * dot(gram_L_.row(i), b.coords());
  }
  return s;
}

std::int64_t RootSystem::pairing_with_coroot(const Weight& lam, const Weight& alpha) const {
  if (lam.rank() != rank_ || alpha.rank() != rank_) throw ValidationError("weight rank mismatch");
  if (auto k = find_positive_root(alpha)) return coroot_pairing(lam, *k);
  if (auto k = find_positive_root(-alpha)) return -coroot_pairing(lam, *k);
  throw ValidationError("'" + alpha.to_string() + "' is not a root of " + type_.to_string());
}

void RootSystem::reflect_in_place(Weight& v, std::size_t i) const {
  const std::int64_t p = v[i];
  if (p == 0) return;
  const auto a = cartan_.row(i);
  for (std::size_t j = 0; j < rank_; ++j) v[j] -= p * a[j];
}

Weight RootSystem::reflect_root(const Weight& v, std::size_t k) const {
  const std::int64_t p = coroot_pairing(v, k);
  Weight out = v;
  if (p != 0) out -= p * positive_roots_[k];
  return out;
}

std::vector<Rational> RootSystem::to_root_basis(const Weight& w) const {
  std::vector<Rational> x(rank_, Rational(0));
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i)
      if (w[i]) x[j] += Rational(w[i]) * cartan_inverse_[i][j];
  return x;
}

std::vector<Rational> RootSystem::to_coroot_basis(const Weight& w) const {
  auto x = to_root_basis(w);
  for (std::size_t i = 0; i < rank_; ++i) x[i] *= Rational(d_[i]);
  return x;
}

}  // namespace qalcove
