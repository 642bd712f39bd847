#include "qalcove/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "qalcove/errors.hpp"

namespace qalcove {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Exact quotient of integer polynomials; divisor monic up to sign.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  const std::int64_t lead = den.back();
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k] / lead;
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw SelfCheckFailure("cyclotomic division left a remainder");
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycRing::CycRing(std::int64_t n) : n_(n), phi_(&cyclotomic_polynomial(n)) {
  degree_ = phi_->size() - 1;
  powers_.resize(static_cast<std::size_t>(n));
  std::vector<std::int64_t> cur(degree_, 0);
  if (degree_ > 0) cur[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    powers_[k] = cur;
    // multiply by s and reduce
    const std::int64_t top = degree_ > 0 ? cur[degree_ - 1] : 0;
    for (std::size_t j = degree_; j-- > 1;) cur[j] = cur[j - 1];
    if (degree_ > 0) cur[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < degree_; ++j) cur[j] -= top * (*phi_)[j];
  }
}

std::shared_ptr<const CycRing> CycRing::make(std::int64_t n) {
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  return std::shared_ptr<const CycRing>(new CycRing(n));
}

void CycRing::reduce(std::vector<BigInt>& p) const {
  const auto& phi = *phi_;
  for (std::size_t k = p.size(); k-- > degree_;) {
    if (p[k] == 0) continue;
    const BigInt c = p[k];
    for (std::size_t j = 0; j < degree_; ++j)
      if (phi[j] != 0) p[k - degree_ + j] -= c * phi[j];
    p[k] = 0;
  }
  p.resize(degree_);
}

CycNum CycRing::zero() const { return CycNum(shared_from_this(), std::vector<BigInt>(degree_)); }

CycNum CycRing::one() const { return from_integer(1); }

CycNum CycRing::from_integer(std::int64_t v) const {
  std::vector<BigInt> c(degree_);
  if (degree_ > 0) c[0] = v;
  return CycNum(shared_from_this(), std::move(c));
}

CycNum CycRing::s_power(std::int64_t k) const {
  const auto& p = powers_[mod(k, n_)];
  return CycNum(shared_from_this(), std::vector<BigInt>(p.begin(), p.end()));
}

CycNum CycRing::q_power(std::int64_t L, std::int64_t k) const { return s_power(mod(L, n_) * mod(k, n_)); }

CycNum CycRing::q_integer(std::int64_t L, std::int64_t d, std::int64_t k) const {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n_), 0);
  const std::int64_t m = k < 0 ? -k : k;
  const std::int64_t sgn = k < 0 ? -1 : 1;
  const std::int64_t step = mod(L * d, n_);
  for (std::int64_t j = 0; j < m; ++j) counts[mod(mod(m - 1 - 2 * j, n_) * step, n_)] += sgn;
  return from_exponent_counts(counts);
}

CycNum CycRing::from_exponent_counts(std::span<const std::int64_t> counts) const {
  if (counts.size() != static_cast<std::size_t>(n_)) throw ValidationError("exponent histogram has the wrong length");
  std::vector<BigInt> c(degree_);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const auto& p = powers_[k];
    for (std::size_t j = 0; j < degree_; ++j)
      if (p[j]) c[j] += BigInt(counts[k]) * p[j];
  }
  return CycNum(shared_from_this(), std::move(c));
}

CycNum CycRing::from_polynomial(std::vector<BigInt> coeffs) const {
  if (coeffs.size() < degree_) coeffs.resize(degree_);
  reduce(coeffs);
  return CycNum(shared_from_this(), std::move(coeffs));
}

CycNum::CycNum(CycRingPtr ring, std::vector<BigInt> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (!ring_) throw ValidationError("cyclotomic number without a ring");
  if (c_.size() < ring_->degree()) {
    c_.resize(ring_->degree());
  } else if (c_.size() > ring_->degree()) {
    ring_->reduce(c_);
  }
}

bool CycNum::is_zero() const noexcept {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void CycNum::check_same_ring(const CycNum& o) const {
  if (!ring_ || !o.ring_ || ring_->n() != o.ring_->n()) throw ValidationError("cyclotomic ring mismatch");
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_ring(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_ring(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator*=(std::int64_t k) {
  for (auto& x : c_) x *= k;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same_ring(b);
  const std::size_t deg = a.c_.size();
  if (deg == 0) return a;
  std::vector<BigInt> p(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (b.c_[j] != 0) p[i + j] += a.c_[i] * b.c_[j];
  }
  a.ring_->reduce(p);
  return CycNum(a.ring_, std::move(p));
}

bool operator==(const CycNum& a, const CycNum& b) {
  a.check_same_ring(b);
  return a.c_ == b.c_;
}

std::complex<double> CycNum::embed(std::int64_t residue) const {
  const std::int64_t n = ring_->n();
  if (n != 1 && std::gcd(mod(residue, n), n) != 1) {
    throw ValidationError("embedding residue " + std::to_string(residue) + " is not coprime to " + std::to_string(n));
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(residue, n)) / static_cast<double>(n);
  const std::complex<double> s = std::polar(1.0, angle);
  std::complex<double> acc = 0.0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = acc * s + c_[j].convert_to<double>();
  return acc;
}

}  // namespace qalcove
