#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qalcove {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients (constant term first) of the n-th cyclotomic polynomial. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

class CycNum;

/// Z[s] / Phi_n(s): exact arithmetic with a primitive n-th root of unity s.
class CycRing : public std::enable_shared_from_this<CycRing> {
 public:
  static std::shared_ptr<const CycRing> make(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<std::int64_t>& phi() const noexcept { return *phi_; }

  CycNum zero() const;
  CycNum one() const;
  CycNum from_integer(std::int64_t v) const;
  /// s^k, exponent taken mod n.
  CycNum s_power(std::int64_t k) const;
  /// q^k with q = s^L.
  CycNum q_power(std::int64_t L, std::int64_t k) const;
  /// Balanced q-integer [k] at q_d = q^d: q_d^{k-1} + q_d^{k-3} + ... + q_d^{1-k}.
  CycNum q_integer(std::int64_t L, std::int64_t d, std::int64_t k) const;
  /// sum_k counts[k] s^k for an exponent histogram of length n.
  CycNum from_exponent_counts(std::span<const std::int64_t> counts) const;
  /// Reduces a polynomial in s of any degree.
  CycNum from_polynomial(std::vector<BigInt> coeffs) const;

  /// Reduced power basis expansion of s^k, 0 <= k < n.
  const std::vector<std::int64_t>& power(std::int64_t k) const { return powers_[k]; }

 private:
  explicit CycRing(std::int64_t n);
  void reduce(std::vector<BigInt>& p) const;
  friend class CycNum;
  friend CycNum operator*(const CycNum& a, const CycNum& b);

  std::int64_t n_;
  std::size_t degree_;
  const std::vector<std::int64_t>* phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

using CycRingPtr = std::shared_ptr<const CycRing>;

/// Element of a cyclotomic ring in the power basis 1, s, ..., s^{deg-1}.
/// Always fully reduced, so equality is coefficient equality.
class CycNum {
 public:
  CycNum() = default;
  CycNum(CycRingPtr ring, std::vector<BigInt> coeffs);

  const CycRingPtr& ring() const noexcept { return ring_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(std::int64_t k);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(std::int64_t k, CycNum a) { return a *= k; }
  friend CycNum operator-(CycNum a) { return a *= -1; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Value at s = exp(2 pi i residue / n). Throws ValidationError unless gcd(residue, n) = 1.
  std::complex<double> embed(std::int64_t residue = 1) const;

 private:
  void check_same_ring(const CycNum& o) const;
  CycRingPtr ring_;
  std::vector<BigInt> c_;
};

}  // namespace qalcove
