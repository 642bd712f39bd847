#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qalcove/weight.hpp"

namespace qalcove {

using Rational = boost::rational<std::int64_t>;

/// Series letter plus rank of a simple Lie algebra, e.g. ('G', 2).
class LieType {
 public:
  /// Desk-scale guard; callers may raise it explicitly.
  static constexpr int kDefaultMaxRank = 12;

  /// Throws ValidationError for inadmissible (series, rank) pairs.
  static LieType make(char series, int rank, int max_rank = kDefaultMaxRank);
  /// Parses "A2", "g2", "D5" (case-insensitive, no separators).
  static LieType parse(std::string_view text, int max_rank = kDefaultMaxRank);

  char series() const noexcept { return series_; }
  int rank() const noexcept { return rank_; }
  std::string to_string() const { return std::string(1, series_) + std::to_string(rank_); }

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  LieType(char s, int r) : series_(s), rank_(r) {}
  char series_ = 'A';
  int rank_ = 1;
};

/// Scalar invariants of a root system.
struct RootConstants {
  int L = 0;   ///< least integer with L<x,y> integral for all weights x, y
  int D = 0;   ///< squared length ratio long/short
  int h = 0;   ///< Coxeter number
  int hv = 0;  ///< dual Coxeter number
  friend bool operator==(const RootConstants&, const RootConstants&) = default;
};

/// Reference values for (L, D, h, hv), in the classical tabulation.
RootConstants tabulated_constants(const LieType& t);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Immutable root data for one simple type, in the fundamental-weight basis.
///
/// Conventions: the inner product is normalized so short roots have squared
/// length 2; simple roots are labelled as in Humphreys/Bourbaki (B_n: alpha_n
/// short, C_n: alpha_n long, F_4: alpha_1, alpha_2 long, G_2: alpha_1 short).
/// cartan()(i, j) = <alpha_i, coroot_j>, so row i of the Cartan matrix is
/// alpha_i written in fundamental weights.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const LieType& t);

  const LieType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<Weight>& simple_roots() const noexcept { return simple_roots_; }

  /// Positive roots ordered by height, then by simple-root coefficients.
  const std::vector<Weight>& positive_roots() const noexcept { return positive_roots_; }
  std::size_t num_positive_roots() const noexcept { return positive_roots_.size(); }
  /// Coefficients of positive root k in the simple-root basis.
  std::span<const std::int64_t> root_coefficients(std::size_t k) const { return root_coeffs_[k]; }
  /// Coefficients of the coroot of positive root k in the simple-coroot basis.
  std::span<const std::int64_t> coroot_coefficients(std::size_t k) const { return coroot_coeffs_[k]; }
  /// <beta_k, beta_k> / 2, i.e. 1 for short roots and D for long ones.
  std::int64_t root_half_norm(std::size_t k) const { return half_norms_[k]; }
  std::optional<std::size_t> find_positive_root(const Weight& w) const;

  /// d_i = <alpha_i, alpha_i> / 2.
  const std::vector<std::int64_t>& d() const noexcept { return d_; }
  /// L * <lambda_i, lambda_j>, integral and symmetric positive definite.
  const IntMatrix& gram_L() const noexcept { return gram_L_; }
  const RootConstants& constants() const noexcept { return constants_; }
  int L() const noexcept { return constants_.L; }
  int D() const noexcept { return constants_.D; }
  int h() const noexcept { return constants_.h; }
  int hv() const noexcept { return constants_.hv; }

  const Weight& rho() const noexcept { return rho_; }
  const Weight& theta() const noexcept { return positive_roots_[theta_index_]; }
  const Weight& phi() const noexcept { return positive_roots_[phi_index_]; }
  std::size_t theta_index() const noexcept { return theta_index_; }
  std::size_t phi_index() const noexcept { return phi_index_; }

  /// L * <a, b>.
  std::int64_t inner_product_L(const Weight& a, const Weight& b) const;
  /// <lam, coroot(alpha)> for alpha a positive or negative root; throws otherwise.
  std::int64_t pairing_with_coroot(const Weight& lam, const Weight& alpha) const;
  /// <lam, coroot of positive root k>.
  std::int64_t coroot_pairing(const Weight& lam, std::size_t k) const {
    return dot(lam.coords(), coroot_coeffs_[k]);
  }
  /// <lam, positive root k>; always an integer.
  std::int64_t root_pairing(const Weight& lam, std::size_t k) const {
    return half_norms_[k] * coroot_pairing(lam, k);
  }

  /// Simple reflection s_i (linear action).
  void reflect_in_place(Weight& v, std::size_t i) const;
  Weight reflect(Weight v, std::size_t i) const {
    reflect_in_place(v, i);
    return v;
  }
  /// Reflection in positive root k (linear action).
  Weight reflect_root(const Weight& v, std::size_t k) const;

  /// Coordinates of w in the simple-root basis (rational in general).
  std::vector<Rational> to_root_basis(const Weight& w) const;
  /// Coordinates of w in the simple-coroot basis.
  std::vector<Rational> to_coroot_basis(const Weight& w) const;

  /// Order of the Weyl group, from the root-height partition.
  std::uint64_t weyl_group_order() const noexcept { return weyl_order_; }

 private:
  explicit RootSystem(const LieType& t);

  LieType type_;
  std::size_t rank_;
  IntMatrix cartan_;
  IntMatrix gram_L_;
  std::vector<std::int64_t> d_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> root_coeffs_;
  std::vector<std::vector<std::int64_t>> coroot_coeffs_;
  std::vector<std::int64_t> half_norms_;
  std::unordered_map<Weight, std::size_t, WeightHash> root_index_;
  RootConstants constants_;
  Weight rho_;
  std::size_t theta_index_ = 0;
  std::size_t phi_index_ = 0;
  std::uint64_t weyl_order_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace qalcove
