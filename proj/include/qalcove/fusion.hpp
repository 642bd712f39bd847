#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qalcove/characters.hpp"
#include "qalcove/root_system.hpp"
#include "qalcove/weyl.hpp"

namespace qalcove {

/// Truncated tensor-product coefficients M_{lambda,gamma}^mu keyed by mu; absent means 0.
using FusionCoeffs = std::map<Weight, std::int64_t>;

/// Dense table of M_{i,j}^k indexed by alcove positions.
class FusionTable {
 public:
  FusionTable() = default;
  explicit FusionTable(std::vector<Weight> alcove)
      : alcove_(std::move(alcove)), data_(alcove_.size() * alcove_.size() * alcove_.size(), 0) {}

  const std::vector<Weight>& alcove() const noexcept { return alcove_; }
  std::size_t size() const noexcept { return alcove_.size(); }
  std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * size() + j) * size() + k]; }
  std::int64_t& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * size() + j) * size() + k]; }

  bool has_unit() const;
  bool is_commutative() const;
  bool is_nonnegative() const;
  bool is_associative() const;

 private:
  std::vector<Weight> alcove_;
  std::vector<std::int64_t> data_;
};

/// Quantum Racah formula on one alcove context.
class FusionEngine {
 public:
  explicit FusionEngine(AlcoveContext ctx, std::shared_ptr<const Characters> chars = nullptr);

  const AlcoveContext& context() const noexcept { return ctx_; }
  const Characters& characters() const noexcept { return *chars_; }

  /// M_{lam,gam}^mu for all mu, by folding gam + nu over the weights nu of W^lam.
  /// Throws ValidationError if either weight lies outside the alcove.
  FusionCoeffs coeffs(const Weight& lam, const Weight& gam) const;

  /// (N_lam)_{gam,mu} = M_{lam,gam}^mu in alcove order.
  IntMatrix matrix(const Weight& lam) const;

  /// Every coefficient; pairs are computed in parallel and assembled in alcove order.
  FusionTable full_table() const;

  /// M_{lam,gam}^mu = M_{lam,iota(gam)}^{iota(mu)} for all alcove triples.
  bool check_symmetry(const AlcoveIsometry& iota) const;
  bool check_symmetry(const AlcoveIsometry& iota, const FusionTable& table) const;

  /// check_symmetry for the half-lattice isometry lambda_i; nullopt when i is not
  /// among half_lattice_generators. Throws SelfCheckFailure if sigma_i
  /// cannot be constructed.
  std::optional<bool> check_isometry_symmetry(std::size_t i) const;

 private:
  AlcoveContext ctx_;
  std::shared_ptr<const Characters> chars_;
};

}  // namespace qalcove
