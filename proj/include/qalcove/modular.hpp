#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qalcove/characters.hpp"
#include "qalcove/cyclotomic.hpp"
#include "qalcove/fusion.hpp"
#include "qalcove/weyl.hpp"

namespace qalcove {

/// Generators of W_l for the sign law.
struct SimpleReflection {
  std::size_t index;  ///< 0-based
};
struct UpperWallReflection {};
struct LatticeTranslation {
  Weight t;  ///< must lie in M
};
using AffineGenerator = std::variant<SimpleReflection, UpperWallReflection, LatticeTranslation>;

/// Square matrix of cyclotomic numbers indexed by the alcove.
class SMatrix {
 public:
  SMatrix() = default;
  SMatrix(std::vector<Weight> alcove, std::vector<CycNum> entries)
      : alcove_(std::move(alcove)), entries_(std::move(entries)) {}

  const std::vector<Weight>& alcove() const noexcept { return alcove_; }
  std::size_t size() const noexcept { return alcove_.size(); }
  const CycNum& at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

 private:
  std::vector<Weight> alcove_;
  std::vector<CycNum> entries_;
};

enum class SMatrixMethod {
  AlternatingSum,  ///< sum over W of signed q-powers
  Character,       ///< chi_gamma(q^{2(lam+rho)}) times the Weyl denominator
  Auto,            ///< AlternatingSum unless |W| is large
};

enum class Verdict { Modular, QuotientExists, NoQuotient };
std::string to_string(Verdict v);

struct TransparentObject {
  Weight weight;
  std::optional<std::size_t> isometry_index;  ///< the i of iota_i, none for the unit
  CycNum qdim;
  int qdim_sign = 1;  ///< qdim is exactly qdim_sign
  CycNum twist;
  bool twist_squared_is_one = true;
};

struct ModularityReport {
  Verdict verdict = Verdict::Modular;
  std::vector<TransparentObject> transparent_objects;
  std::size_t isometry_group_order = 1;
  std::vector<std::vector<Weight>> proportional_classes;  ///< classes of size > 1 only
  std::string notes;
};

struct ModularData {
  std::vector<Weight> alcove;
  std::vector<CycNum> qdims;
  SMatrix smatrix;
  std::vector<CycNum> twists;
};

/// Exact quantum data for one alcove context, in Z[s]/Phi_{lL} with q = s^L.
class Modular {
 public:
  explicit Modular(AlcoveContext ctx, std::shared_ptr<const Characters> chars = nullptr);

  const AlcoveContext& context() const noexcept { return ctx_; }
  const CycRingPtr& ring() const noexcept { return ring_; }
  const Characters& characters() const noexcept { return *chars_; }
  const std::shared_ptr<const Characters>& characters_ptr() const noexcept { return chars_; }

  /// Quantum Weyl dimension formula, for any weight (non-dominant weights use the
  /// same product). Computed as +-q^k prod_d Phi_d(q)^{e_d}; a negative e_d throws
  /// SelfCheckFailure.
  CycNum qdim(const Weight& lam) const;
  /// Some positive root beta has 2<lam+rho, beta> = 0 mod l.
  bool qdim_zero_by_stabilizer(const Weight& lam) const;
  /// qdim(sigma . lam) = (-1)^sigma qdim(lam), exactly.
  bool qdim_sign_law_check(const Weight& lam, const AffineGenerator& sigma) const;

  /// Unnormalized symmetric S-matrix sum_w (-1)^w q^{2<lam+rho, w(gam+rho)>}.
  /// Checks symmetry and S_{lam,0} = qdim(lam) S_{0,0}; failures throw SelfCheckFailure.
  SMatrix s_matrix(SMatrixMethod method = SMatrixMethod::Auto) const;
  /// q^{<lam, lam+2rho>} = s^{L<lam, lam+2rho>}.
  CycNum twist(const Weight& lam) const;

  /// The unit plus iota_i(0) for every half-lattice generator i. Throws SelfCheckFailure when
  /// some qdim is not +-1 or iota_i(0) leaves the alcove.
  std::vector<TransparentObject> transparent_objects() const;
  /// Verdict plus the S-matrix cross-check: rows are proportional exactly for
  /// pairs in one orbit of the isometry group.
  ModularityReport classify(SMatrixMethod method = SMatrixMethod::Auto) const;
  ModularityReport classify(const SMatrix& s) const;

  ModularData modular_data(SMatrixMethod method = SMatrixMethod::Auto) const;

 private:
  CycNum phi_at_q(std::int64_t d) const;

  AlcoveContext ctx_;
  std::shared_ptr<const Characters> chars_;
  CycRingPtr ring_;
};

/// Weyl group size above which SMatrixMethod::Auto uses the character route.
inline constexpr std::uint64_t kAlternatingSumWeylLimit = 20'000;

/// Largest |N_lam v - (S_{lam,g}/S_{0,g}) v| / |v| over lam and columns v = S(:, g),
/// with S scaled to unit max modulus, at s = exp(2 pi i residue / lL).
double verlinde_residual(const FusionTable& table, const SMatrix& s, std::int64_t residue = 1);

/// Partition of alcove indices into classes of exactly proportional S-rows.
std::vector<std::vector<std::size_t>> proportional_row_classes(const SMatrix& s);

}  // namespace qalcove
