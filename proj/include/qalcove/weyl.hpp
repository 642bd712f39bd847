#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qalcove/root_system.hpp"
#include "qalcove/weight.hpp"

namespace qalcove {

// ---------------------------------------------------------------------------
// Classical Weyl group
// ---------------------------------------------------------------------------

/// A Weyl group element as a word in simple reflections, letters 1..rank.
/// The word {a, b, c} denotes s_a s_b s_c, so c acts first.
using WeylWord = std::vector<int>;

/// Linear action of a word.
Weight apply_word(const RootSystem& rs, const WeylWord& word, Weight v);

/// Result of moving a vector into the closed dominant chamber by simple reflections.
struct ChamberFold {
  Weight image;
  int sign = 1;  ///< (-1)^(number of reflections)
  std::size_t reflections = 0;
  bool regular = true;  ///< false when the image lies on a chamber wall
};

/// Linear action; reflects in the lowest-index negative coordinate until dominant.
ChamberFold fold_to_chamber(const RootSystem& rs, Weight v);

/// Word w with w(v) dominant, using only the letters flagged in `allowed`
/// (all letters when empty).
WeylWord word_to_dominant(const RootSystem& rs, Weight v, const std::vector<bool>& allowed = {});

/// Visits every point of the W-orbit of a dominant weight exactly once,
/// passing the point and its depth (the length of the shortest word reaching it).
/// Uses a parent rule on the lowest negative coordinate, so no visited set is kept.
template <class Fn>
void for_each_orbit_point(const RootSystem& rs, const Weight& dominant, Fn&& fn) {
  const std::size_t n = rs.rank();
  std::vector<std::pair<Weight, std::size_t>> stack;
  stack.emplace_back(dominant, 0);
  while (!stack.empty()) {
    auto [v, depth] = std::move(stack.back());
    stack.pop_back();
    fn(static_cast<const Weight&>(v), depth);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] <= 0) continue;
      Weight u = rs.reflect(v, i);
      bool child = true;
      for (std::size_t j = 0; j < i; ++j)
        if (u[j] < 0) {
          child = false;
          break;
        }
      if (child) stack.emplace_back(std::move(u), depth + 1);
    }
  }
}

// ---------------------------------------------------------------------------
// Affine Weyl group at a root of unity
// ---------------------------------------------------------------------------

/// Root system plus root-of-unity order l and everything derived from it.
class AlcoveContext {
 public:
  /// Throws InvalidContext when l' < D*hv (D | l') or l' <= h (otherwise).
  static AlcoveContext make(RootSystemPtr rs, std::int64_t l);
  /// The checks of make without building anything.
  static void validate(const RootSystem& rs, std::int64_t l);

  const RootSystem& rs() const noexcept { return *rs_; }
  const RootSystemPtr& rs_ptr() const noexcept { return rs_; }
  std::int64_t l() const noexcept { return l_; }
  std::int64_t l_prime() const noexcept { return l_prime_; }
  std::int64_t l_i(std::size_t i) const { return l_i_[i]; }
  std::int64_t l_i_prime(std::size_t i) const { return l_i_prime_[i]; }
  bool d_divides() const noexcept { return d_divides_; }

  /// theta if D | l', else phi.
  std::size_t theta0_index() const noexcept { return theta0_index_; }
  const Weight& theta0() const { return rs_->positive_roots()[theta0_index_]; }
  /// <v, coroot(theta0)>.
  std::int64_t upper_pairing(const Weight& v) const { return rs_->coroot_pairing(v, theta0_index_); }
  /// The upper wall is <v, coroot(theta0)> = upper_bound() in rho-shifted coordinates
  /// (equivalently <v, theta0> = l').
  std::int64_t upper_bound() const noexcept { return upper_bound_; }

  /// Generators of the translation lattice M: l' coroot_i if D | l', else l' alpha_i.
  const std::vector<Weight>& m_generators() const noexcept { return m_generators_; }
  bool in_translation_lattice(const Weight& t) const;

  /// Dominant weights strictly inside the principal alcove, in lexicographic order.
  const std::vector<Weight>& alcove() const noexcept { return alcove_; }
  bool in_alcove(const Weight& lam) const;
  std::optional<std::size_t> alcove_index(const Weight& lam) const;

 private:
  AlcoveContext() = default;

  RootSystemPtr rs_;
  std::int64_t l_ = 0, l_prime_ = 0, upper_bound_ = 0;
  std::vector<std::int64_t> l_i_, l_i_prime_;
  bool d_divides_ = false;
  std::size_t theta0_index_ = 0;
  std::vector<Weight> m_generators_;
  std::vector<Weight> alcove_;
  std::unordered_map<Weight, std::size_t, WeightHash> alcove_index_;
};

/// An element of W_l: x -> w(x) + translation, with translation in M.
struct AffineElement {
  WeylWord word;
  Weight translation;
};

/// sigma . lam = sigma(lam + rho) - rho. Throws ValidationError on bad letters
/// or a translation outside M.
Weight dot_action(const AlcoveContext& ctx, const AffineElement& sigma, const Weight& lam);
/// The composite sigma o tau.
AffineElement compose(const RootSystem& rs, const AffineElement& sigma, const AffineElement& tau);
/// Dot action of the reflection in the upper alcove wall.
Weight upper_wall_reflection(const AlcoveContext& ctx, const Weight& lam);

struct FoldResult {
  Weight rep;       ///< closed-alcove representative of the dot-orbit
  int sign = 1;     ///< 0 on a wall, else (-1)^reflections
  std::size_t reflections = 0;
};

inline constexpr std::size_t kFoldStepCap = 1'000'000;

/// Folds lam into the principal alcove under the dot action of W_l.
/// Simple reflections (lowest index first) take priority over the upper wall.
FoldResult fold(const AlcoveContext& ctx, const Weight& lam);

/// True when lam and gam lie in the same dot-orbit of W_l. Wall weights compare
/// through their closed-alcove representatives.
bool linked(const AlcoveContext& ctx, const Weight& lam, const Weight& gam);

/// Tabulated fundamental-weight indices (1-based) of the extra alcove symmetries
/// for this type and parity case.
std::vector<std::size_t> half_lattice_indices(const LieType& t, std::int64_t l, bool d_divides);

/// One index i per nontrivial coset of ((l/2) coroot lattice intersect weight
/// lattice) modulo M, the lowest with l' lambda_i in the coset and iota_i an
/// alcove isometry. Computed by exact lattice arithmetic; throws
/// SelfCheckFailure if some coset has no such representative.
std::vector<std::size_t> half_lattice_generators(const AlcoveContext& ctx);

/// l' lambda_i for the computed generators.
std::vector<Weight> weight_translations_in_half_dual_lattice(const AlcoveContext& ctx);

/// The tabulated indices represent exactly the nontrivial cosets.
bool half_lattice_table_agrees(const AlcoveContext& ctx);

/// Checks, for coroot-lattice vectors with coordinates in [-radius, radius],
/// that (l/2) b in the root lattice implies (l/2) b in M.
bool check_weyl_dagger_restriction(const AlcoveContext& ctx, int sample_radius);

/// iota(lam) = sigma_i . lam + l' lambda_i where sigma_i sends alpha_i to -theta0
/// and permutes the other simple roots.
/// lam -> sigma^{-1}(lam + rho) - rho + l' lambda_i, where sigma sends alpha_i to
/// -theta0 and permutes the other simple roots.
struct AlcoveIsometry {
  std::size_t index = 0;  ///< i, 1-based
  WeylWord sigma;
  Weight translation;
  Weight apply(const AlcoveContext& ctx, const Weight& lam) const;
};

/// Builds iota_i if a Weyl element of the required form exists and iota_i maps
/// the alcove onto itself; nullopt otherwise.
std::optional<AlcoveIsometry> simple_current_isometry(const AlcoveContext& ctx, std::size_t i);

/// The isometries for the computed generators. Throws SelfCheckFailure if one
/// cannot be constructed.
std::vector<AlcoveIsometry> half_lattice_isometries(const AlcoveContext& ctx);

}  // namespace qalcove
