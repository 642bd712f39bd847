#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qalcove/cyclotomic.hpp"
#include "qalcove/root_system.hpp"
#include "qalcove/weight.hpp"

namespace qalcove {

/// Character of the Weyl module W^lambda restricted to dominant weights.
struct DominantCharacter {
  Weight highest;
  std::map<Weight, std::int64_t> mults;  ///< dominant gamma <= highest, all positive
};

/// A weight of W^lambda together with its multiplicity.
using WeightedWeights = std::vector<std::pair<Weight, std::int64_t>>;

/// Classical tensor-product coefficients N_{lambda,gamma}^mu keyed by mu.
using Decomposition = std::map<Weight, std::int64_t>;

/// Weyl dimension formula.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lam);

/// Weight multiplicities by Freudenthal's recursion, memoized per highest weight.
/// Safe for concurrent use.
class Characters {
 public:
  explicit Characters(RootSystemPtr rs) : rs_(std::move(rs)) {}

  const RootSystem& rs() const noexcept { return *rs_; }
  const RootSystemPtr& rs_ptr() const noexcept { return rs_; }

  /// Throws ValidationError if lam is not dominant.
  std::shared_ptr<const DominantCharacter> dominant_character(const Weight& lam) const;
  /// dim W^lam(gam), for arbitrary gam.
  std::int64_t weight_multiplicity(const Weight& lam, const Weight& gam) const;
  /// Every weight of W^lam with its multiplicity (Weyl orbits expanded).
  std::shared_ptr<const WeightedWeights> weights(const Weight& lam) const;

  /// Classical Racah formula: fold gamma + nu over the weights nu of W^lam.
  Decomposition classical_tensor(const Weight& lam, const Weight& gam) const;

 private:
  DominantCharacter compute(const Weight& lam) const;

  RootSystemPtr rs_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Weight, std::shared_ptr<const DominantCharacter>, WeightHash> dominant_cache_;
  mutable std::unordered_map<Weight, std::shared_ptr<const WeightedWeights>, WeightHash> weights_cache_;
};

}  // namespace qalcove
