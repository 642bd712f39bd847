#pragma once

// Independent reference implementations used only by the tests. They trade
// speed for directness: explicit group elements, explicit sums.

#include <cstdint>
#include <map>
#include <vector>

#include "qalcove/characters.hpp"
#include "qalcove/fusion.hpp"
#include "qalcove/root_system.hpp"
#include "qalcove/weyl.hpp"

namespace oracle {

using qalcove::AlcoveContext;
using qalcove::RootSystem;
using qalcove::Weight;

/// A Weyl group element as an integer matrix on fundamental-weight coordinates.
struct WeylElement {
  std::vector<std::int64_t> m;  // row-major
  int sign = 1;
};

/// The whole Weyl group, by closure of the simple reflection matrices.
std::vector<WeylElement> weyl_group(const RootSystem& rs);
Weight act(const WeylElement& w, const Weight& v);

/// Weight multiplicities by Kostant's partition function.
class Kostant {
 public:
  Kostant(const RootSystem& rs);
  std::int64_t multiplicity(const Weight& lam, const Weight& mu);
  /// Every weight of W^lam with positive multiplicity.
  std::map<Weight, std::int64_t> character(const Weight& lam);

 private:
  std::int64_t partitions(const std::vector<std::int64_t>& x, std::size_t k);

  const RootSystem& rs_;
  std::vector<WeylElement> weyl_;
  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, std::int64_t> memo_;
};

/// Weyl character quotient evaluated at exp(<., x>) for a real point x given in
/// the basis dual to the fundamental weights.
double weyl_character_numeric(const RootSystem& rs, const std::vector<WeylElement>& weyl, const Weight& lam,
                              const std::vector<double>& x);

/// Multiplies two characters as Laurent polynomials and strips highest weights.
std::map<Weight, std::int64_t> tensor_by_characters(const RootSystem& rs, Kostant& k, const Weight& lam,
                                                    const Weight& gam);

struct BruteFold {
  Weight rep;
  int sign = 0;
};

/// Searches w(lam + rho) + t over all w and all t = sum k_i m_i with |k_i| <= radius
/// for the closed-alcove point. Throws if none is found or if two distinct points are.
BruteFold brute_fold(const AlcoveContext& ctx, const std::vector<WeylElement>& weyl, const Weight& lam, int radius);

/// M_{lam,gam}^mu as the explicit alternating sum over W_l elements in a box.
std::map<Weight, std::int64_t> brute_fusion(const AlcoveContext& ctx, const std::vector<WeylElement>& weyl,
                                            Kostant& k, const Weight& lam, const Weight& gam, int radius);

/// su(2) level-k fusion rule on Dynkin labels.
std::int64_t su2_fusion(int k, int a, int b, int c);

/// All weights with coordinates in [-r, r].
std::vector<Weight> box(std::size_t rank, std::int64_t r);

}  // namespace oracle
