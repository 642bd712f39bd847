#include "qalcove/characters.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qalcove/errors.hpp"
#include "qalcove/weyl.hpp"

namespace qalcove {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lam, const char* what) {
  if (lam.rank() != rs.rank()) throw ValidationError(std::string(what) + ": weight rank mismatch");
  if (!lam.is_dominant()) throw ValidationError(std::string(what) + ": '" + lam.to_string() + "' is not dominant");
}

std::int64_t height(const RootSystem& rs, const Weight& x) {
  Rational h(0);
  for (const auto& c : rs.to_root_basis(x)) h += c;
  if (h.denominator() != 1) throw SelfCheckFailure("weight difference outside the root lattice");
  return h.numerator();
}

}  // namespace

BigInt weyl_dimension(const RootSystem& rs, const Weight& lam) {
  BigInt num = 1, den = 1;
  const Weight shifted = lam + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    num *= rs.coroot_pairing(shifted, k);
    den *= rs.coroot_pairing(rs.rho(), k);
  }
  if (num % den != 0) throw SelfCheckFailure("Weyl dimension formula is not integral");
  return num / den;
}

DominantCharacter Characters::compute(const Weight& lam) const {
  const RootSystem& rs = *rs_;
  const auto& roots = rs.positive_roots();

  std::set<Weight> seen{lam};
  std::deque<Weight> queue{lam};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : roots) {
      Weight nu = mu - a;
      if (nu.is_dominant() && seen.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  std::vector<std::pair<std::int64_t, Weight>> order;
  order.reserve(seen.size());
  for (const auto& mu : seen) order.emplace_back(height(rs, lam - mu), mu);
  std::sort(order.begin(), order.end());

  DominantCharacter ch{lam, {}};
  const Weight top = lam + rs.rho();
  const std::int64_t top_norm = rs.inner_product_L(top, top);
  auto lookup = [&](const Weight& nu) -> std::int64_t {
    const ChamberFold f = fold_to_chamber(rs, nu);
    auto it = ch.mults.find(f.image);
    return it == ch.mults.end() ? 0 : it->second;
  };

  for (const auto& [ht, mu] : order) {
    if (ht == 0) {
      ch.mults.emplace(mu, 1);
      continue;
    }
    std::int64_t num = 0;
    for (const auto& a : roots) {
      Weight nu = mu + a;
      while (true) {
        const std::int64_t m = lookup(nu);
        if (m == 0) break;
        num += 2 * m * rs.inner_product_L(nu, a);
        nu += a;
      }
    }
    const Weight shifted = mu + rs.rho();
    const std::int64_t den = top_norm - rs.inner_product_L(shifted, shifted);
    if (den <= 0 || num % den != 0) throw SelfCheckFailure("Freudenthal recursion is not integral at " + mu.to_string());
    const std::int64_t m = num / den;
    if (m > 0) ch.mults.emplace(mu, m);
  }
  return ch;
}

std::shared_ptr<const DominantCharacter> Characters::dominant_character(const Weight& lam) const {
  require_dominant(*rs_, lam, "dominant_character");
  {
    std::lock_guard lock(mu_);
    if (auto it = dominant_cache_.find(lam); it != dominant_cache_.end()) return it->second;
  }
  auto ch = std::make_shared<const DominantCharacter>(compute(lam));
  std::lock_guard lock(mu_);
  return dominant_cache_.emplace(lam, std::move(ch)).first->second;
}

std::int64_t Characters::weight_multiplicity(const Weight& lam, const Weight& gam) const {
  require_dominant(*rs_, lam, "weight_multiplicity");
  if (gam.rank() != rs_->rank()) throw ValidationError("weight_multiplicity: weight rank mismatch");
  const auto ch = dominant_character(lam);
  const ChamberFold f = fold_to_chamber(*rs_, gam);
  auto it = ch->mults.find(f.image);
  return it == ch->mults.end() ? 0 : it->second;
}

std::shared_ptr<const WeightedWeights> Characters::weights(const Weight& lam) const {
  require_dominant(*rs_, lam, "weights");
  {
    std::lock_guard lock(mu_);
    if (auto it = weights_cache_.find(lam); it != weights_cache_.end()) return it->second;
  }
  const auto ch = dominant_character(lam);
  auto out = std::make_shared<WeightedWeights>();
  for (const auto& [mu, m] : ch->mults) {
    for_each_orbit_point(*rs_, mu, [&](const Weight& nu, std::size_t) { out->emplace_back(nu, m); });
  }
  std::lock_guard lock(mu_);
  return weights_cache_.emplace(lam, std::move(out)).first->second;
}

Decomposition Characters::classical_tensor(const Weight& lam, const Weight& gam) const {
  require_dominant(*rs_, lam, "classical_tensor");
  require_dominant(*rs_, gam, "classical_tensor");
  const RootSystem& rs = *rs_;
  Decomposition out;
  const Weight base = gam + rs.rho();
  for (const auto& [nu, m] : *weights(lam)) {
    const ChamberFold f = fold_to_chamber(rs, base + nu);
    if (!f.regular) continue;
    out[f.image - rs.rho()] += f.sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw SelfCheckFailure("negative classical tensor coefficient");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace qalcove
