#include "qalcove/fusion.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "qalcove/errors.hpp"

namespace qalcove {

bool FusionTable::has_unit() const {
  const std::size_t n = size();
  if (n == 0 || !alcove_[0].is_zero()) return false;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (at(0, j, k) != (j == k ? 1 : 0)) return false;
  return true;
}

bool FusionTable::is_commutative() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

bool FusionTable::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](auto x) { return x >= 0; });
}

bool FusionTable::is_associative() const {
  const std::size_t n = size();
  // (a b) c = a (b c) for every a, b, c and every outcome m.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t m = 0; m < n; ++m) {
          std::int64_t left = 0, right = 0;
          for (std::size_t v = 0; v < n; ++v) {
            left += at(a, b, v) * at(v, c, m);
            right += at(b, c, v) * at(a, v, m);
          }
          if (left != right) return false;
        }
  return true;
}

FusionEngine::FusionEngine(AlcoveContext ctx, std::shared_ptr<const Characters> chars)
    : ctx_(std::move(ctx)), chars_(std::move(chars)) {
  if (!chars_) chars_ = std::make_shared<const Characters>(ctx_.rs_ptr());
  if (chars_->rs().type() != ctx_.rs().type()) throw ValidationError("character table for a different root system");
}

FusionCoeffs FusionEngine::coeffs(const Weight& lam, const Weight& gam) const {
  for (const Weight* w : {&lam, &gam}) {
    if (!ctx_.in_alcove(*w)) {
      throw ValidationError("weight '" + w->to_string() + "' is not in the alcove of " + ctx_.rs().type().to_string() +
                            " at l=" + std::to_string(ctx_.l()));
    }
  }
  FusionCoeffs out;
  for (const auto& [nu, m] : *chars_->weights(lam)) {
    const FoldResult f = fold(ctx_, gam + nu);
    if (f.sign == 0) continue;
    out[f.rep] += f.sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) {
      throw SelfCheckFailure("negative fusion coefficient at " + it->first.to_string() + " for " + lam.to_string() +
                             " x " + gam.to_string());
    }
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

IntMatrix FusionEngine::matrix(const Weight& lam) const {
  const auto& alc = ctx_.alcove();
  IntMatrix m(alc.size(), alc.size());
  for (std::size_t g = 0; g < alc.size(); ++g)
    for (const auto& [mu, c] : coeffs(lam, alc[g])) m(g, *ctx_.alcove_index(mu)) = c;
  return m;
}

FusionTable FusionEngine::full_table() const {
  const auto& alc = ctx_.alcove();
  const std::size_t n = alc.size();
  FusionTable table(alc);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<FusionCoeffs> results(pairs.size());

  detail::parallel_for(pairs.size(),
                       [&](std::size_t p) { results[p] = coeffs(alc[pairs[p].first], alc[pairs[p].second]); });

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    for (const auto& [mu, c] : results[p]) {
      const std::size_t k = *ctx_.alcove_index(mu);
      table.at(i, j, k) = c;
      table.at(j, i, k) = c;
    }
  }
  return table;
}

bool FusionEngine::check_symmetry(const AlcoveIsometry& iota) const { return check_symmetry(iota, full_table()); }

bool FusionEngine::check_symmetry(const AlcoveIsometry& iota, const FusionTable& table) const {
  const std::size_t n = table.size();
  std::vector<std::size_t> image(n);
  std::vector<bool> hit(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto idx = ctx_.alcove_index(iota.apply(ctx_, table.alcove()[k]));
    if (!idx || hit[*idx]) return false;
    hit[*idx] = true;
    image[k] = *idx;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table.at(a, b, c) != table.at(a, image[b], image[c])) return false;
  return true;
}

std::optional<bool> FusionEngine::check_isometry_symmetry(std::size_t i) const {
  const auto indices = half_lattice_generators(ctx_);
  if (std::find(indices.begin(), indices.end(), i) == indices.end()) return std::nullopt;
  auto iota = simple_current_isometry(ctx_, i);
  if (!iota) {
    throw SelfCheckFailure("no Weyl element sigma_" + std::to_string(i) + " of the required form for " +
                           ctx_.rs().type().to_string());
  }
  return check_symmetry(*iota);
}

}  // namespace qalcove
