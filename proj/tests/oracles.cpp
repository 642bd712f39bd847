#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                   std::size_t n) {
  std::vector<std::int64_t> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

bool in_closed_alcove(const AlcoveContext& ctx, const Weight& v) {
  return v.is_dominant() && ctx.upper_pairing(v) <= ctx.upper_bound();
}

std::vector<Weight> translations(const AlcoveContext& ctx, int radius) {
  const std::size_t n = ctx.rs().rank();
  std::vector<Weight> out;
  for (const auto& k : box(n, radius)) {
    Weight t(n);
    for (std::size_t i = 0; i < n; ++i) t += k[i] * ctx.m_generators()[i];
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<Weight> box(std::size_t rank, std::int64_t r) {
  std::vector<Weight> out;
  Weight cur(rank);
  for (std::size_t i = 0; i < rank; ++i) cur[i] = -r;
  while (true) {
    out.push_back(cur);
    std::size_t j = 0;
    while (j < rank && ++cur[j] > r) cur[j++] = -r;
    if (j == rank) break;
  }
  return out;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    // s_i(v) = v - v_i alpha_i, so column i of (I - s_i) is alpha_i.
    std::vector<std::int64_t> m(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) m[r * n + r] = 1;
    for (std::size_t r = 0; r < n; ++r) m[r * n + i] -= rs.cartan()(i, r);
    gens.push_back(std::move(m));
  }
  std::vector<std::int64_t> id(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) id[r * n + r] = 1;
  std::map<std::vector<std::int64_t>, int> seen{{id, 1}};
  std::vector<WeylElement> frontier{{id, 1}}, all{{id, 1}};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        auto m = multiply(g, w.m, n);
        if (seen.emplace(m, -w.sign).second) {
          next.push_back({m, -w.sign});
          all.push_back({m, -w.sign});
        }
      }
    frontier = std::move(next);
  }
  return all;
}

Weight act(const WeylElement& w, const Weight& v) {
  const std::size_t n = v.rank();
  Weight out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r] += w.m[r * n + c] * v[c];
  return out;
}

Kostant::Kostant(const RootSystem& rs) : rs_(rs), weyl_(weyl_group(rs)) {}

std::int64_t Kostant::partitions(const std::vector<std::int64_t>& x, std::size_t k) {
  if (std::any_of(x.begin(), x.end(), [](auto c) { return c < 0; })) return 0;
  if (k == rs_.num_positive_roots()) return std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; }) ? 1 : 0;
  const auto key = std::make_pair(x, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const auto beta = rs_.root_coefficients(k);
  std::int64_t total = 0;
  auto y = x;
  while (std::all_of(y.begin(), y.end(), [](auto c) { return c >= 0; })) {
    total += partitions(y, k + 1);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= beta[i];
  }
  memo_.emplace(key, total);
  return total;
}

std::int64_t Kostant::multiplicity(const Weight& lam, const Weight& mu) {
  std::int64_t total = 0;
  for (const auto& w : weyl_) {
    const Weight diff = act(w, lam + rs_.rho()) - (mu + rs_.rho());
    const auto rc = rs_.to_root_basis(diff);
    std::vector<std::int64_t> x;
    bool integral = true;
    for (const auto& c : rc) {
      if (c.denominator() != 1) integral = false;
      x.push_back(c.numerator());
    }
    if (integral) total += w.sign * partitions(x, 0);
  }
  return total;
}

std::map<Weight, std::int64_t> Kostant::character(const Weight& lam) {
  // Weights are lam - sum c_i alpha_i with c bounded by the root coordinates of lam - w0(lam).
  Weight lowest = lam;
  for (const auto& w : weyl_) lowest = std::min(lowest, act(w, lam), [&](const Weight& a, const Weight& b) {
    const auto ra = rs_.to_root_basis(a), rb = rs_.to_root_basis(b);
    return std::accumulate(ra.begin(), ra.end(), qalcove::Rational(0)) <
           std::accumulate(rb.begin(), rb.end(), qalcove::Rational(0));
  });
  const auto span = rs_.to_root_basis(lam - lowest);
  const std::size_t n = rs_.rank();
  std::map<Weight, std::int64_t> out;
  std::vector<std::int64_t> c(n, 0);
  while (true) {
    Weight mu = lam;
    for (std::size_t i = 0; i < n; ++i) mu -= c[i] * rs_.simple_roots()[i];
    if (const auto m = multiplicity(lam, mu); m != 0) out[mu] = m;
    std::size_t j = 0;
    while (j < n && ++c[j] > span[j].numerator()) c[j++] = 0;
    if (j == n) break;
  }
  return out;
}

double weyl_character_numeric(const RootSystem& rs, const std::vector<WeylElement>& weyl, const Weight& lam,
                              const std::vector<double>& x) {
  auto pair = [&](const Weight& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.rank(); ++i) s += static_cast<double>(v[i]) * x[i];
    return s;
  };
  double num = 0, den = 0;
  for (const auto& w : weyl) {
    num += w.sign * std::exp(pair(act(w, lam + rs.rho())));
    den += w.sign * std::exp(pair(act(w, rs.rho())));
  }
  return num / den;
}

std::map<Weight, std::int64_t> tensor_by_characters(const RootSystem& rs, Kostant& k, const Weight& lam,
                                                    const Weight& gam) {
  std::map<Weight, std::int64_t> product;
  for (const auto& [a, ma] : k.character(lam))
    for (const auto& [b, mb] : k.character(gam)) product[a + b] += ma * mb;
  auto height = [&](const Weight& w) {
    const auto r = rs.to_root_basis(w);
    return std::accumulate(r.begin(), r.end(), qalcove::Rational(0));
  };
  std::map<Weight, std::int64_t> out;
  while (true) {
    std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
    if (product.empty()) break;
    auto top = product.begin();
    for (auto it = product.begin(); it != product.end(); ++it)
      if (height(it->first) > height(top->first)) top = it;
    const Weight mu = top->first;
    const std::int64_t c = top->second;
    if (!mu.is_dominant() || c < 0) throw std::logic_error("character product has a non-dominant top weight");
    out[mu] = c;
    for (const auto& [nu, m] : k.character(mu)) product[nu] -= c * m;
  }
  return out;
}

BruteFold brute_fold(const AlcoveContext& ctx, const std::vector<WeylElement>& weyl, const Weight& lam,
                     int radius) {
  const RootSystem& rs = ctx.rs();
  const Weight v = lam + rs.rho();
  const auto ts = translations(ctx, radius);
  std::set<Weight> points;
  std::vector<int> signs;
  for (const auto& w : weyl) {
    const Weight y = act(w, v);
    for (const auto& t : ts) {
      const Weight z = y + t;
      if (!in_closed_alcove(ctx, z)) continue;
      points.insert(z);
      signs.push_back(w.sign);
    }
  }
  if (points.size() != 1) throw std::logic_error("brute fold found " + std::to_string(points.size()) + " points");
  const Weight z = *points.begin();
  const bool wall = ctx.upper_pairing(z) == ctx.upper_bound() ||
                    std::any_of(z.begin(), z.end(), [](auto c) { return c == 0; });
  if (!wall && signs.size() != 1) throw std::logic_error("interior point reached by two elements");
  return {z - rs.rho(), wall ? 0 : signs.front()};
}

std::map<Weight, std::int64_t> brute_fusion(const AlcoveContext& ctx, const std::vector<WeylElement>& weyl,
                                            Kostant& k, const Weight& lam, const Weight& gam, int radius) {
  const RootSystem& rs = ctx.rs();
  const auto ch = k.character(lam);
  const auto ts = translations(ctx, radius);
  std::map<Weight, std::int64_t> out;
  for (const auto& mu : ctx.alcove()) {
    std::int64_t total = 0;
    for (const auto& w : weyl) {
      const Weight y = act(w, mu + rs.rho()) - rs.rho() - gam;
      for (const auto& t : ts)
        if (auto it = ch.find(y + t); it != ch.end()) total += w.sign * it->second;
    }
    if (total != 0) out[mu] = total;
  }
  return out;
}

std::int64_t su2_fusion(int k, int a, int b, int c) {
  if ((a + b + c) % 2) return 0;
  return std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) ? 1 : 0;
}

}  // namespace oracle
