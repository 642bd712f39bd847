#include "qalcove/modular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "parallel.hpp"
#include "qalcove/errors.hpp"

namespace qalcove {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void add_divisors(std::int64_t m, int delta, std::map<std::int64_t, std::int64_t>& expo) {
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    expo[d] += delta;
    if (d * d != m) expo[m / d] += delta;
  }
}

CycNum power(CycNum base, std::int64_t e) {
  CycNum acc = base.ring()->one();
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::vector<std::int64_t> gram_times(const RootSystem& rs, const Weight& v) {
  const auto& g = rs.gram_L();
  std::vector<std::int64_t> out(rs.rank(), 0);
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) out[i] += g(i, j) * v[j];
  return out;
}

using Permutation = std::vector<std::size_t>;

Permutation alcove_permutation(const AlcoveContext& ctx, const AlcoveIsometry& iota) {
  const auto& alc = ctx.alcove();
  Permutation p(alc.size());
  for (std::size_t k = 0; k < alc.size(); ++k) {
    const auto idx = ctx.alcove_index(iota.apply(ctx, alc[k]));
    if (!idx) throw SelfCheckFailure("iota_" + std::to_string(iota.index) + " leaves the alcove");
    p[k] = *idx;
  }
  return p;
}

std::set<Permutation> generated_group(std::size_t n, const std::vector<Permutation>& gens) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        Permutation gh(n);
        for (std::size_t k = 0; k < n; ++k) gh[k] = h[g[k]];
        if (group.insert(gh).second) next.push_back(std::move(gh));
      }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Modular:
      return "MODULAR";
    case Verdict::QuotientExists:
      return "QUOTIENT_EXISTS";
    case Verdict::NoQuotient:
      return "NO_QUOTIENT";
  }
  return "?";
}

Modular::Modular(AlcoveContext ctx, std::shared_ptr<const Characters> chars)
    : ctx_(std::move(ctx)), chars_(std::move(chars)), ring_(CycRing::make(ctx_.l() * ctx_.rs().L())) {
  if (!chars_) chars_ = std::make_shared<const Characters>(ctx_.rs_ptr());
}

CycNum Modular::phi_at_q(std::int64_t d) const {
  const auto& phi = cyclotomic_polynomial(d);
  const std::int64_t n = ring_->n(), L = ctx_.rs().L();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < phi.size(); ++j) counts[mod(L * static_cast<std::int64_t>(j), n)] += phi[j];
  return ring_->from_exponent_counts(counts);
}

CycNum Modular::qdim(const Weight& lam) const {
  const RootSystem& rs = ctx_.rs();
  if (lam.rank() != rs.rank()) throw ValidationError("qdim: weight rank mismatch");
  const Weight v = lam + rs.rho();
  // Each factor (q^a - q^-a)/(q^b - q^-b) is q^{b-a} (q^{2a} - 1)/(q^{2b} - 1),
  // and x^m - 1 is the product of Phi_d(x) over d | m.
  std::map<std::int64_t, std::int64_t> expo;
  std::int64_t sign = 1, shift = 0;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    std::int64_t a = rs.root_pairing(v, k);
    const std::int64_t b = rs.root_pairing(rs.rho(), k);
    if (a == 0) return ring_->zero();
    if (a < 0) {
      sign = -sign;
      a = -a;
    }
    shift += b - a;
    add_divisors(2 * a, +1, expo);
    add_divisors(2 * b, -1, expo);
  }
  for (const auto& [d, e] : expo)
    if (e < 0) throw SelfCheckFailure("quantum dimension of " + lam.to_string() + " is not a Laurent polynomial");
  // q has order exactly l, so Phi_d(q) = 0 iff d = l.
  if (auto it = expo.find(ctx_.l()); it != expo.end() && it->second > 0) return ring_->zero();

  CycNum out = ring_->q_power(rs.L(), shift);
  for (const auto& [d, e] : expo)
    if (e > 0) out *= power(phi_at_q(d), e);
  return sign < 0 ? -out : out;
}

bool Modular::qdim_zero_by_stabilizer(const Weight& lam) const {
  const RootSystem& rs = ctx_.rs();
  const Weight v = lam + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (mod(2 * rs.root_pairing(v, k), ctx_.l()) == 0) return true;
  return false;
}

bool Modular::qdim_sign_law_check(const Weight& lam, const AffineGenerator& sigma) const {
  const RootSystem& rs = ctx_.rs();
  const CycNum base = qdim(lam);
  return std::visit(
      [&](const auto& g) -> bool {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, SimpleReflection>) {
          if (g.index >= rs.rank()) throw ValidationError("simple reflection index out of range");
          const Weight image = rs.reflect(lam + rs.rho(), g.index) - rs.rho();
          return qdim(image) == -base;
        } else if constexpr (std::is_same_v<G, UpperWallReflection>) {
          return qdim(upper_wall_reflection(ctx_, lam)) == -base;
        } else {
          if (!ctx_.in_translation_lattice(g.t)) throw ValidationError("translation is not in M");
          return qdim(lam + g.t) == base;
        }
      },
      sigma);
}

SMatrix Modular::s_matrix(SMatrixMethod method) const {
  const RootSystem& rs = ctx_.rs();
  const auto& alc = ctx_.alcove();
  const std::size_t N = alc.size();
  const std::int64_t n = ring_->n();
  if (method == SMatrixMethod::Auto) {
    method = rs.weyl_group_order() > kAlternatingSumWeylLimit ? SMatrixMethod::Character : SMatrixMethod::AlternatingSum;
  }

  std::vector<std::vector<std::int64_t>> g(N);
  for (std::size_t i = 0; i < N; ++i) g[i] = gram_times(rs, alc[i] + rs.rho());

  std::vector<CycNum> entries(N * N);
  if (method == SMatrixMethod::AlternatingSum) {
    detail::parallel_for(N, [&](std::size_t j) {
      std::vector<std::vector<std::int64_t>> counts(N, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
      for_each_orbit_point(rs, alc[j] + rs.rho(), [&](const Weight& w, std::size_t depth) {
        const std::int64_t sgn = depth % 2 ? -1 : 1;
        for (std::size_t i = 0; i < N; ++i) counts[i][mod(2 * dot(g[i], w.coords()), n)] += sgn;
      });
      for (std::size_t i = 0; i < N; ++i) entries[i * N + j] = ring_->from_exponent_counts(counts[i]);
    });
  } else {
    std::vector<CycNum> denominators(N);
    detail::parallel_for(N, [&](std::size_t i) {
      const Weight v = alc[i] + rs.rho();
      CycNum prod = ring_->one();
      for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const std::int64_t a = rs.root_pairing(v, k);
        prod *= ring_->q_power(rs.L(), a) - ring_->q_power(rs.L(), -a);
      }
      denominators[i] = std::move(prod);
    });
    detail::parallel_for(N, [&](std::size_t j) {
      std::vector<std::vector<std::int64_t>> counts(N, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
      for (const auto& [mu, m] : *chars_->weights(alc[j]))
        for (std::size_t i = 0; i < N; ++i) counts[i][mod(2 * dot(g[i], mu.coords()), n)] += m;
      for (std::size_t i = 0; i < N; ++i) entries[i * N + j] = denominators[i] * ring_->from_exponent_counts(counts[i]);
    });
  }

  SMatrix s(alc, std::move(entries));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (!(s.at(i, j) == s.at(j, i))) throw SelfCheckFailure("S-matrix is not symmetric");
  if (N == 0 || !alc[0].is_zero()) throw SelfCheckFailure("alcove does not start with the zero weight");
  if (s.at(0, 0).is_zero()) throw SelfCheckFailure("S_{0,0} vanishes");
  for (std::size_t i = 0; i < N; ++i)
    if (!(s.at(i, 0) == qdim(alc[i]) * s.at(0, 0)))
      throw SelfCheckFailure("S_{lam,0} != qdim(lam) S_{0,0} at " + alc[i].to_string());
  return s;
}

CycNum Modular::twist(const Weight& lam) const {
  const RootSystem& rs = ctx_.rs();
  return ring_->s_power(rs.inner_product_L(lam, lam + 2 * rs.rho()));
}

std::vector<TransparentObject> Modular::transparent_objects() const {
  const std::size_t rank = ctx_.rs().rank();
  const CycNum one = ring_->one();
  std::vector<TransparentObject> out;
  out.push_back({Weight(rank), std::nullopt, one, 1, twist(Weight(rank)), true});
  for (const auto& iota : half_lattice_isometries(ctx_)) {
    const Weight w = iota.apply(ctx_, Weight(rank));
    if (!ctx_.in_alcove(w)) throw SelfCheckFailure("iota_" + std::to_string(iota.index) + "(0) is not in the alcove");
    TransparentObject t{w, iota.index, qdim(w), 0, twist(w), false};
    if (t.qdim == one) {
      t.qdim_sign = 1;
    } else if (t.qdim == -one) {
      t.qdim_sign = -1;
    } else {
      throw SelfCheckFailure("qdim of transparent object " + w.to_string() + " is not +-1");
    }
    t.twist_squared_is_one = t.twist * t.twist == one;
    out.push_back(std::move(t));
  }
  return out;
}

ModularityReport Modular::classify(SMatrixMethod method) const { return classify(s_matrix(method)); }

ModularityReport Modular::classify(const SMatrix& s) const {
  const auto& alc = ctx_.alcove();
  const std::size_t N = alc.size();
  if (s.alcove() != alc) throw ValidationError("S-matrix belongs to a different context");

  ModularityReport report;
  report.transparent_objects = transparent_objects();

  std::vector<Permutation> gens;
  for (const auto& iota : half_lattice_isometries(ctx_)) gens.push_back(alcove_permutation(ctx_, iota));
  const auto group = generated_group(N, gens);
  report.isometry_group_order = group.size();

  // Orbits of the isometry group versus classes of proportional S-rows.
  std::vector<std::size_t> orbit_of(N, N);
  std::size_t orbits = 0;
  for (std::size_t k = 0; k < N; ++k) {
    if (orbit_of[k] != N) continue;
    for (const auto& g : group) orbit_of[g[k]] = orbits;
    ++orbits;
  }
  const auto classes = proportional_row_classes(s);
  bool agree = classes.size() == orbits;
  for (const auto& cls : classes)
    for (std::size_t k : cls) agree = agree && orbit_of[k] == orbit_of[cls.front()];
  if (!agree) throw SelfCheckFailure("proportional S-rows do not match the alcove isometry orbits");
  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;
    auto& out = report.proportional_classes.emplace_back();
    for (std::size_t k : cls) out.push_back(alc[k]);
  }

  const auto& tos = report.transparent_objects;
  if (tos.size() == 1) {
    report.verdict = Verdict::Modular;
    report.notes = "only the unit is transparent";
  } else if (std::any_of(tos.begin(), tos.end(), [](const auto& t) { return t.qdim_sign < 0; })) {
    report.verdict = Verdict::NoQuotient;
    report.notes = "a transparent object has quantum dimension -1";
  } else {
    report.verdict = Verdict::QuotientExists;
    report.notes = "transparent objects have quantum dimension 1; modular versus spin modular is left to their twists";
  }
  return report;
}

ModularData Modular::modular_data(SMatrixMethod method) const {
  ModularData out;
  out.alcove = ctx_.alcove();
  for (const auto& w : out.alcove) {
    out.qdims.push_back(qdim(w));
    out.twists.push_back(twist(w));
  }
  out.smatrix = s_matrix(method);
  return out;
}

double verlinde_residual(const FusionTable& table, const SMatrix& s, std::int64_t residue) {
  const std::size_t N = s.size();
  if (table.alcove() != s.alcove()) throw ValidationError("fusion table and S-matrix index different alcoves");
  std::vector<std::complex<double>> S(N * N);
  double scale = 0;
  for (std::size_t k = 0; k < N * N; ++k) {
    S[k] = s.at(k / N, k % N).embed(residue);
    scale = std::max(scale, std::abs(S[k]));
  }
  if (scale == 0) throw SelfCheckFailure("S-matrix embeds to zero");
  for (auto& x : S) x /= scale;

  double worst = 0;
  for (std::size_t g = 0; g < N; ++g) {
    double norm = 0;
    for (std::size_t b = 0; b < N; ++b) norm += std::norm(S[b * N + g]);
    norm = std::sqrt(norm);
    for (std::size_t a = 0; a < N; ++a) {
      const std::complex<double> eig = S[a * N + g] / S[g];
      double err = 0;
      for (std::size_t b = 0; b < N; ++b) {
        std::complex<double> acc = 0;
        for (std::size_t c = 0; c < N; ++c) acc += static_cast<double>(table.at(a, b, c)) * S[c * N + g];
        err += std::norm(acc - eig * S[b * N + g]);
      }
      worst = std::max(worst, std::sqrt(err) / norm);
    }
  }
  return worst;
}

std::vector<std::vector<std::size_t>> proportional_row_classes(const SMatrix& s) {
  const std::size_t N = s.size();
  std::vector<std::complex<double>> S(N * N);
  for (std::size_t k = 0; k < N * N; ++k) S[k] = s.at(k / N, k % N).embed(1);

  // Exact pivot test; a clear numeric mismatch skips the ring arithmetic.
  auto proportional = [&](std::size_t a, std::size_t b) {
    std::size_t p = 0;
    while (p < N && s.at(a, p).is_zero()) ++p;
    if (p == N) return false;
    double ma = 0, mb = 0;
    for (std::size_t j = 0; j < N; ++j) {
      ma = std::max(ma, std::abs(S[a * N + j]));
      mb = std::max(mb, std::abs(S[b * N + j]));
    }
    for (std::size_t j = 0; j < N; ++j)
      if (std::abs(S[b * N + p] * S[a * N + j] - S[a * N + p] * S[b * N + j]) > 1e-4 * ma * mb) return false;
    for (std::size_t j = 0; j < N; ++j)
      if (!(s.at(b, p) * s.at(a, j) == s.at(a, p) * s.at(b, j))) return false;
    return true;
  };

  std::vector<bool> used(N, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < N; ++a) {
    if (used[a]) continue;
    auto& cls = classes.emplace_back(std::vector<std::size_t>{a});
    used[a] = true;
    for (std::size_t b = a + 1; b < N; ++b)
      if (!used[b] && proportional(a, b)) {
        cls.push_back(b);
        used[b] = true;
      }
  }
  return classes;
}

}  // namespace qalcove
