#include "qalcove/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "qalcove/errors.hpp"

namespace qalcove {

namespace {

void check_letters(const RootSystem& rs, const WeylWord& word) {
  for (int a : word)
    if (a < 1 || static_cast<std::size_t>(a) > rs.rank())
      throw ValidationError("Weyl word letter " + std::to_string(a) + " outside 1.." + std::to_string(rs.rank()));
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void enumerate_alcove(const AlcoveContext& ctx, std::vector<Weight>& out) {
  const RootSystem& rs = ctx.rs();
  const std::size_t n = rs.rank();
  const auto co = rs.coroot_coefficients(ctx.theta0_index());
  // <lam + rho, theta0^> = sum co_i (lam_i + 1) < T.
  std::int64_t base = 0;
  for (auto c : co) base += c;
  const std::int64_t budget = ctx.upper_bound() - 1 - base;  // sum co_i lam_i <= budget
  if (budget < 0) return;
  Weight cur(n);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = 0; x * co[i] <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x * co[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, budget);
}

}  // namespace

Weight apply_word(const RootSystem& rs, const WeylWord& word, Weight v) {
  check_letters(rs, word);
  for (auto it = word.rbegin(); it != word.rend(); ++it) rs.reflect_in_place(v, static_cast<std::size_t>(*it - 1));
  return v;
}

ChamberFold fold_to_chamber(const RootSystem& rs, Weight v) {
  ChamberFold out;
  const std::size_t n = rs.rank();
  while (true) {
    std::size_t i = 0;
    while (i < n && v[i] >= 0) ++i;
    if (i == n) break;
    rs.reflect_in_place(v, i);
    out.sign = -out.sign;
    ++out.reflections;
  }
  out.regular = std::none_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  out.image = std::move(v);
  return out;
}

WeylWord word_to_dominant(const RootSystem& rs, Weight v, const std::vector<bool>& allowed) {
  const std::size_t n = rs.rank();
  WeylWord applied;
  while (true) {
    std::size_t i = 0;
    while (i < n && (v[i] >= 0 || (!allowed.empty() && !allowed[i]))) ++i;
    if (i == n) break;
    rs.reflect_in_place(v, i);
    applied.push_back(static_cast<int>(i + 1));
  }
  // applied[0] acted first, so it is the rightmost letter.
  return WeylWord(applied.rbegin(), applied.rend());
}

void AlcoveContext::validate(const RootSystem& r, std::int64_t l) {
  if (l < 1) throw ValidationError("root-of-unity order must be a positive integer");
  const std::int64_t D = r.D();
  const std::int64_t lp = l % 2 ? l : l / 2;
  if (lp % D == 0) {
    if (lp < D * r.hv()) {
      throw InvalidContext(r.type().to_string() + " at l=" + std::to_string(l) + " violates the validity bound",
                           "l' >= D*hv (" + std::to_string(lp) + " >= " + std::to_string(D * r.hv()) + ")");
    }
  } else if (lp <= r.h()) {
    throw InvalidContext(r.type().to_string() + " at l=" + std::to_string(l) + " violates the validity bound",
                         "l' > h (" + std::to_string(lp) + " > " + std::to_string(r.h()) + ")");
  }
}

AlcoveContext AlcoveContext::make(RootSystemPtr rs, std::int64_t l) {
  if (!rs) throw ValidationError("null root system");
  validate(*rs, l);
  AlcoveContext ctx;
  ctx.rs_ = std::move(rs);
  const RootSystem& r = *ctx.rs_;
  const std::int64_t D = r.D();
  ctx.l_ = l;
  ctx.l_prime_ = l % 2 ? l : l / 2;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    const std::int64_t li = l / std::gcd(l, r.d()[i]);
    ctx.l_i_.push_back(li);
    ctx.l_i_prime_.push_back(li % 2 ? li : li / 2);
  }
  const std::int64_t lp = ctx.l_prime_;
  ctx.d_divides_ = lp % D == 0;
  ctx.theta0_index_ = ctx.d_divides_ ? r.theta_index() : r.phi_index();
  // <v, theta0> < l' reads <v, theta0^> < l'/D for the long root theta.
  ctx.upper_bound_ = ctx.d_divides_ ? lp / D : lp;

  for (std::size_t i = 0; i < r.rank(); ++i) {
    Weight g = r.simple_roots()[i];
    if (ctx.d_divides_) {
      // l' coroot_i = (l'/d_i) alpha_i, integral since d_i | D | l'.
      g *= lp / r.d()[i];
    } else {
      g *= lp;
    }
    ctx.m_generators_.push_back(std::move(g));
  }

  enumerate_alcove(ctx, ctx.alcove_);
  std::sort(ctx.alcove_.begin(), ctx.alcove_.end());
  for (std::size_t k = 0; k < ctx.alcove_.size(); ++k) ctx.alcove_index_.emplace(ctx.alcove_[k], k);
  return ctx;
}

bool AlcoveContext::in_translation_lattice(const Weight& t) const {
  if (t.rank() != rs_->rank()) return false;
  const auto coords = d_divides_ ? rs_->to_coroot_basis(t) : rs_->to_root_basis(t);
  return std::all_of(coords.begin(), coords.end(),
                     [&](const Rational& x) { return x.denominator() == 1 && x.numerator() % l_prime_ == 0; });
}

bool AlcoveContext::in_alcove(const Weight& lam) const {
  if (lam.rank() != rs_->rank() || !lam.is_dominant()) return false;
  return upper_pairing(lam + rs_->rho()) < upper_bound_;
}

std::optional<std::size_t> AlcoveContext::alcove_index(const Weight& lam) const {
  auto it = alcove_index_.find(lam);
  if (it == alcove_index_.end()) return std::nullopt;
  return it->second;
}

Weight dot_action(const AlcoveContext& ctx, const AffineElement& sigma, const Weight& lam) {
  const RootSystem& rs = ctx.rs();
  if (lam.rank() != rs.rank()) throw ValidationError("weight rank mismatch");
  const Weight t = sigma.translation.rank() == 0 ? Weight::zero(rs.rank()) : sigma.translation;
  if (!ctx.in_translation_lattice(t)) {
    throw ValidationError("translation '" + t.to_string() + "' is not in the lattice M");
  }
  Weight v = apply_word(rs, sigma.word, lam + rs.rho());
  return v + t - rs.rho();
}

AffineElement compose(const RootSystem& rs, const AffineElement& sigma, const AffineElement& tau) {
  AffineElement out;
  out.word = sigma.word;
  out.word.insert(out.word.end(), tau.word.begin(), tau.word.end());
  const Weight t2 = tau.translation.rank() == 0 ? Weight::zero(rs.rank()) : tau.translation;
  const Weight t1 = sigma.translation.rank() == 0 ? Weight::zero(rs.rank()) : sigma.translation;
  out.translation = apply_word(rs, sigma.word, t2) + t1;
  return out;
}

Weight upper_wall_reflection(const AlcoveContext& ctx, const Weight& lam) {
  const Weight& rho = ctx.rs().rho();
  Weight v = lam + rho;
  const std::int64_t excess = ctx.upper_pairing(v) - ctx.upper_bound();
  v -= excess * ctx.theta0();
  return v - rho;
}

FoldResult fold(const AlcoveContext& ctx, const Weight& lam) {
  const RootSystem& rs = ctx.rs();
  if (lam.rank() != rs.rank()) throw ValidationError("weight rank mismatch");
  const std::size_t n = rs.rank();
  const std::int64_t T = ctx.upper_bound();
  Weight v = lam + rs.rho();
  int sign = 1;
  std::size_t steps = 0;
  while (true) {
    if (steps > kFoldStepCap) throw SelfCheckFailure("fold exceeded the step cap for " + lam.to_string());
    std::size_t i = 0;
    while (i < n && v[i] >= 0) ++i;
    if (i < n) {
      rs.reflect_in_place(v, i);
      sign = -sign;
      ++steps;
      continue;
    }
    const std::int64_t p = ctx.upper_pairing(v);
    if (p > T) {
      v -= (p - T) * ctx.theta0();
      sign = -sign;
      ++steps;
      continue;
    }
    break;
  }
  const bool wall = ctx.upper_pairing(v) == T || std::any_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  return FoldResult{v - rs.rho(), wall ? 0 : sign, steps};
}

bool linked(const AlcoveContext& ctx, const Weight& lam, const Weight& gam) {
  const FoldResult a = fold(ctx, lam);
  const FoldResult b = fold(ctx, gam);
  if ((a.sign == 0) != (b.sign == 0)) return false;
  return a.rep == b.rep;
}

std::vector<std::size_t> half_lattice_indices(const LieType& t, std::int64_t l, bool d_divides) {
  const auto n = static_cast<std::size_t>(t.rank());
  const bool odd = l % 2 != 0;
  switch (t.series()) {
    case 'A':
      if (odd && n % 2 == 1) return {(n + 1) / 2};
      return {};
    case 'B':
      if (odd && n % 2 == 0) return {n};
      if (!odd && !d_divides && n % 2 == 1) return {n};
      return {};
    case 'C':
      if (odd || !d_divides) return {1};
      return {};
    case 'D':
      if (!odd) return {};
      if (n % 2 == 1) return {1};
      return {1, n - 1, n};
    case 'E':
      if (odd && n == 7) return {7};
      return {};
    default:
      return {};
  }
}

namespace {

struct HalfLatticeQuotient {
  std::vector<std::int64_t> orders;  // cyclic factor orders over M in the coroot basis
  std::set<std::vector<std::int64_t>> nontrivial;
};

HalfLatticeQuotient half_lattice_quotient(const AlcoveContext& ctx) {
  const RootSystem& rs = ctx.rs();
  const std::size_t n = rs.rank();
  const std::int64_t l = ctx.l(), lp = ctx.l_prime(), D = rs.D();

  // (l/2) coroot lattice is diagonal over M in the coroot basis, with cyclic
  // factors of order m_i = 2 l' e_i / l (e_i = 1 for M = l' coroot lattice,
  // e_i = d_i for M = l' root lattice).
  HalfLatticeQuotient q;
  q.orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t e = ctx.d_divides() ? 1 : rs.d()[i];
    q.orders[i] = 2 * lp * e / l;
  }

  // (l/2) sum c_i coroot_i, scaled by 2D so it is integral.
  auto scaled_vector = [&](const std::vector<std::int64_t>& c) {
    Weight v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!c[i]) continue;
      const std::int64_t f = c[i] * l * (D / rs.d()[i]);
      for (std::size_t j = 0; j < n; ++j) v[j] += f * rs.cartan()(i, j);
    }
    return v;
  };

  std::vector<std::int64_t> c(n, 0);
  while (true) {
    const Weight v = scaled_vector(c);
    const bool integral = std::all_of(v.begin(), v.end(), [&](auto x) { return x % (2 * D) == 0; });
    if (integral && std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; })) q.nontrivial.insert(c);
    std::size_t k = 0;
    while (k < n && ++c[k] == q.orders[k]) c[k++] = 0;
    if (k == n) break;
  }
  return q;
}

// Coset of l' lambda_i, or nullopt when it is not in (l/2) times the coroot lattice.
std::optional<std::vector<std::int64_t>> fundamental_coset(const AlcoveContext& ctx, const HalfLatticeQuotient& q,
                                                           std::size_t i) {
  const RootSystem& rs = ctx.rs();
  const std::size_t n = rs.rank();
  const auto x = rs.to_coroot_basis(Weight::unit(n, i - 1));
  std::vector<std::int64_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational cj = x[j] * Rational(2 * ctx.l_prime(), ctx.l());
    if (cj.denominator() != 1) return std::nullopt;
    out[j] = floor_mod(cj.numerator(), q.orders[j]);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> half_lattice_generators(const AlcoveContext& ctx) {
  const std::size_t n = ctx.rs().rank();
  const HalfLatticeQuotient q = half_lattice_quotient(ctx);
  std::map<std::vector<std::int64_t>, std::size_t> chosen;
  for (std::size_t i = 1; i <= n && chosen.size() < q.nontrivial.size(); ++i) {
    const auto coset = fundamental_coset(ctx, q, i);
    if (!coset || !q.nontrivial.contains(*coset) || chosen.contains(*coset)) continue;
    if (simple_current_isometry(ctx, i)) chosen.emplace(*coset, i);
  }
  if (chosen.size() != q.nontrivial.size()) {
    throw SelfCheckFailure("half-lattice quotient for " + ctx.rs().type().to_string() + " at l=" +
                           std::to_string(ctx.l()) + " has " + std::to_string(q.nontrivial.size()) +
                           " nontrivial cosets, only " + std::to_string(chosen.size()) +
                           " are represented by alcove isometries");
  }
  std::vector<std::size_t> out;
  for (const auto& [coset, i] : chosen) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weight_translations_in_half_dual_lattice(const AlcoveContext& ctx) {
  std::vector<Weight> out;
  for (std::size_t i : half_lattice_generators(ctx)) out.push_back(ctx.l_prime() * Weight::unit(ctx.rs().rank(), i - 1));
  return out;
}

bool half_lattice_table_agrees(const AlcoveContext& ctx) {
  const HalfLatticeQuotient q = half_lattice_quotient(ctx);
  std::set<std::vector<std::int64_t>> tabulated;
  for (std::size_t i : half_lattice_indices(ctx.rs().type(), ctx.l(), ctx.d_divides())) {
    const auto coset = fundamental_coset(ctx, q, i);
    if (!coset || !q.nontrivial.contains(*coset) || !tabulated.insert(*coset).second) return false;
  }
  return tabulated == q.nontrivial;
}

bool check_weyl_dagger_restriction(const AlcoveContext& ctx, int sample_radius) {
  const RootSystem& rs = ctx.rs();
  const std::size_t n = rs.rank();
  const std::int64_t l = ctx.l(), lp = ctx.l_prime();
  std::vector<std::int64_t> k(n, -sample_radius);
  while (true) {
    // (l/2) sum k_i coroot_i = sum (l k_i / (2 d_i)) alpha_i.
    bool in_root_lattice = true, in_m = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational root_coeff(l * k[i], 2 * rs.d()[i]);
      const Rational coroot_coeff(l * k[i], 2);
      if (root_coeff.denominator() != 1) in_root_lattice = false;
      const Rational mc = (ctx.d_divides() ? coroot_coeff : root_coeff) / Rational(lp);
      if (mc.denominator() != 1) in_m = false;
    }
    if (in_root_lattice && !in_m) return false;
    std::size_t j = 0;
    while (j < n && ++k[j] > sample_radius) k[j++] = -sample_radius;
    if (j == n) break;
  }
  return true;
}

Weight AlcoveIsometry::apply(const AlcoveContext& ctx, const Weight& lam) const {
  const RootSystem& rs = ctx.rs();
  const WeylWord inverse(sigma.rbegin(), sigma.rend());
  return apply_word(rs, inverse, lam + rs.rho()) - rs.rho() + translation;
}

std::optional<AlcoveIsometry> simple_current_isometry(const AlcoveContext& ctx, std::size_t i) {
  const RootSystem& rs = ctx.rs();
  const std::size_t n = rs.rank();
  if (i < 1 || i > n) throw ValidationError("fundamental weight index out of range");

  // sigma_i = w_0 w_0^J with J the simple roots other than alpha_i.
  const Weight minus_rho = -rs.rho();
  WeylWord w0 = word_to_dominant(rs, minus_rho);
  std::vector<bool> allowed(n, true);
  allowed[i - 1] = false;
  WeylWord w0j = word_to_dominant(rs, minus_rho, allowed);
  WeylWord product = w0;
  product.insert(product.end(), w0j.begin(), w0j.end());
  // The concatenation is not reduced; folding sigma(rho) back gives a reduced word for sigma^{-1}.
  const WeylWord inverse = word_to_dominant(rs, apply_word(rs, product, rs.rho()));
  WeylWord sigma(inverse.rbegin(), inverse.rend());
  if (sigma.size() > rs.num_positive_roots()) return std::nullopt;

  if (apply_word(rs, sigma, rs.simple_roots()[i - 1]) != -ctx.theta0()) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i - 1) continue;
    const Weight img = apply_word(rs, sigma, rs.simple_roots()[j]);
    if (std::find(rs.simple_roots().begin(), rs.simple_roots().end(), img) == rs.simple_roots().end())
      return std::nullopt;
  }

  AlcoveIsometry iso{i, std::move(sigma), ctx.l_prime() * Weight::unit(n, i - 1)};
  std::set<Weight> image;
  for (const Weight& lam : ctx.alcove()) {
    Weight x = iso.apply(ctx, lam);
    if (!ctx.in_alcove(x)) return std::nullopt;
    image.insert(std::move(x));
  }
  if (image.size() != ctx.alcove().size()) return std::nullopt;
  return iso;
}

std::vector<AlcoveIsometry> half_lattice_isometries(const AlcoveContext& ctx) {
  std::vector<AlcoveIsometry> out;
  for (std::size_t i : half_lattice_generators(ctx)) {
    auto iso = simple_current_isometry(ctx, i);
    if (!iso) {
      throw SelfCheckFailure("no Weyl element sigma_" + std::to_string(i) + " of the required form for " +
                             ctx.rs().type().to_string());
    }
    out.push_back(std::move(*iso));
  }
  return out;
}

}  // namespace qalcove
