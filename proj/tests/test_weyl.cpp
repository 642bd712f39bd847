#include <doctest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "qalcove/errors.hpp"
#include "qalcove/weyl.hpp"

using namespace qalcove;

namespace {

AlcoveContext ctx_of(const char* type, std::int64_t l) { return AlcoveContext::make(RootSystem::build(LieType::parse(type)), l); }

}  // namespace

TEST_CASE("context parameters") {
  const auto a1 = ctx_of("A1", 6);
  CHECK(a1.l_prime() == 3);
  CHECK(a1.d_divides());
  CHECK(a1.theta0() == a1.rs().theta());

  const auto b2 = ctx_of("B2", 9);
  CHECK(b2.l_prime() == 9);
  CHECK_FALSE(b2.d_divides());
  CHECK(b2.theta0() == b2.rs().phi());
  for (std::size_t i = 0; i < 2; ++i) CHECK(b2.m_generators()[i] == 9 * b2.rs().simple_roots()[i]);

  const auto c3 = ctx_of("C3", 16);  // l' = 8, D | l'
  CHECK(c3.d_divides());
  CHECK(c3.l_i(0) == 16);
  CHECK(c3.l_i(2) == 8);
  CHECK(c3.l_i_prime(2) == 4);
  // l' coroot_i: the long simple coroot is alpha_3 / 2.
  CHECK(c3.m_generators()[2] == Weight{0, -8, 8});

  CHECK_THROWS_AS(ctx_of("G2", 5), InvalidContext);
  CHECK_THROWS_AS(ctx_of("G2", 12), InvalidContext);
  CHECK_NOTHROW(ctx_of("G2", 24));
  CHECK_THROWS_AS(ctx_of("A1", 0), ValidationError);
  try {
    ctx_of("G2", 5);
  } catch (const InvalidContext& e) {
    CHECK(e.bound().find("> h") != std::string::npos);
  }
}

TEST_CASE("alcove listings") {
  CHECK(ctx_of("A1", 6).alcove() == std::vector<Weight>{Weight{0}, Weight{1}});
  CHECK(ctx_of("A1", 5).alcove() == std::vector<Weight>{Weight{0}, Weight{1}, Weight{2}, Weight{3}});
  for (int k = 0; k < 8; ++k) CHECK(ctx_of("A1", 2 * k + 4).alcove().size() == static_cast<std::size_t>(k + 1));
  // su(3) level 3 has 10 integrable weights.
  CHECK(ctx_of("A2", 6).alcove().size() == 1);  // level 0
  CHECK(ctx_of("A2", 12).alcove().size() == 10);
  for (const auto& [t, l] : std::vector<std::pair<const char*, int>>{{"A2", 7}, {"B2", 9}, {"G2", 15}, {"C3", 9}}) {
    const auto ctx = ctx_of(t, l);
    CHECK(ctx.alcove().front().is_zero());
    for (const auto& lam : ctx.alcove()) {
      CHECK(lam.is_dominant());
      CHECK(ctx.upper_pairing(lam + ctx.rs().rho()) < ctx.upper_bound());
    }
  }
}

TEST_CASE("dot action") {
  const auto ctx = ctx_of("A1", 6);
  CHECK(dot_action(ctx, {{}, Weight{0}}, Weight{4}) == Weight{4});
  CHECK(dot_action(ctx, {{1}, Weight{0}}, Weight{0}) == Weight{-2});
  CHECK_THROWS_AS(dot_action(ctx, {{2}, Weight{0}}, Weight{0}), ValidationError);
  CHECK_THROWS_AS(dot_action(ctx, {{}, Weight{1}}, Weight{0}), ValidationError);

  const auto a2 = ctx_of("A2", 7);
  const AffineElement s{{1, 2}, a2.m_generators()[0]};
  const AffineElement t{{2}, a2.m_generators()[1]};
  for (const auto& lam : oracle::box(2, 3))
    CHECK(dot_action(a2, compose(a2.rs(), s, t), lam) == dot_action(a2, s, dot_action(a2, t, lam)));
}

TEST_CASE("folding examples") {
  const auto ctx = ctx_of("A1", 6);
  auto f = fold(ctx, Weight{3});
  CHECK(f.rep == Weight{1});
  CHECK(f.sign == -1);
  f = fold(ctx, Weight{1});
  CHECK(f.rep == Weight{1});
  CHECK(f.sign == 1);
  CHECK(f.reflections == 0);
  CHECK(fold(ctx, Weight{2}).sign == 0);
}

TEST_CASE("fold properties") {
  for (const auto& [t, l] : std::vector<std::pair<const char*, int>>{{"A2", 7}, {"B2", 9}, {"B2", 12}, {"G2", 7}, {"G2", 15}}) {
    const std::string type_name = t;
    CAPTURE(type_name);
    CAPTURE(l);
    const auto ctx = ctx_of(t, l);
    const auto& rs = ctx.rs();
    const auto r = 3 * ctx.l_prime();
    for (const auto& lam : oracle::box(2, r)) {
      const auto f = fold(ctx, lam);
      if (f.sign != 0) {
        CHECK(ctx.in_alcove(f.rep));
        CHECK(f.sign == (f.reflections % 2 ? -1 : 1));
        const auto again = fold(ctx, f.rep);
        CHECK(again.rep == f.rep);
        CHECK(again.sign == 1);
      }
      for (std::size_t i = 0; i < 2; ++i) {
        const auto g = fold(ctx, rs.reflect(lam + rs.rho(), i) - rs.rho());
        CHECK(g.rep == f.rep);
        CHECK(g.sign == -f.sign);
        const auto h = fold(ctx, lam + ctx.m_generators()[i]);
        CHECK(h.rep == f.rep);
        CHECK(h.sign == f.sign);
      }
      const auto u = fold(ctx, upper_wall_reflection(ctx, lam));
      CHECK(u.rep == f.rep);
      CHECK(u.sign == -f.sign);
    }
  }
}

TEST_CASE("linkage") {
  const auto ctx = ctx_of("A1", 6);
  CHECK(linked(ctx, Weight{1}, Weight{1}));
  CHECK(linked(ctx, Weight{3}, Weight{1}));
  CHECK_FALSE(linked(ctx, Weight{0}, Weight{1}));
  CHECK(linked(ctx, Weight{2}, Weight{-4}));  // both on walls, same closed-alcove point
  CHECK_FALSE(linked(ctx, Weight{2}, Weight{0}));
}

TEST_CASE("half lattice translations") {
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("A1", 5)) == std::vector<Weight>{Weight{5}});
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("A1", 6)).empty());
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("C3", 9)) == std::vector<Weight>{Weight{9, 0, 0}});
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("D4", 9)).size() == 3);
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("B2", 10)) == std::vector<Weight>{Weight{0, 5}});
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("B4", 18)) == std::vector<Weight>{Weight{0, 0, 0, 9}});
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("B3", 14)).empty());
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("A2", 7)).empty());
  CHECK(weight_translations_in_half_dual_lattice(ctx_of("E7", 19)) == std::vector<Weight>{19 * Weight::unit(7, 6)});
}

TEST_CASE("tabulated half-lattice indices against the computed quotient") {
  for (const auto& [t, l] : std::vector<std::pair<const char*, int>>{
           {"A1", 5}, {"A1", 6}, {"A3", 9}, {"C3", 9}, {"C2", 10}, {"D4", 9}, {"D5", 11}, {"E7", 19}, {"B2", 9}}) {
    const std::string type_name = t;
    CAPTURE(type_name);
    CHECK(half_lattice_table_agrees(ctx_of(t, l)));
  }
  // B_n with l even and D not dividing l': the computed quotient is nontrivial
  // exactly for n even, the table lists n odd.
  CHECK_FALSE(half_lattice_table_agrees(ctx_of("B2", 10)));
  CHECK_FALSE(half_lattice_table_agrees(ctx_of("B3", 14)));
}

TEST_CASE("restriction of the dual affine group") {
  CHECK(check_weyl_dagger_restriction(ctx_of("A1", 6), 3));
  CHECK(check_weyl_dagger_restriction(ctx_of("B2", 9), 3));
  CHECK(check_weyl_dagger_restriction(ctx_of("C2", 12), 3));
  CHECK(check_weyl_dagger_restriction(ctx_of("C2", 10), 3));
  CHECK(check_weyl_dagger_restriction(ctx_of("G2", 15), 3));
}

TEST_CASE("alcove isometries") {
  const auto ctx = ctx_of("A1", 5);
  const auto iota = simple_current_isometry(ctx, 1);
  REQUIRE(iota);
  for (std::int64_t n = 0; n <= 3; ++n) CHECK(iota->apply(ctx, Weight{n}) == Weight{3 - n});

  for (const auto& [t, l] : std::vector<std::pair<const char*, int>>{{"A3", 9}, {"D4", 9}, {"C3", 9}, {"B2", 9}, {"B2", 10}, {"B4", 18}, {"E7", 19}}) {
    const std::string type_name = t;
    CAPTURE(type_name);
    const auto c = ctx_of(t, l);
    const auto isos = half_lattice_isometries(c);
    CHECK_FALSE(isos.empty());
    for (const auto& i : isos) {
      CHECK(i.sigma.size() <= c.rs().num_positive_roots());
      std::set<Weight> image;
      for (const auto& lam : c.alcove()) {
        const auto x = i.apply(c, lam);
        CHECK(c.in_alcove(x));
        CHECK(i.apply(c, x) == lam);  // order 2
        image.insert(x);
      }
      CHECK(image.size() == c.alcove().size());
    }
  }
}

TEST_CASE("simple currents of order three") {
  const auto ctx = ctx_of("A2", 7);
  for (std::size_t i : {1u, 2u}) {
    const auto iota = simple_current_isometry(ctx, i);
    REQUIRE(iota);
    CHECK(iota->apply(ctx, Weight(2)) == 4 * Weight::unit(2, i - 1));
    for (const auto& lam : ctx.alcove()) {
      const auto once = iota->apply(ctx, lam);
      CHECK(ctx.in_alcove(once));
      CHECK(once != lam);
      CHECK(iota->apply(ctx, iota->apply(ctx, once)) == lam);
    }
  }
}
