#include <doctest.h>

#include <numeric>

#include "qalcove/errors.hpp"
#include "qalcove/root_system.hpp"

using namespace qalcove;

namespace {

std::vector<LieType> types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(LieType::make('A', n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(LieType::make('B', n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(LieType::make('C', n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(LieType::make('D', n));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(LieType::make('E', n));
  if (max_rank >= 4) out.push_back(LieType::make('F', 4));
  out.push_back(LieType::make('G', 2));
  return out;
}

}  // namespace

TEST_CASE("Lie type parsing and admissibility") {
  CHECK(LieType::parse("g2").to_string() == "G2");
  CHECK(LieType::parse("D5").rank() == 5);
  CHECK_THROWS_AS(LieType::parse("E9"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("F3"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("B1"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("D2"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("A0"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("X3"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("A"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("A2x"), ValidationError);
  CHECK_THROWS_AS(LieType::parse("A13"), ValidationError);
  CHECK(LieType::parse("A13", 13).rank() == 13);
}

TEST_CASE("constants of small types") {
  const auto g2 = RootSystem::build(LieType::parse("G2"));
  CHECK(g2->constants() == RootConstants{1, 3, 6, 4});
  const auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK(a2->constants() == RootConstants{3, 1, 3, 3});
  const auto a1 = RootSystem::build(LieType::parse("A1"));
  CHECK(a1->num_positive_roots() == 1);
  CHECK(a1->positive_roots()[0] == Weight{2});
  const auto b2 = RootSystem::build(LieType::parse("B2"));
  CHECK(b2->num_positive_roots() == 4);
  CHECK(b2->root_half_norm(b2->phi_index()) == 1);
  CHECK(b2->root_half_norm(b2->theta_index()) == 2);
  CHECK(b2->phi().is_dominant());
  CHECK(b2->theta().is_dominant());
}

TEST_CASE("inner products") {
  const auto a1 = RootSystem::build(LieType::parse("A1"));
  CHECK(a1->L() == 2);
  CHECK(a1->inner_product_L(Weight{1}, Weight{1}) == 1);
  const auto g2 = RootSystem::build(LieType::parse("G2"));
  CHECK(g2->inner_product_L(g2->theta(), g2->theta()) == 6);
  CHECK(g2->inner_product_L(Weight{0, 0}, Weight{3, -1}) == 0);
  CHECK_THROWS_AS(g2->inner_product_L(Weight{1}, Weight{1, 0}), ValidationError);
}

TEST_CASE("coroot pairings") {
  const auto g2 = RootSystem::build(LieType::parse("G2"));
  CHECK(g2->pairing_with_coroot(g2->rho(), g2->theta()) == 3);
  CHECK(g2->pairing_with_coroot(g2->rho(), -g2->theta()) == -3);
  CHECK_THROWS_AS(g2->pairing_with_coroot(g2->rho(), Weight{1, 1}), ValidationError);
  const auto a1 = RootSystem::build(LieType::parse("A1"));
  CHECK(a1->pairing_with_coroot(a1->rho(), a1->simple_roots()[0]) == 1);
  const auto d4 = RootSystem::build(LieType::parse("D4"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(d4->pairing_with_coroot(Weight::unit(4, i), d4->simple_roots()[j]) == (i == j ? 1 : 0));
}

TEST_CASE("invariants for every type up to rank 8") {
  for (const auto& t : types_up_to_rank(8)) {
    CAPTURE(t.to_string());
    const auto rs = RootSystem::build(t);
    const auto& c = rs->constants();
    CHECK(c == tabulated_constants(t));
    CHECK(rs->num_positive_roots() * 2 == rs->rank() * static_cast<std::size_t>(c.h));
    CHECK(rs->coroot_pairing(rs->rho(), rs->theta_index()) + 1 == c.hv);
    CHECK(rs->coroot_pairing(rs->rho(), rs->phi_index()) + 1 == c.h);
    for (std::size_t k = 0; k < rs->num_positive_roots(); ++k) {
      const auto& b = rs->positive_roots()[k];
      const auto n2 = rs->inner_product_L(b, b);
      CHECK((n2 == 2 * c.L || n2 == 2 * c.D * c.L));
      CHECK(rs->pairing_with_coroot(rs->rho(), -b) == -rs->coroot_pairing(rs->rho(), k));
    }
    for (std::size_t i = 0; i < rs->rank(); ++i) {
      CHECK(rs->pairing_with_coroot(rs->rho(), rs->simple_roots()[i]) == 1);
      for (std::size_t j = 0; j < rs->rank(); ++j) {
        CHECK(rs->gram_L()(i, j) == rs->gram_L()(j, i));
        // <alpha_i, alpha_j> = d_j a_ij
        CHECK(rs->inner_product_L(rs->simple_roots()[i], rs->simple_roots()[j]) ==
              c.L * rs->d()[j] * rs->cartan()(i, j));
        CHECK(rs->inner_product_L(Weight::unit(rs->rank(), i), rs->simple_roots()[j]) ==
              (i == j ? c.L * rs->d()[j] : 0));
      }
    }
    // Sylvester: leading principal minors of gram_L are positive.
    const std::size_t n = rs->rank();
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i][j] = static_cast<double>(rs->gram_L()(i, j));
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(g[k][k] > 0);
      for (std::size_t r = k + 1; r < n; ++r) {
        const double f = g[r][k] / g[k][k];
        for (std::size_t c2 = k; c2 < n; ++c2) g[r][c2] -= f * g[k][c2];
      }
    }
  }
}

TEST_CASE("positive roots are ordered by height") {
  const auto f4 = RootSystem::build(LieType::parse("F4"));
  CHECK(f4->num_positive_roots() == 24);
  std::int64_t prev = 0;
  for (std::size_t k = 0; k < f4->num_positive_roots(); ++k) {
    const auto c = f4->root_coefficients(k);
    const std::int64_t h = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    CHECK(h >= prev);
    prev = h;
  }
  CHECK(f4->positive_roots().back() == f4->theta());
}

TEST_CASE("Weyl group orders") {
  CHECK(RootSystem::build(LieType::parse("A3"))->weyl_group_order() == 24);
  CHECK(RootSystem::build(LieType::parse("B3"))->weyl_group_order() == 48);
  CHECK(RootSystem::build(LieType::parse("G2"))->weyl_group_order() == 12);
  CHECK(RootSystem::build(LieType::parse("F4"))->weyl_group_order() == 1152);
  CHECK(RootSystem::build(LieType::parse("E8"))->weyl_group_order() == 696729600ull);
}

TEST_CASE("weights") {
  CHECK(Weight::parse("1,0,2", 3) == Weight{1, 0, 2});
  CHECK(Weight::parse(" 3 ", 1) == Weight{3});
  CHECK_THROWS_AS(Weight::parse("1,2", 3), ValidationError);
  CHECK_THROWS_AS(Weight::parse("1,,2", 3), ValidationError);
  CHECK_THROWS_AS(Weight::parse("a,b", 2), ValidationError);
  CHECK(Weight{1, -2}.to_string() == "1,-2");
  CHECK_THROWS_AS(Weight({1}) + Weight({1, 2}), ValidationError);
}
