#include "support.hpp"

#include <doctest.h>

using namespace hopfcyc;
using namespace testing_support;

TEST_SUITE("functors") {
  TEST_CASE("eps_upper on small examples") {
    Field Q = Field::rationals();
    auto k = build_trivial_hopf(Q);
    MixedComplexVec W = mixed_complex(Q, 0, {1}, {Matrix(Q, 0, 1)}, {Matrix(Q, 0, 1)});
    auto E = eps_upper(W, k);
    REQUIRE(E.objects.size() == 1);
    CHECK(E.objects[0].dim() == 1);
    CHECK(E.objects[0].alpha.is_identity());
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    auto E2 = eps_upper(W, Z2);
    CHECK(E2.objects[0].dim() == 2);
    CHECK(validate_mixed_contramodule(E2).passed());
    CHECK(contra_sigma(E2.objects[0]).is_identity());
  }

  TEST_CASE("eps_upper is degreewise stable and valid; the unit is injective") {
    std::mt19937_64 rng(31);
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& H : small_hopf(f))
        for (int t = 0; t < 4; ++t) {
          MixedComplexVec W = random_two_term(f, rng, static_cast<int>(rng() % 3) - 1);
          auto E = eps_upper(W, H);
          CHECK(validate_mixed_contramodule(E).passed());
          for (const auto& o : E.objects) CHECK(is_stable(o));
          auto u = eps_unit(W, H);
          for (std::size_t k = 0; k < u.size(); ++k) CHECK(rank(u[k]) == W.dims[k]);
          // The unit commutes with d.
          MixedComplexVec back = eps_lower(E);
          CHECK(back.d[0] * u[0] == u[1] * W.d[0]);
          CHECK(back.h[1] * u[1] == u[0] * W.h[1]);
        }
  }

  TEST_CASE("eps_lower on small examples") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    auto triv = concentrated(evaluation_contramodule(trivial_module(Z2), 0));
    auto sign = concentrated(evaluation_contramodule(character_module(Z2, {Q.one(), -Q.one()}), 0));
    CHECK(eps_lower(triv).dims == std::vector<std::size_t>{1});
    CHECK(eps_lower(sign).dims == std::vector<std::size_t>{0});
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) CHECK(validate_mixed_complex(eps_lower(random_mixed(Z2, rng))).passed());
  }

  TEST_CASE("eps adjunction on the documented instances") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    MixedComplexVec k = mixed_complex(Q, 0, {1}, {Matrix(Q, 0, 1)}, {Matrix(Q, 0, 1)});
    auto r1 = check_eps_adjunction(k, concentrated(evaluation_contramodule(trivial_module(Z2), 0)));
    CHECK(r1.equal);
    CHECK(r1.left_dim == 1);
    auto r2 = check_eps_adjunction(k, concentrated(evaluation_contramodule(character_module(Z2, {Q.one(), -Q.one()}), 0)));
    CHECK(r2.equal);
    CHECK(r2.left_dim == 0);
  }

  TEST_CASE("eps adjunction on random instances") {
    std::mt19937_64 rng(77);
    for (const auto& f : {Field::rationals(), Field::prime(7)}) {
      int checked = 0;
      for (const auto& H : small_hopf(f))
        for (int t = 0; t < 4; ++t) {
          MixedComplexVec W = random_two_term(f, rng, static_cast<int>(rng() % 3) - 1);
          MixedAydContramodule M = random_mixed(H, rng);
          auto r = check_eps_adjunction(W, M);
          CHECK(r.equal);
          ++checked;
        }
      CHECK(checked >= 10);
    }
  }

  TEST_CASE("rho_lower and rho_upper validate; adjunction dimensions agree") {
    std::mt19937_64 rng(5);
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& [name, rho] : hopf_maps(f)) {
        INFO(name);
        for (const auto& M : contramodule_pool(rho.source)) CHECK(validate_contramodule(rho_lower(M, rho).object).passed());
        for (const auto& N : contramodule_pool(rho.target))
          CHECK(validate_contramodule(rho_upper(N, rho).object).passed());
        for (int t = 0; t < 3; ++t) {
          auto N = random_contramodule(rho.target, rng);
          auto M = random_contramodule(rho.source, rng);
          CHECK(check_rho_adjunction(N, M, rho).equal);
        }
      }
  }

  TEST_CASE("rho = id gives back the object up to isomorphism") {
    Field Q = Field::rationals();
    for (const auto& H : small_hopf(Q)) {
      HopfMap id = group_map(H, H, [&] {
        std::vector<std::size_t> v(H->dim());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
        return v;
      }());
      for (const auto& M : contramodule_pool(H)) {
        auto L = rho_lower(M, id).object;
        auto U = rho_upper(M, id).object;
        CHECK(L.dim() == M.dim());
        CHECK(U.dim() == M.dim());
        CHECK(hom_ayd_space(M, L).dim() == hom_ayd_space(M, M).dim());
        CHECK(hom_ayd_space(U, M).dim() == hom_ayd_space(M, M).dim());
      }
    }
  }

  TEST_CASE("rho_upper of a free object is free on the restriction") {
    for (const auto& [name, rho] : hopf_maps(Field::rationals())) {
      INFO(name);
      for (const auto& V : {trivial_module(rho.target), regular_module(rho.target)}) {
        auto U = rho_upper(tr_contra(V), rho).object;
        CHECK(U.dim() == rho.source->dim() * V.dim);
        auto F = tr_contra(restrict_module(V, rho));
        CHECK(hom_ayd_space(U, F).dim() == hom_ayd_space(F, F).dim());
      }
    }
  }

  TEST_CASE("trivial K: coequalizer against a brute-force cokernel") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& H : small_hopf(f)) {
        HopfMap unit{build_trivial_hopf(f), H, H->unit()};
        for (const auto& N : contramodule_pool(H)) {
          // Hom(k, Hom(H, N)) -> N: alpha - evaluation at 1.
          Matrix ev(f, N.dim(), H->dim() * N.dim());
          for (const auto& [i, c] : H->unit_vec())
            ev.add_block(0, i * N.dim(), Matrix::identity(f, N.dim()), c);
          std::size_t brute = N.dim() - rank(N.alpha - ev);
          CHECK(rho_upper(N, unit).object.dim() == brute);
        }
      }
  }

  TEST_CASE("trivial K: rho_lower is cofree on d copies of the regular module") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& H : small_hopf(f)) {
        auto k = build_trivial_hopf(f);
        HopfMap unit{k, H, H->unit()};
        for (std::size_t d = 1; d <= 2; ++d) {
          AydContramodule M{trivial_module(k, d), Matrix::identity(f, d)};
          auto L = rho_lower(M, unit).object;
          REQUIRE(L.dim() == H->dim() * d);
          HModule free = regular_module(H);
          for (std::size_t t = 1; t < d; ++t) free = direct_sum(free, regular_module(H));
          // H^* with right translation is free of rank one.
          CHECK(hom_H_space(free, L.module).dim() == hom_H_space(free, free).dim());
          CHECK(hom_H_space(L.module, free).dim() == hom_H_space(free, free).dim());
          // Not the free object Tr(k^d) unless H is trivial.
          MixedComplexVec W = mixed_complex(f, 0, {d}, {Matrix(f, 0, d)}, {Matrix(f, 0, d)});
          auto E = eps_upper(W, H).objects[0];
          if (H->dim() > 1) CHECK(hom_ayd_space(E, L).dim() != hom_ayd_space(E, E).dim());
        }
      }
  }

  TEST_CASE("conjugate transports structure") {
    std::mt19937_64 rng(3);
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    auto M = tr_contra(regular_module(Z2));
    Matrix P = random_invertible(Q, M.dim(), rng);
    auto C = conjugate(M, P);
    CHECK(validate_contramodule(C).passed());
    CHECK(is_contramodule_morphism(M, C, P));
  }
}
