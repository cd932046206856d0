#include "support.hpp"

#include <doctest.h>

using namespace hopfcyc;

TEST_SUITE("rep") {
  TEST_CASE("standard modules validate") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& H : testing_support::small_hopf(f)) {
        CHECK(validate_module(trivial_module(H, 2)).passed());
        CHECK(validate_module(regular_module(H)).passed());
        CHECK(validate_module(adjoint_module(H)).passed());
        CHECK(validate_module(tensor_modules(regular_module(H), adjoint_module(H))).passed());
        CHECK(validate_module(tensor_power(regular_module(H), 2)).passed());
        CHECK(validate_module(direct_sum(trivial_module(H), regular_module(H))).passed());
      }
  }

  TEST_CASE("a non-multiplicative action is rejected") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    HModule bad = character_module(Z2, {Q.one(), Q.from_int(2)});  // g^2 = 1 but 2^2 = 4
    CHECK_FALSE(validate_module(bad).passed());
  }

  TEST_CASE("Hom_H dimensions over kZ2 and kS3") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    HModule triv = trivial_module(Z2), sign = character_module(Z2, {Q.one(), -Q.one()});
    HModule reg = regular_module(Z2);
    CHECK(hom_H_space(triv, sign).dim() == 0);
    CHECK(hom_H_space(triv, triv).dim() == 1);
    CHECK(hom_H_space(reg, reg).dim() == 2);
    CHECK(hom_H_space(reg, sign).dim() == 1);
    CHECK(invariants(reg).dim() == 1);
    CHECK(invariants(sign).dim() == 0);
    auto S3 = build_group_algebra(symmetric_group3_table(), Q);
    // End of the regular representation: dim H; sum of squares 1 + 1 + 4.
    CHECK(hom_H_space(regular_module(S3), regular_module(S3)).dim() == 6);
    // Adjoint invariants are the class functions: three classes.
    CHECK(invariants(adjoint_module(S3)).dim() == 3);
    for (const auto& g : hom_H_basis(reg, reg))
      for (std::size_t t = 0; t < 2; ++t) CHECK(g * reg.act[t] == reg.act[t] * g);
  }

  TEST_CASE("Sweedler invariants and adjoint action") {
    Field Q = Field::rationals();
    auto H = build_sweedler(Q);
    // Integrals of H4 span a one-dimensional left ideal.
    CHECK(invariants(regular_module(H)).dim() == 1);
    // The unit of H is ad-invariant.
    KernelBasis inv = invariants(adjoint_module(H));
    CHECK(inv.dim() >= 1);
  }

  TEST_CASE("module algebras") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& H : testing_support::small_hopf(f)) {
        CHECK(validate_module_algebra(unit_module_algebra(H)).passed());
        CHECK(validate_module_algebra(adjoint_module_algebra(H)).passed());
      }
    Field Q = Field::rationals();
    auto S3 = build_group_algebra(symmetric_group3_table(), Q);
    CHECK(validate_module_algebra(function_module_algebra(S3, symmetric_group3_table())).passed());
    // Regular action on H is not a module-algebra action for kZ2.
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    HModuleAlgebra bad = adjoint_module_algebra(Z2);
    bad.module = regular_module(Z2);
    CHECK_FALSE(validate_module_algebra(bad).passed());
  }

  TEST_CASE("comodules and bicomodule algebras") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& H : testing_support::small_hopf(f)) {
        CHECK(validate_comodule(trivial_comodule(H, 2)).passed());
        CHECK(validate_comodule(regular_comodule(H)).passed());
        CHECK(validate_bicomodule_algebra(hopf_as_bicomodule_algebra(H)).passed());
        Algebra alg = crossed_product(unit_module_algebra(H));
        CHECK(validate_amodule(alg, regular_amodule(alg)).passed());
        CHECK(validate_amodule(alg, as_amodule(adjoint_module(H))).passed());
      }
  }

  TEST_CASE("key isomorphism for H as a bicomodule algebra") {
    Field Q = Field::rationals();
    for (const auto& H : {build_group_algebra(cyclic_group_table(2), Q), build_sweedler(Q), build_taft(3, 7, 2)}) {
      BicomoduleAlgebra B = hopf_as_bicomodule_algebra(H);
      for (const auto& V : {trivial_module(H), regular_module(H), adjoint_module(H)}) {
        CHECK(validate_key_iso(key_iso(B, V, Side::right)).passed());
        CHECK(validate_key_iso(key_iso(B, V, Side::left)).passed());
      }
    }
  }

  TEST_CASE("flip and tensor indexing") {
    Field Q = Field::rationals();
    Matrix F = flip(Q, 2, 3);
    CHECK((flip(Q, 3, 2) * F).is_identity());
    std::mt19937_64 rng(2);
    Matrix A = testing_support::random_matrix(Q, 2, 2, rng), B = testing_support::random_matrix(Q, 3, 3, rng);
    CHECK(F * kron(A, B) == kron(B, A) * F);
    CHECK(ipow(3, 4) == 81);
  }
}
