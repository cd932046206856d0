#include "support.hpp"

#include <doctest.h>

using namespace hopfcyc;

namespace {

bool only_fails(const ValidationReport& r, const std::vector<std::string>& laws) { return r.failing() == laws; }

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("builders pass the axiom suite") {
    Field Q = Field::rationals(), F7 = Field::prime(7);
    std::vector<HopfPtr> all{build_trivial_hopf(Q),
                             build_group_algebra(cyclic_group_table(1), Q),
                             build_group_algebra(cyclic_group_table(2), Q),
                             build_group_algebra(cyclic_group_table(3), Q),
                             build_group_algebra(cyclic_group_table(3), F7),
                             build_group_algebra(symmetric_group3_table(), Q, symmetric_group3_labels()),
                             build_dual_group_algebra(cyclic_group_table(2), Q),
                             build_dual_group_algebra(cyclic_group_table(3), F7),
                             build_dual_group_algebra(symmetric_group3_table(), Q),
                             build_sweedler(Q),
                             build_sweedler(F7),
                             build_taft(3, 7, 2),
                             build_taft(2, 3, 2)};
    for (const auto& H : all) {
      ValidationReport r = validate_hopf(*H);
      INFO(H->dim());
      CHECK(r.passed());
      CHECK((H->antipode() * H->antipode_inv()).is_identity());
    }
  }

  TEST_CASE("group algebra structure") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    CHECK(Z2->dim() == 2);
    CHECK(Z2->antipode().is_identity());
    auto S3 = build_group_algebra(symmetric_group3_table(), Q);
    CHECK(S3->dim() == 6);
    CHECK((S3->antipode() * S3->antipode()).is_identity());
    CHECK_FALSE(S3->antipode().is_identity());
    CHECK(build_group_algebra(cyclic_group_table(1), Q)->dim() == 1);
  }

  TEST_CASE("non-group tables are rejected") {
    Field Q = Field::rationals();
    CHECK_THROWS(build_group_algebra({{0, 1}, {0, 1}}, Q));
    CHECK_THROWS(build_group_algebra({{0, 1}, {1}}, Q));
    CHECK_THROWS(build_group_algebra({{1, 0}, {0, 0}}, Q));
    CHECK_THROWS(build_group_algebra({}, Q));
  }

  TEST_CASE("dual group algebra coproduct of the identity idempotent") {
    Field Q = Field::rationals();
    auto D = build_dual_group_algebra(cyclic_group_table(2), Q);
    // Delta(delta_e) = delta_e (x) delta_e + delta_g (x) delta_g
    const auto& terms = D->coproduct(0);
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) {
      CHECK(t.a == t.b);
      CHECK(t.c.is_one());
    }
    auto D3 = build_dual_group_algebra(cyclic_group_table(3), Field::prime(7));
    CHECK(validate_hopf(*D3).passed());
    CHECK(D3->coproduct(1).size() == 3);
  }

  TEST_CASE("Sweedler: S^2 is not the identity, S^4 is") {
    Field Q = Field::rationals();
    auto H = build_sweedler(Q);
    CHECK(H->dim() == 4);
    Matrix S2 = H->antipode() * H->antipode();
    CHECK_FALSE(S2.is_identity());
    CHECK((S2 * S2).is_identity());
    CHECK(H->counit_of(2).is_zero());  // eps(x) = 0
    CHECK_THROWS(build_sweedler(Field::prime(2)));
  }

  TEST_CASE("Taft algebras") {
    auto T = build_taft(3, 7, 2);
    CHECK(T->dim() == 9);
    Matrix S = T->antipode();
    CHECK_FALSE(power(S, 2).is_identity());
    CHECK(power(S, 6).is_identity());
    auto Sw = build_sweedler(Field::prime(3));
    auto T2 = build_taft(2, 3, 2);
    CHECK(T2->mult() == Sw->mult());
    CHECK(T2->comult() == Sw->comult());
    CHECK(T2->antipode() == Sw->antipode());
    CHECK_THROWS(build_taft(2, 3, 1));
    CHECK_THROWS(build_taft(3, 7, 1));
    CHECK_THROWS(build_taft(4, 7, 2));
  }

  TEST_CASE("mutated antipode fails exactly the antipode axiom") {
    Field Q = Field::rationals();
    auto H = build_sweedler(Q);
    Matrix S = H->antipode();
    S.set(2, 2, Q.zero());
    S.set(3, 2, Q.one());  // S(x) = gx instead of -gx
    HopfAlgebra bad(Q, H->labels(), H->mult(), H->unit(), H->comult(), H->counit(), S);
    CHECK(only_fails(validate_hopf(bad), {"antipode"}));
  }

  TEST_CASE("non-coassociative comultiplication is named") {
    Field Q = Field::rationals();
    auto H = build_group_algebra(cyclic_group_table(2), Q);
    Matrix D = H->comult();
    D.set(1, 1, Q.one());  // Delta(g) gets an extra e (x) g
    HopfAlgebra bad(Q, H->labels(), H->mult(), H->unit(), D, H->counit(), H->antipode());
    ValidationReport r = validate_hopf(bad);
    CHECK_FALSE(r.passed());
    auto f = r.failing();
    CHECK(std::find(f.begin(), f.end(), "counitality") != f.end());
  }

  TEST_CASE("shape errors are structural") {
    Field Q = Field::rationals();
    auto H = build_group_algebra(cyclic_group_table(2), Q);
    CHECK_THROWS_AS(HopfAlgebra(Q, H->labels(), Matrix(Q, 2, 3), H->unit(), H->comult(), H->counit(), H->antipode()),
                    StructureError);
  }

  TEST_CASE("Hopf maps") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& [name, rho] : testing_support::hopf_maps(f)) {
        INFO(name);
        CHECK(validate_hopf_map(rho).passed());
      }
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    auto Z3 = build_group_algebra(cyclic_group_table(3), Q);
    // g -> g is not multiplicative from Z3 to Z2 (g^3 = g in Z2 terms)
    auto bad = testing_support::group_map(Z3, Z2, {0, 1, 1});
    CHECK_FALSE(validate_hopf_map(bad).passed());
  }

  TEST_CASE("crossed product") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    Algebra k = crossed_product(unit_module_algebra(Z2));
    CHECK(k.mult == Z2->mult());
    HModuleAlgebra fun = function_module_algebra(Z2, cyclic_group_table(2));
    Algebra X = crossed_product(fun);
    CHECK(X.dim == 4);
    CHECK(validate_algebra(X).passed());
    for (const auto& H : testing_support::small_hopf(Q)) {
      CHECK(validate_algebra(crossed_product(adjoint_module_algebra(H))).passed());
    }
    auto S3 = build_group_algebra(symmetric_group3_table(), Q);
    CHECK(validate_algebra(crossed_product(function_module_algebra(S3, symmetric_group3_table()))).passed());
  }
}
