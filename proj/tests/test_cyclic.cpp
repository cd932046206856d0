#include "support.hpp"

#include <doctest.h>

using namespace hopfcyc;

namespace {

struct Case {
  std::string name;
  HModuleAlgebra A;
  MixedAydContramodule M;
};

std::vector<Case> cases(const Field& f) {
  auto k = build_trivial_hopf(f);
  auto Z2 = build_group_algebra(cyclic_group_table(2), f);
  HModule sign = character_module(Z2, {f.one(), -f.one()});
  auto Sw = build_sweedler(f);
  return {
      {"k / k / k", unit_module_algebra(k), concentrated(evaluation_contramodule(trivial_module(k), 0))},
      {"kZ2 / k / ev1", unit_module_algebra(Z2), concentrated(evaluation_contramodule(trivial_module(Z2), 0))},
      {"kZ2 / ad / ev1", adjoint_module_algebra(Z2), concentrated(evaluation_contramodule(trivial_module(Z2), 0))},
      {"kZ2 / ad / Tr(k)", adjoint_module_algebra(Z2), concentrated(tr_contra(trivial_module(Z2)))},
      {"kZ2 / fun / ev1 sign", function_module_algebra(Z2, cyclic_group_table(2)),
       concentrated(evaluation_contramodule(sign, 0))},
      {"kZ2 / ad / cone(ev_g sign)", adjoint_module_algebra(Z2), sigma_cone(evaluation_contramodule(sign, 1))},
      {"kZ2 / fun / cone(ev_g sign)", function_module_algebra(Z2, cyclic_group_table(2)),
       sigma_cone(evaluation_contramodule(sign, 1))},
      {"H4 / k / Tr(k)", unit_module_algebra(Sw), concentrated(tr_contra(trivial_module(Sw)))},
  };
}

std::vector<std::size_t> column(const DimTable& t) {
  std::vector<std::size_t> out;
  for (const auto& [d, v] : t) out.push_back(v);
  return out;
}

}  // namespace

TEST_SUITE("cyclic") {
  TEST_CASE("ch(A) identity suite") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& c : cases(f)) {
        INFO(c.name);
        ChernCharacter ch = chern(c.A, 4);
        ValidationReport r = validate_chern(ch);
        CHECK(r.passed());
        for (const auto& s : r.failing()) MESSAGE(s);
        // X_n = Tr(A^{n+1}) has dimension dim(H) dim(A)^{n+1}.
        for (std::size_t n = 0; n <= 4; ++n)
          CHECK(ch.objects[n].dim() == c.A.module.H->dim() * ipow(c.A.dim(), n + 1));
      }
  }

  TEST_CASE("lambda^(n+1) = sigma and (1 - lambda) N = 1 - sigma") {
    Field Q = Field::rationals();
    for (const auto& c : cases(Q)) {
      ChernCharacter ch = chern(c.A, 3);
      for (std::size_t n = 0; n <= 3; ++n) {
        Matrix l = chain_lambda(ch, n);
        Matrix sigma = contra_sigma(ch.objects[n]);
        CHECK(power(l, n + 1) == sigma);
        Matrix I = Matrix::identity(Q, l.rows());
        CHECK((I - l) * chain_norm(ch, n) == I - sigma);
      }
    }
  }

  TEST_CASE("unnormalized B^2 is nonzero but degenerate when sigma is not 1") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    ChernCharacter ch = chern(function_module_algebra(Z2, cyclic_group_table(2)), 3);
    bool some_nonzero = false;
    for (std::size_t n = 0; n + 2 <= 3; ++n) some_nonzero = some_nonzero || !(ch.B[n + 1] * ch.B[n]).is_zero();
    CHECK(some_nonzero);
    CHECK(validate_chern(ch).passed());
    for (std::size_t n = 0; n + 2 <= 3; ++n) CHECK((ch.normalized_B[n + 1] * ch.normalized_B[n]).is_zero());
  }

  TEST_CASE("cocyclic identities and tau consistency") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& c : cases(f)) {
        INFO(c.name);
        CocyclicComplex C = build_cocyclic(c.A, c.M, 4);
        ValidationReport r = validate_cocyclic(C);
        CHECK(r.passed());
        for (const auto& s : r.failing()) MESSAGE(s);
        ValidationReport t = check_tau_consistency(chern(c.A, 4), C);
        CHECK(t.passed());
        for (const auto& s : t.failing()) MESSAGE(s);
      }
  }

  TEST_CASE("Hom complex is a mixed complex") {
    Field Q = Field::rationals();
    for (const auto& c : cases(Q)) {
      INFO(c.name);
      MixedComplexVec X = hom_mixed_complex(chern(c.A, 4), c.M);
      CHECK(validate_mixed_complex(X).passed());
    }
  }

  TEST_CASE("classical fixed point: H = A = M = k") {
    for (const auto& f : {Field::rationals(), Field::prime(7)}) {
      auto k = build_trivial_hopf(f);
      auto M = concentrated(evaluation_contramodule(trivial_module(k), 0));
      DimTable t = hopf_cyclic_cohomology(unit_module_algebra(k), M, 0, 6);
      CHECK(column(t) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
    }
  }

  TEST_CASE("three methods agree on stable degree-0 coefficients") {
    for (const auto& f : {Field::rationals(), Field::prime(7)})
      for (const auto& c : cases(f)) {
        if (c.M.objects.size() != 1) continue;
        INFO(c.name);
        auto y = hopf_cyclic_cohomology(c.A, c.M, 0, 5);
        auto ts = tsygan_bicomplex(c.A, c.M.objects[0], 0, 5);
        auto tri = tricomplex_cohomology(c.A, c.M, 0, 5);
        CHECK(y == ts);
        CHECK(y == tri);
      }
  }

  TEST_CASE("known tables") {
    Field Q = Field::rationals();
    auto all = cases(Q);
    auto find = [&](const std::string& n) {
      for (const auto& c : all)
        if (c.name == n) return c;
      FAIL("missing case");
      return all.front();
    };
    auto run = [&](const std::string& n) {
      auto c = find(n);
      return column(hopf_cyclic_cohomology(c.A, c.M, 0, 5));
    };
    CHECK(run("kZ2 / ad / ev1") == std::vector<std::size_t>{2, 0, 2, 0, 2, 0});
    CHECK(run("kZ2 / ad / Tr(k)") == std::vector<std::size_t>{4, 0, 4, 0, 4, 0});
    CHECK(run("kZ2 / fun / ev1 sign") == std::vector<std::size_t>{1, 0, 1, 0, 1, 0});
    // The sigma-cone is contractible in the S^1-category.
    CHECK(run("kZ2 / ad / cone(ev_g sign)") == std::vector<std::size_t>(6, 0));
  }

  TEST_CASE("tricomplex relations on a mixed two-term coefficient") {
    for (const auto& f : {Field::rationals(), Field::prime(7)}) {
      auto Z2 = build_group_algebra(cyclic_group_table(2), f);
      HModule sign = character_module(Z2, {f.one(), -f.one()});
      for (const auto& A : {adjoint_module_algebra(Z2), function_module_algebra(Z2, cyclic_group_table(2))}) {
        Tricomplex T = build_tricomplex(A, sigma_cone(evaluation_contramodule(sign, 1)), 0, 5);
        ValidationReport r = validate_tricomplex(T);
        CHECK(r.passed());
        CHECK(T.total().squares_to_zero());
      }
    }
  }

  TEST_CASE("y-series and tricomplex agree on mixed coefficients") {
    Field Q = Field::rationals();
    for (const auto& c : cases(Q)) {
      INFO(c.name);
      CHECK(hopf_cyclic_cohomology(c.A, c.M, 0, 4) == tricomplex_cohomology(c.A, c.M, 0, 4));
    }
  }

  TEST_CASE("degree shift of the coefficient shifts cohomology") {
    Field Q = Field::rationals();
    auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
    auto A = adjoint_module_algebra(Z2);
    auto M = concentrated(evaluation_contramodule(trivial_module(Z2), 0));
    auto base = column(hopf_cyclic_cohomology(A, M, 0, 5));
    auto moved = column(hopf_cyclic_cohomology(A, shift(M, 1), 1, 6));
    CHECK(base == moved);
  }

  TEST_CASE("guard trips on oversized requests") {
    Field Q = Field::rationals();
    auto S3 = build_group_algebra(symmetric_group3_table(), Q);
    CyclicOptions opt;
    opt.max_dim = 100;
    auto M = concentrated(evaluation_contramodule(trivial_module(S3), 0));
    CHECK_THROWS_AS(hopf_cyclic_cohomology(adjoint_module_algebra(S3), M, 0, 4, opt), GuardError);
    CHECK_THROWS_AS(chern(adjoint_module_algebra(S3), 4, 100), GuardError);
  }

  TEST_CASE("graded complex cohomology by hand") {
    Field Q = Field::rationals();
    GradedComplex G;
    G.field = Q;
    G.lo = 0;
    G.dims = {1, 2, 1};
    Matrix d0(Q, 2, 1), d1(Q, 1, 2);
    d0.set(0, 0, Q.one());
    d1.set(0, 1, Q.one());
    G.D = {d0, d1, Matrix(Q, 0, 1)};
    CHECK(G.squares_to_zero());
    CHECK(G.cohomology(1, 1) == DimTable{{1, 0}});
  }
}
