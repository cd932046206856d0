#include "support.hpp"

#include <doctest.h>

using namespace hopfcyc;
using testing_support::random_invertible;
using testing_support::random_matrix;

namespace {

Matrix from_rows(const Field& f, std::vector<std::vector<long long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, f.from_int(rows[i][j]));
  return m;
}

std::vector<Field> fields() { return {Field::rationals(), Field::prime(7), Field::prime(101)}; }

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("scalar parsing and arithmetic") {
    Field Q = Field::rationals(), F7 = Field::prime(7);
    CHECK(Q.parse("-3/6") == Q.parse("-1/2"));
    CHECK(Q.parse("2/3") + Q.parse("1/3") == Q.one());
    CHECK(F7.parse("3/2") == F7.from_int(5));
    CHECK(F7.parse("-1") == F7.from_int(6));
    CHECK((F7.from_int(3) * F7.from_int(3).inverse()).is_one());
    CHECK_THROWS(Q.parse("1/0"));
    CHECK_THROWS(F7.parse("1/7"));
    CHECK_THROWS(Q.parse("1.5"));
    CHECK_THROWS(Q.parse(""));
    CHECK_THROWS(Field::prime(9));
    CHECK_THROWS_AS(Q.one() + F7.one(), FieldMismatch);
  }

  TEST_CASE("rank of hand-computed matrices") {
    Field Q = Field::rationals();
    CHECK(rank(from_rows(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank(from_rows(Q, {{2, 0}, {0, 3}})) == 2);
    CHECK(rank(Matrix(Q, 3, 4)) == 0);
    // Over F_3 the rows 1 1 and 1 -2 coincide.
    Field F3 = Field::prime(3);
    CHECK(rank(from_rows(F3, {{1, 1}, {1, -2}})) == 1);
    CHECK(rank(from_rows(Q, {{1, 1}, {1, -2}})) == 2);
  }

  TEST_CASE("Vandermonde is invertible and the inverse is exact") {
    Field Q = Field::rationals();
    Matrix V = from_rows(Q, {{1, 1, 1, 1}, {1, 2, 4, 8}, {1, 3, 9, 27}, {1, 4, 16, 64}});
    Matrix Vi = inverse(V);
    CHECK((V * Vi).is_identity());
    CHECK((Vi * V).is_identity());
    CHECK(Vi.at(0, 0) == Q.from_int(4));
    CHECK_THROWS_AS(inverse(from_rows(Q, {{1, 2}, {2, 4}})), std::domain_error);
  }

  TEST_CASE("kernel basis: A K = 0 and rank-nullity on random matrices") {
    std::mt19937_64 rng(11);
    for (const auto& f : fields())
      for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
        Matrix A = random_matrix(f, r, c, rng, 0.4);
        KernelBasis K = kernel_basis(A);
        CHECK((A * K.basis).is_zero());
        CHECK(K.dim() + rank(A) == c);
        CHECK(rank(K.basis) == K.dim());
        CHECK(solve_dim_hom(A) == K.dim());
        // coordinates reproduce the basis
        CHECK(K.coordinates(K.basis).is_identity());
      }
  }

  TEST_CASE("coordinates reject vectors outside the span") {
    Field Q = Field::rationals();
    KernelBasis K = kernel_basis(from_rows(Q, {{1, 1, 0}}));
    Matrix outside = from_rows(Q, {{1}, {0}, {0}});
    CHECK_THROWS_AS(K.coordinates(outside), std::domain_error);
    KernelBasis full = kernel_basis(Matrix(Q, 0, 2));
    CHECK(full.dim() == 2);
  }

  TEST_CASE("cokernel: projection kills the image and splits the section") {
    std::mt19937_64 rng(5);
    for (const auto& f : fields())
      for (int t = 0; t < 20; ++t) {
        std::size_t r = 1 + rng() % 6, c = rng() % 6;
        Matrix A = random_matrix(f, r, c, rng, 0.5);
        Cokernel q = cokernel(A);
        CHECK(q.dim() == r - rank(A));
        CHECK((q.projection * A).is_zero());
        CHECK((q.projection * q.section).is_identity());
      }
  }

  TEST_CASE("row echelon is reduced and deterministic") {
    std::mt19937_64 rng(3);
    Field Q = Field::rationals();
    Matrix A = random_matrix(Q, 5, 6, rng, 0.5);
    RowEchelon e1 = row_echelon(A), e2 = row_echelon(A);
    CHECK(e1.rows == e2.rows);
    CHECK(e1.pivots == e2.pivots);
    CHECK(e1.rows.rows() == rank(A));
    for (std::size_t i = 0; i < e1.pivots.size(); ++i) {
      CHECK(e1.rows.at(i, e1.pivots[i]).is_one());
      for (std::size_t k = 0; k < e1.pivots.size(); ++k)
        if (k != i) CHECK(e1.rows.at(k, e1.pivots[i]).is_zero());
      if (i > 0) CHECK(e1.pivots[i - 1] < e1.pivots[i]);
    }
  }

  TEST_CASE("kron mixed-product property and transpose") {
    std::mt19937_64 rng(8);
    for (const auto& f : fields()) {
      Matrix A = random_matrix(f, 2, 3, rng), B = random_matrix(f, 3, 2, rng);
      Matrix C = random_matrix(f, 3, 2, rng), D = random_matrix(f, 2, 4, rng);
      CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
      CHECK(kron(A, B).transpose() == kron(A.transpose(), B.transpose()));
      std::vector<Matrix> three{A, B, C};
      CHECK(kron_all(three) == kron(kron(A, B), C));
    }
  }

  TEST_CASE("inverse of random invertible matrices") {
    std::mt19937_64 rng(21);
    for (const auto& f : fields())
      for (int t = 0; t < 10; ++t) {
        Matrix P = random_invertible(f, 1 + rng() % 5, rng);
        CHECK((P * inverse(P)).is_identity());
      }
  }

  TEST_CASE("power and stacking") {
    Field Q = Field::rationals();
    Matrix J = from_rows(Q, {{0, 1}, {0, 0}});
    CHECK(power(J, 2).is_zero());
    CHECK(power(J, 0).is_identity());
    std::vector<Matrix> blocks{J, Matrix::identity(Q, 2)};
    Matrix v = Matrix::vstack(blocks), h = Matrix::hstack(blocks);
    CHECK(v.rows() == 4);
    CHECK(h.cols() == 4);
    CHECK(v.transpose() == Matrix::hstack(std::vector<Matrix>{J.transpose(), Matrix::identity(Q, 2)}));
  }

  TEST_CASE("large entries stay exact") {
    Field Q = Field::rationals();
    // Hilbert matrix of order 6 has a known integer inverse with corner entry 36.
    Matrix Hm(Q, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) Hm.set(i, j, Q.parse("1/" + std::to_string(i + j + 1)));
    Matrix Hi = inverse(Hm);
    CHECK(Hi.at(0, 0) == Q.from_int(36));
    CHECK(Hi.at(5, 5) == Q.from_int(698544));
    CHECK((Hm * Hi).is_identity());
  }
}
