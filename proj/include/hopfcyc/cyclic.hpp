#pragma once

#include "hopfcyc/ayd.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopfcyc {

/// Raised when a requested computation would exceed the dimension bound.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CyclicOptions {
  /// Largest allowed dimension of a single tensor-power Hom space.
  std::size_t max_dim = std::size_t{1} << 15;
  /// Truncation of ch(A); 0 picks the smallest value covering the window.
  std::size_t n_max = 0;
};

/// (degree, dimension) pairs in increasing degree.
using DimTable = std::vector<std::pair<int, std::size_t>>;

// ch(A): X_n = Tr(A^{(x) n+1}) sits in degree -n. Tensor tuples (a_0, ..., a_n)
// are indexed with a_0 most significant. The cyclic operator t_n is
// tau_{A, A^{(x) n}}, which moves a_0 to the end; face d_i multiplies the pair
// (a_{n-1-i}, a_{n-i}), so the labels run from the right.
struct ChernCharacter {
  HModuleAlgebra algebra;
  std::size_t n_max = 0;
  std::vector<AydContramodule> objects;
  std::vector<std::vector<Matrix>> faces;  // faces[n][i]: X_n -> X_{n-1}, 0 <= i <= n
  std::vector<Matrix> cyclic;              // t_n
  std::vector<Matrix> extra;               // s: X_n -> X_{n+1}, phi(h) -> phi(h) (x) 1
  std::vector<std::vector<Matrix>> degeneracies;  // [n][i]: X_n -> X_{n+1}, unit at position n - i
  std::vector<Matrix> b;                   // X_n -> X_{n-1}; b[0] has no rows
  std::vector<Matrix> B;                   // X_n -> X_{n+1}; B[n_max] has no rows

  // When sigma is not the identity, B^2 = (1 - lambda) s s N (1 - sigma) only
  // vanishes modulo degenerate chains, so the mixed object is realized on the
  // quotient by the images of the degeneracies.
  std::vector<Cokernel> quotient;            // X_n -> Xbar_n
  std::vector<AydContramodule> normalized;   // Xbar_n
  std::vector<Matrix> normalized_b;
  std::vector<Matrix> normalized_B;

  Field field() const { return algebra.module.field(); }
  /// Normalized chains in degrees -n_max..0 with d = b and h = B (h is
  /// missing out of degree -n_max).
  MixedAydContramodule as_mixed() const;
};

ChernCharacter chern(const HModuleAlgebra& A, std::size_t n_max, std::size_t max_dim = CyclicOptions{}.max_dim);
/// Contramodule laws per degree, morphism checks for b and B, simplicial and
/// paracyclic relations, b^2 = 0, bB + Bb = 1 - sigma on all chains, and
/// B^2 = 0 on normalized chains.
ValidationReport validate_chern(const ChernCharacter& ch);
/// lambda_n = (-1)^n t_n and N = sum of its powers, on X_n.
Matrix chain_lambda(const ChernCharacter& ch, std::size_t n);
Matrix chain_norm(const ChernCharacter& ch, std::size_t n);

// C^n(M^j) = Hom_H(A^{(x) n+1}, M^j), a subspace of Hom_k(A^{(x) n+1}, M^j)
// with vec index m * dim(A)^{n+1} + x. Every operator is the map induced by
// the matching operator of ch(A) under Hom_aYD(Tr(V), M) = Hom_H(V, M):
//   (delta_i f)(a_0..a_{n+1}) = f(.., a_{n-i} a_{n-i+1}, ..)      i <= n
//   (delta_{n+1} f)(a_0..a_{n+1}) = alpha(h -> f(a_1, .., a_n, a_{n+1} (h.a_0)))
//   (sigma_i f)(a_0..a_n) = f with 1 inserted at position n - i
//   (tau_n f)(a_0..a_n) = alpha(h -> f(a_1, .., a_n, h.a_0))
//   (sigma_e f)(a_0..a_n) = f(a_0, .., a_n, 1)
struct CochainDegree {
  KernelBasis space;
  std::vector<Matrix> cofaces;         // C^n -> C^{n+1}, i = 0..n+1 (n < n_max)
  std::vector<Matrix> codegeneracies;  // C^{n+1} -> C^n, i = 0..n (n < n_max)
  Matrix extra;                        // C^{n+1} -> C^n (n < n_max)
  Matrix cyclic;                       // tau_n
  Matrix sigma;                        // f -> sigma_M o f
  Matrix d;                            // f -> d_M o f, into C^n(M^{j+1})
  Matrix h;                            // f -> h_M o f, into C^n(M^{j-1})
};

struct CocyclicComplex {
  HModuleAlgebra algebra;
  MixedAydContramodule coefficient;
  std::size_t n_max = 0;
  std::vector<std::vector<CochainDegree>> pieces;  // [j - lo][n]

  Field field() const { return algebra.module.field(); }
  int lo() const { return coefficient.lo; }
  int hi() const { return coefficient.hi(); }
  const CochainDegree& at(int j, std::size_t n) const;
  std::size_t dim(int j, std::size_t n) const { return at(j, n).space.dim(); }
};

CocyclicComplex build_cocyclic(const HModuleAlgebra& A, const MixedAydContramodule& M, std::size_t n_max,
                               std::size_t max_dim = CyclicOptions{}.max_dim);

/// C^n -> C^{n+1}.
Matrix operator_b(const CocyclicComplex& C, int j, std::size_t n);
Matrix operator_bprime(const CocyclicComplex& C, int j, std::size_t n);
/// C^n -> C^n.
Matrix operator_lambda(const CocyclicComplex& C, int j, std::size_t n);
Matrix operator_N(const CocyclicComplex& C, int j, std::size_t n);
/// C^{n+1} -> C^n, N o sigma_e o (1 - lambda).
Matrix operator_B(const CocyclicComplex& C, int j, std::size_t n);

/// Cosimplicial and paracocyclic relations, tau^{n+1} = sigma, b^2 = b'^2 = 0,
/// B^2 = 0 on normalized cochains, bB + Bb = 1 - sigma, and commutation with
/// d_M, h_M.
ValidationReport validate_cocyclic(const CocyclicComplex& C);

/// Map C^b -> C^a induced on Hom_H by an aYD map X: Tr(A^{(x) a+1}) -> Tr(A^{(x) b+1}),
/// f -> alpha o A(f) o X o u.
Matrix induced_on_cochains(const CocyclicComplex& C, int j, const Matrix& X, std::size_t a, std::size_t b);
/// Compares the cocyclic operators with those induced from ch(A), and the
/// dimensions of Hom_aYD(Tr(A^{(x) n+1}), M^j) and Hom_H(A^{(x) n+1}, M^j).
ValidationReport check_tau_consistency(const ChernCharacter& ch, const CocyclicComplex& C);

/// Hom from normalized ch(A) to M: degree i = j + n holds Hom_aYD(Xbar_n, M^j), with
/// d phi = d_M phi - (-1)^i phi b and h phi = h_M phi - (-1)^i phi B.
MixedComplexVec hom_mixed_complex(const ChernCharacter& ch, const MixedAydContramodule& M);

/// Finite window of a cochain complex with one total differential.
struct GradedComplex {
  Field field = Field::rationals();
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> D;  // D[k]: degree lo+k -> lo+k+1 (the last one may have no rows)

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  /// D^2 = 0 wherever both maps are present.
  bool squares_to_zero() const;
  /// Cohomology on degrees lo+1 .. hi-1.
  DimTable cohomology(int from, int to) const;
};

/// Total complex of (X[[y]], d - h y), deg y = 2, on degrees from-1 .. to+1.
GradedComplex y_complex(const MixedComplexVec& X, int from, int to);
DimTable y_cohomology(const MixedComplexVec& X, int from, int to);

/// y_cohomology(hom_mixed_complex(chern(A, n_max), M)) with n_max covering the window.
DimTable hopf_cyclic_cohomology(const HModuleAlgebra& A, const MixedAydContramodule& M, int from, int to,
                                const CyclicOptions& opt = {});

/// Columns p >= 0 with b (p even) and -b' (p odd), rows 1 - lambda and N.
GradedComplex tsygan_complex(const HModuleAlgebra& A, const AydContramodule& M, int from, int to,
                             const CyclicOptions& opt = {});
DimTable tsygan_bicomplex(const HModuleAlgebra& A, const AydContramodule& M, int from, int to,
                          const CyclicOptions& opt = {});

/// Pieces C^i(M^j) x^k e^l, l in {0, 1}, of total degree i + j + 2k + l.
/// delta_1 = N x i_e + (1 - lambda) e, delta_2 = b i_e - b' e i_e,
/// delta_3 = (-1)^{i+l} d_M, delta_4 = (-1)^{i+l} x h_M; D = d1 + d2 + d3 - d4.
struct Tricomplex {
  struct Piece {
    std::size_t i;
    int j;
    std::size_t k;
    int l;
    std::size_t offset;
    std::size_t dim;
  };
  Field field = Field::rationals();
  int lo = 0;  // total degree of index 0
  std::vector<std::vector<Piece>> pieces;
  std::vector<std::size_t> dims;
  std::array<std::vector<Matrix>, 4> delta;  // delta[r][t]: index t -> t+1

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  GradedComplex total() const;
};

Tricomplex build_tricomplex(const HModuleAlgebra& A, const MixedAydContramodule& M, int from, int to,
                            const CyclicOptions& opt = {});
/// D^2 = 0 and [delta_3, delta_4] = delta_1^2 on every computed degree.
ValidationReport validate_tricomplex(const Tricomplex& T);
DimTable tricomplex_cohomology(const HModuleAlgebra& A, const MixedAydContramodule& M, int from, int to,
                               const CyclicOptions& opt = {});

}  // namespace hopfcyc
