#pragma once

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// Left H-module: act[i] is the dim x dim matrix of e_i.
struct HModule {
  HopfPtr H;
  std::size_t dim = 0;
  std::vector<Matrix> act;

  Field field() const { return H->field(); }
  /// Matrix of a general element of H.
  Matrix action_of(const SparseVec& x) const;
};

ValidationReport validate_module(const HModule& M);

HModule trivial_module(HopfPtr H, std::size_t dim = 1);
/// One-dimensional module where e_i acts by chi[i].
HModule character_module(HopfPtr H, const std::vector<Scalar>& chi);
/// H acting on itself by left multiplication.
HModule regular_module(HopfPtr H);
/// h . a = h^1 a S(h^2).
HModule adjoint_module(HopfPtr H);
HModule tensor_modules(const HModule& V, const HModule& W);
/// V^{(x) k}, k >= 1.
HModule tensor_power(const HModule& V, std::size_t k);
HModule direct_sum(const HModule& V, const HModule& W);

/// Linear constraints on vec(f) (row-major, dst.dim x src.dim) for f to
/// intertwine the given families of matrices.
Matrix intertwiner_constraints(const std::vector<Matrix>& src, const std::vector<Matrix>& dst, std::size_t src_dim,
                               std::size_t dst_dim, Field field);
/// vec(f) as a dst x src matrix.
Matrix unvec(const Matrix& column, std::size_t dst_dim, std::size_t src_dim, std::size_t col = 0);

KernelBasis hom_H_space(const HModule& V, const HModule& W);
std::vector<Matrix> hom_H_basis(const HModule& V, const HModule& W);
/// Columns span {v : h v = eps(h) v}.
KernelBasis invariants(const HModule& V);

/// Right H-comodule t -> t_0 (x) t_1; coaction is (dim*n) x dim, row t0*n + h.
struct HComodule {
  HopfPtr H;
  std::size_t dim = 0;
  Matrix coaction;
};
ValidationReport validate_comodule(const HComodule& T);
HComodule trivial_comodule(HopfPtr H, std::size_t dim = 1);
/// H coacting on itself by the coproduct.
HComodule regular_comodule(HopfPtr H);

/// Algebra object in H-modules.
struct HModuleAlgebra {
  HModule module;
  Matrix mult;  // dim x dim^2
  Matrix unit;  // dim x 1

  std::size_t dim() const { return module.dim; }
  Algebra algebra() const { return {module.field(), module.dim, mult, unit}; }
};
ValidationReport validate_module_algebra(const HModuleAlgebra& A);

/// The ground field with trivial action.
HModuleAlgebra unit_module_algebra(HopfPtr H);
/// H with the adjoint action.
HModuleAlgebra adjoint_module_algebra(HopfPtr H);
/// Functions on a finite group G with a group-algebra H = kG acting by
/// translation (g.f)(x) = f(x g).
HModuleAlgebra function_module_algebra(HopfPtr kG, const GroupTable& table);

/// (a (x) x)(b (x) y) = a (x^1 . b) (x) x^2 y on A (x) H, index a*n + x.
Algebra crossed_product(const HModuleAlgebra& A);

/// Algebra with commuting left and right H-coactions that are algebra maps.
/// coact_l: (n*dim) x dim, row h*dim + a; coact_r: (dim*n) x dim, row a*n + h.
struct BicomoduleAlgebra {
  HopfPtr H;
  Algebra alg;
  Matrix coact_l;
  Matrix coact_r;

  std::size_t dim() const { return alg.dim; }
};
ValidationReport validate_bicomodule_algebra(const BicomoduleAlgebra& A);
/// H over itself with both coactions the coproduct.
BicomoduleAlgebra hopf_as_bicomodule_algebra(HopfPtr H);
/// Left module over a plain algebra: act[i] is the matrix of e_i.
struct AModule {
  std::size_t dim = 0;
  std::vector<Matrix> act;
};
ValidationReport validate_amodule(const Algebra& A, const AModule& M);
/// Left regular module of A.
AModule regular_amodule(const Algebra& A);
/// Restriction along A = H: an H-module viewed as an A-module.
AModule as_amodule(const HModule& M);

enum class Side { left, right };

struct KeyIso {
  Matrix phi;
  Matrix theta;
  /// A-action on the source (free) and target (coaction-twisted) spaces.
  std::vector<Matrix> source_action;
  std::vector<Matrix> target_action;
};
/// right: A (x) V, index a*dimV + v; left: V (x) A, index v*dimA + a.
KeyIso key_iso(const BicomoduleAlgebra& A, const HModule& V, Side side);
ValidationReport validate_key_iso(const KeyIso& k);

/// Permutation matrix taking V (x) W to W (x) V.
Matrix flip(const Field& f, std::size_t dv, std::size_t dw);
/// Matrix of the multiplication of positions (k, k+1) in A^{(x) n+1}.
Matrix multiply_pair(const Matrix& mult, std::size_t dimA, std::size_t n, std::size_t k);
/// Matrix inserting the unit at position k of A^{(x) n+1} (giving n+2 factors).
Matrix insert_unit(const Matrix& unit, std::size_t dimA, std::size_t n, std::size_t k);
std::size_t ipow(std::size_t base, std::size_t e);

}  // namespace hopfcyc
