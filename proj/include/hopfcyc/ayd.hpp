#pragma once

#include "hopfcyc/rep.hpp"

namespace hopfcyc {

// Hom_k(H, N) uses the basis (dual basis of H) (x) (basis of N): coordinate
// i*dim(N) + a is component a of phi(e_i). Iterating, coordinate
// (p*n + q)*dim(N) + a of Hom(H, Hom(H, N)) is component a of phi(e_p)(e_q).

/// Hom_k(H, N) with (a.phi)(x) = a^2 phi(S(a^3) x a^1).
HModule monad_on(const HModule& N);
/// phi -> (h -> phi(h^1)(h^2)).
Matrix monad_mult(const HopfAlgebra& H, std::size_t dimN);
/// n -> (h -> eps(h) n).
Matrix monad_unit(const HopfAlgebra& H, std::size_t dimN);
/// n -> (h -> h.n).
Matrix monad_sigma(const HModule& N);
/// The functor on a linear map f: N -> N'.
Matrix monad_map(const HopfAlgebra& H, const Matrix& f);

/// Generalized form over a bicomodule algebra A: (a.phi)(x) = a_0 phi(S(a_1) x a_{-1}).
AModule monad_on(const BicomoduleAlgebra& A, const AModule& N);

struct AydContramodule {
  HModule module;
  Matrix alpha;  // dim x (dim H * dim)

  std::size_t dim() const { return module.dim; }
  const HopfPtr& H() const { return module.H; }
};

ValidationReport validate_contramodule(const AydContramodule& M);
/// sigma = alpha o varsigma.
Matrix contra_sigma(const AydContramodule& M);
bool is_stable(const AydContramodule& M);

/// Free object (monad_on V, monad_mult).
AydContramodule tr_contra(const HModule& V);
/// A module with contraaction phi -> phi(e_index).
AydContramodule evaluation_contramodule(const HModule& V, std::size_t index);
AydContramodule direct_sum(const AydContramodule& M, const AydContramodule& N);

struct GeneralizedContramodule {
  std::shared_ptr<const BicomoduleAlgebra> A;
  AModule module;
  Matrix alpha;
};
ValidationReport validate_contramodule(const GeneralizedContramodule& M);

/// Linear constraints on vec(f), f: M -> N, for f to be a morphism of aYD contramodules.
Matrix contramodule_hom_constraints(const AydContramodule& M, const AydContramodule& N);
KernelBasis hom_ayd_space(const AydContramodule& M, const AydContramodule& N);
bool is_contramodule_morphism(const AydContramodule& M, const AydContramodule& N, const Matrix& f);

/// tau_{V,W}: Tr(V (x) W) -> Tr(W (x) V), (tau phi)(h) = (1 (x) h^2) flip(phi(h^1)).
Matrix tau_free(const HModule& V, const HModule& W);

/// Degreewise data of a graded object with a degree +1 map d and a degree -1
/// map h. Index k holds degree lo + k; d[k] maps index k to k+1 and h[k] maps
/// index k to k-1, with the missing ends given by zero-row matrices.
struct MixedComplexVec {
  Field field = Field::rationals();
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;
  std::vector<Matrix> h;
  /// Highest degree whose space and outgoing maps are complete (truncations).
  int complete_through = 0;
  bool bounded_below = true;

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  std::size_t dim_at(int deg) const;
};
/// Checks d^2 = 0, h^2 = 0, and dh + hd = 0 through complete_through.
ValidationReport validate_mixed_complex(const MixedComplexVec& X);
MixedComplexVec mixed_complex(Field f, int lo, std::vector<std::size_t> dims, std::vector<Matrix> d, std::vector<Matrix> h);
/// Zero-row/zero-col placeholders completed, shapes checked.
void normalize_ends(MixedComplexVec& X);

struct MixedAydContramodule {
  int lo = 0;
  std::vector<AydContramodule> objects;
  std::vector<Matrix> d;
  std::vector<Matrix> h;

  int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
  HopfPtr H() const { return objects.front().H(); }
  Field field() const { return objects.front().module.field(); }
  /// Underlying graded vector spaces with d and h.
  MixedComplexVec underlying() const;
};
ValidationReport validate_mixed_contramodule(const MixedAydContramodule& M);
/// M in a single degree with d = h = 0 (valid exactly when M is stable).
MixedAydContramodule concentrated(const AydContramodule& M, int degree = 0);
/// Two-term object X -> X in degrees lo, lo+1 with d = 1 - sigma and h = id.
MixedAydContramodule sigma_cone(const AydContramodule& X, int lo = -1);
MixedAydContramodule shift(const MixedAydContramodule& M, int by);

/// Joint linear system for degree-0 maps of graded objects commuting with d
/// and h; extra[k] are additional per-degree constraints on vec(f^k) (or
/// empty). Degrees are matched through lo.
std::size_t mixed_hom_dim(const MixedComplexVec& X, const MixedComplexVec& Y,
                          const std::vector<Matrix>& extra_by_degree_of_X);
std::size_t hom_mixed_ayd_dim(const MixedAydContramodule& M, const MixedAydContramodule& N);

// Comodule side. H (x) T uses index x*dim(T) + t.

struct AydModule {
  HModule module;
  HComodule comodule;
  std::size_t dim() const { return module.dim; }
};
/// m -> m_1 m_0.
Matrix module_sigma(const AydModule& V);
ValidationReport validate_ayd_module(const AydModule& V);
bool is_stable_module(const AydModule& V);

/// H (x) T with coaction x (x) t -> x^2 (x) t_0 (x) x^3 t_1 S(x^1).
HComodule comodule_monad_on(const HComodule& T);
/// Free aYD module H (x) T with H acting on the left factor.
AydModule comodule_monad(const HComodule& T);
Matrix comodule_monad_mult(const HopfAlgebra& H, std::size_t dimT);  // m (x) id
Matrix comodule_monad_unit(const HopfAlgebra& H, std::size_t dimT);  // t -> 1 (x) t
Matrix comodule_monad_sigma(const HComodule& T);                     // t -> t_1 (x) t_0
/// Monad laws, comodule-map conditions, and centrality of sigma for T.
ValidationReport validate_comodule_monad(const HComodule& T);

struct MixedAydModule {
  int lo = 0;
  std::vector<AydModule> objects;
  std::vector<Matrix> d;
  std::vector<Matrix> h;
};
ValidationReport validate_mixed_ayd_module(const MixedAydModule& M);

/// Monad laws for N (associativity, unit laws, sigma centrality, mult and unit
/// are H-linear).
ValidationReport validate_monad(const HModule& N);

}  // namespace hopfcyc
