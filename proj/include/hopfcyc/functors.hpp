#pragma once

#include "hopfcyc/ayd.hpp"

#include <string>

namespace hopfcyc {

struct AdjunctionReport {
  std::string left_object;
  std::string right_object;
  std::size_t left_dim = 0;   // Hom from the left adjoint's output
  std::size_t right_dim = 0;  // Hom into the right adjoint's output
  bool equal = false;
};

/// (Hom(H, W), d o -, h o -) with x.f = f(S(x^2) - x^1) and contraaction - o Delta.
MixedAydContramodule eps_upper(const MixedComplexVec& W, HopfPtr H);
/// Degreewise H-invariants with the restricted d and h.
MixedComplexVec eps_lower(const MixedAydContramodule& M);
/// Per degree, the unit w -> (h -> eps(h) w) of W into eps_lower(eps_upper(W)),
/// in the coordinates of the invariant bases.
std::vector<Matrix> eps_unit(const MixedComplexVec& W, HopfPtr H);
AdjunctionReport check_eps_adjunction(const MixedComplexVec& W, const MixedAydContramodule& M);

/// rho^* N: an H-module viewed as a K-module.
HModule restrict_module(const HModule& N, const HopfMap& rho);

/// Hom_K(H, M) with (x.f)(h) = f(h x) and the contraaction
/// F -> (h -> alpha(k -> F(S(h^3) rho(k) h^1)(h^2))). By K-linearity of F(x) this
/// differs from the form with rho(k^1), rho(k^2) h^2 only by the twist k -> k^2 F(k^1),
/// which is not a monad map under the conventions used here.
/// The result is stored in coordinates of a basis of Hom_K(H, M) inside Hom_k(H, M).
struct CoinducedContramodule {
  AydContramodule object;
  KernelBasis space;
};
CoinducedContramodule rho_lower(const AydContramodule& M, const HopfMap& rho);

/// Cokernel in Hom(K, N) of the difference of F -> alpha o F and
/// F -> (k -> F(k^1)(rho(k^2))), with the structure induced from the free
/// K-object Hom(K, rho^* N).
struct PresentedContramodule {
  AydContramodule object;
  Cokernel quotient;
};
PresentedContramodule rho_upper(const AydContramodule& N, const HopfMap& rho);

/// dim Hom_K(rho_upper(N), M) against dim Hom_H(N, rho_lower(M)).
AdjunctionReport check_rho_adjunction(const AydContramodule& N, const AydContramodule& M, const HopfMap& rho);

/// Transport of structure along an invertible P: act -> P act P^-1.
AydContramodule conjugate(const AydContramodule& M, const Matrix& P);

}  // namespace hopfcyc
