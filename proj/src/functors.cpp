#include "hopfcyc/functors.hpp"

namespace hopfcyc {

namespace {

Matrix eye(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

Matrix restrict_to(const KernelBasis& dst, const Matrix& full, const KernelBasis& src) {
  if (src.dim() == 0) return Matrix(full.field(), dst.dim(), 0);
  return dst.coordinates(full * src.basis);
}

// Matrices of x -> a x and x -> x a on H.
Matrix left_mult(const HopfAlgebra& H, const SparseVec& a) {
  MatrixBuilder mb(H.field(), H.dim(), H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (const auto& [k, c] : H.multiply(a, H.basis(i))) mb.add(k, i, c);
  return std::move(mb).build();
}

Matrix right_mult(const HopfAlgebra& H, const SparseVec& a) {
  MatrixBuilder mb(H.field(), H.dim(), H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (const auto& [k, c] : H.multiply(H.basis(i), a)) mb.add(k, i, c);
  return std::move(mb).build();
}

std::vector<SparseVec> images(const HopfMap& rho) {
  std::vector<SparseVec> out(rho.source->dim());
  Matrix t = rho.matrix.transpose();
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& e : t.row(k)) out[k].emplace_back(e.col, e.value);
  return out;
}

}  // namespace

MixedAydContramodule eps_upper(const MixedComplexVec& W, HopfPtr H) {
  MixedAydContramodule M;
  M.lo = W.lo;
  for (std::size_t k = 0; k < W.dims.size(); ++k) {
    M.objects.push_back(tr_contra(trivial_module(H, W.dims[k])));
    M.d.push_back(monad_map(*H, W.d[k]));
    M.h.push_back(monad_map(*H, W.h[k]));
  }
  return M;
}

MixedComplexVec eps_lower(const MixedAydContramodule& M) {
  MixedComplexVec U = M.underlying();
  std::vector<KernelBasis> inv;
  for (const auto& o : M.objects) inv.push_back(invariants(o.module));
  std::size_t K = inv.size();
  std::vector<std::size_t> dims;
  std::vector<Matrix> d, h;
  for (std::size_t k = 0; k < K; ++k) {
    dims.push_back(inv[k].dim());
    d.push_back(k + 1 < K ? restrict_to(inv[k + 1], U.d[k], inv[k]) : Matrix(U.field, 0, inv[k].dim()));
    h.push_back(k > 0 ? restrict_to(inv[k - 1], U.h[k], inv[k]) : Matrix(U.field, 0, inv[k].dim()));
  }
  MixedComplexVec out = mixed_complex(U.field, M.lo, std::move(dims), std::move(d), std::move(h));
  out.complete_through = U.complete_through;
  return out;
}

std::vector<Matrix> eps_unit(const MixedComplexVec& W, HopfPtr H) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < W.dims.size(); ++k) {
    AydContramodule T = tr_contra(trivial_module(H, W.dims[k]));
    out.push_back(invariants(T.module).coordinates(monad_unit(*H, W.dims[k])));
  }
  return out;
}

AdjunctionReport check_eps_adjunction(const MixedComplexVec& W, const MixedAydContramodule& M) {
  AdjunctionReport r;
  r.left_object = "eps_upper(W)";
  r.right_object = "eps_lower(M)";
  r.left_dim = hom_mixed_ayd_dim(eps_upper(W, M.H()), M);
  r.right_dim = mixed_hom_dim(W, eps_lower(M), {});
  r.equal = r.left_dim == r.right_dim;
  return r;
}

HModule restrict_module(const HModule& N, const HopfMap& rho) {
  HModule out{rho.source, N.dim, {}};
  for (const auto& x : images(rho)) out.act.push_back(N.action_of(x));
  return out;
}

CoinducedContramodule rho_lower(const AydContramodule& M, const HopfMap& rho) {
  const HopfAlgebra& H = *rho.target;
  const HopfAlgebra& K = *rho.source;
  Field f = H.field();
  std::size_t nH = H.dim(), nK = K.dim(), dM = M.dim();
  std::vector<SparseVec> rk = images(rho);

  // phi(rho(k) h) = k . phi(h) on vec index i * dM + a.
  std::vector<Matrix> rows;
  for (std::size_t k = 0; k < nK; ++k)
    rows.push_back(kron(left_mult(H, rk[k]).transpose(), eye(f, dM)) - kron(eye(f, nH), M.module.act[k]));
  KernelBasis space = kernel_basis(Matrix::vstack(rows));

  CoinducedContramodule out{AydContramodule{HModule{rho.target, space.dim(), {}}, Matrix()}, space};
  for (std::size_t x = 0; x < nH; ++x)
    out.object.module.act.push_back(
        restrict_to(space, kron(right_mult(H, H.basis(x)).transpose(), eye(f, dM)), space));

  // psi(h) = alpha(k -> F(S(h^3) rho(k) h^1)(h^2)): the mate of restriction
  // Hom(H, N) -> Hom(K, N) under the coinduction adjunction.
  std::vector<Matrix> alpha_blocks;
  for (std::size_t k = 0; k < nK; ++k) alpha_blocks.push_back(M.alpha.col_range(k * dM, (k + 1) * dM));
  MatrixBuilder full(f, nH * dM, nH * nH * dM);
  for (std::size_t i = 0; i < nH; ++i)
    for (const auto& t : H.coproduct3(i)) {
      SparseVec s3 = H.S_of(t.c);
      for (std::size_t k = 0; k < nK; ++k) {
        if (alpha_blocks[k].is_zero()) continue;
        SparseVec x = H.multiply(H.multiply(s3, rk[k]), H.basis(t.a));
        for (const auto& [p, xp] : x) full.add_block(i * dM, (p * nH + t.b) * dM, alpha_blocks[k], t.coef * xp);
      }
    }
  Matrix lift = kron(eye(f, nH), space.basis);
  out.object.alpha = space.dim() == 0 ? Matrix(f, 0, 0) : space.coordinates(std::move(full).build() * lift);
  return out;
}

PresentedContramodule rho_upper(const AydContramodule& N, const HopfMap& rho) {
  const HopfAlgebra& H = *rho.target;
  const HopfAlgebra& K = *rho.source;
  Field f = H.field();
  std::size_t nH = H.dim(), nK = K.dim(), dN = N.dim();
  std::vector<SparseVec> rk = images(rho);

  Matrix P1 = kron(eye(f, nK), N.alpha);
  MatrixBuilder p2(f, nK * dN, nK * nH * dN);
  Matrix I = eye(f, dN);
  for (std::size_t k = 0; k < nK; ++k)
    for (const auto& kt : K.coproduct(k))
      for (const auto& [p, c] : rk[kt.b]) p2.add_block(k * dN, (kt.a * nH + p) * dN, I, kt.c * c);
  Matrix diff = P1 - std::move(p2).build();

  AydContramodule free = tr_contra(restrict_module(N.module, rho));
  PresentedContramodule out{AydContramodule{HModule{rho.source, 0, {}}, Matrix()}, cokernel(diff)};
  const Cokernel& q = out.quotient;
  out.object.module.dim = q.dim();
  for (const auto& a : free.module.act) out.object.module.act.push_back(q.projection * a * q.section);
  out.object.alpha = q.projection * free.alpha * kron(eye(f, nK), q.section);
  return out;
}

AdjunctionReport check_rho_adjunction(const AydContramodule& N, const AydContramodule& M, const HopfMap& rho) {
  AdjunctionReport r;
  r.left_object = "rho_upper(N)";
  r.right_object = "rho_lower(M)";
  r.left_dim = hom_ayd_space(rho_upper(N, rho).object, M).dim();
  r.right_dim = hom_ayd_space(N, rho_lower(M, rho).object).dim();
  r.equal = r.left_dim == r.right_dim;
  return r;
}

AydContramodule conjugate(const AydContramodule& M, const Matrix& P) {
  Matrix Pinv = inverse(P);
  const HopfAlgebra& H = *M.H();
  AydContramodule out{HModule{M.H(), M.dim(), {}}, P * M.alpha * kron(eye(H.field(), H.dim()), Pinv)};
  for (const auto& a : M.module.act) out.module.act.push_back(P * a * Pinv);
  return out;
}

}  // namespace hopfcyc
