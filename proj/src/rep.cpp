#include "hopfcyc/rep.hpp"

#include <stdexcept>

namespace hopfcyc {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

Matrix HModule::action_of(const SparseVec& x) const {
  Matrix out(field(), dim, dim);
  for (const auto& [i, c] : x) out += act[i] * c;
  return out;
}

ValidationReport validate_module(const HModule& M) {
  ValidationReport rep;
  rep.subject = "H-module";
  const HopfAlgebra& H = *M.H;
  if (M.act.size() != H.dim()) throw StructureError("module action has wrong number of matrices");
  for (const auto& a : M.act)
    if (a.rows() != M.dim || a.cols() != M.dim) throw StructureError("module action matrix has wrong shape");
  rep.add("unit acts as identity", M.action_of(H.unit_vec()) == Matrix::identity(M.field(), M.dim));
  bool mult = true;
  for (std::size_t i = 0; i < H.dim() && mult; ++i)
    for (std::size_t j = 0; j < H.dim() && mult; ++j) mult = M.action_of(H.product(i, j)) == M.act[i] * M.act[j];
  rep.add("action is multiplicative", mult);
  return rep;
}

HModule trivial_module(HopfPtr H, std::size_t dim) {
  HModule M{H, dim, {}};
  for (std::size_t i = 0; i < H->dim(); ++i) M.act.push_back(Matrix::identity(H->field(), dim) * H->counit_of(i));
  return M;
}

HModule character_module(HopfPtr H, const std::vector<Scalar>& chi) {
  if (chi.size() != H->dim()) throw std::invalid_argument("character has wrong length");
  HModule M{H, 1, {}};
  for (const auto& c : chi) M.act.push_back(Matrix::identity(H->field(), 1) * c);
  return M;
}

HModule regular_module(HopfPtr H) {
  std::size_t n = H->dim();
  HModule M{H, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    MatrixBuilder mb(H->field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : H->product(i, j)) mb.add(k, j, c);
    M.act.push_back(std::move(mb).build());
  }
  return M;
}

HModule adjoint_module(HopfPtr H) {
  std::size_t n = H->dim();
  HModule M{H, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    MatrixBuilder mb(H->field(), n, n);
    for (const auto& t : H->coproduct(i))
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec v = H->multiply(H->multiply(H->basis(t.a), H->basis(j)), H->S_of(t.b));
        for (const auto& [k, c] : v) mb.add(k, j, c * t.c);
      }
    M.act.push_back(std::move(mb).build());
  }
  return M;
}

HModule tensor_modules(const HModule& V, const HModule& W) {
  if (V.H != W.H) throw std::invalid_argument("tensor of modules over different Hopf algebras");
  HModule M{V.H, V.dim * W.dim, {}};
  for (std::size_t i = 0; i < V.H->dim(); ++i) {
    Matrix a(V.field(), M.dim, M.dim);
    for (const auto& t : V.H->coproduct(i)) a += kron(V.act[t.a], W.act[t.b]) * t.c;
    M.act.push_back(std::move(a));
  }
  return M;
}

HModule tensor_power(const HModule& V, std::size_t k) {
  if (k == 0) return trivial_module(V.H, 1);
  HModule out = V;
  for (std::size_t i = 1; i < k; ++i) out = tensor_modules(out, V);
  return out;
}

HModule direct_sum(const HModule& V, const HModule& W) {
  HModule M{V.H, V.dim + W.dim, {}};
  for (std::size_t i = 0; i < V.H->dim(); ++i) {
    Matrix a(V.field(), M.dim, M.dim);
    a.add_block(0, 0, V.act[i], V.field().one());
    a.add_block(V.dim, V.dim, W.act[i], V.field().one());
    M.act.push_back(std::move(a));
  }
  return M;
}

Matrix intertwiner_constraints(const std::vector<Matrix>& src, const std::vector<Matrix>& dst, std::size_t src_dim,
                               std::size_t dst_dim, Field field) {
  // f P = Q f  <=>  (kron(I, P^T) - kron(Q, I)) vec f = 0.
  std::vector<Matrix> blocks;
  Matrix Is = Matrix::identity(field, src_dim);
  Matrix Id = Matrix::identity(field, dst_dim);
  for (std::size_t i = 0; i < src.size(); ++i) blocks.push_back(kron(Id, src[i].transpose()) - kron(dst[i], Is));
  if (blocks.empty()) return Matrix(field, 0, src_dim * dst_dim);
  return Matrix::vstack(blocks);
}

Matrix unvec(const Matrix& column, std::size_t dst_dim, std::size_t src_dim, std::size_t col) {
  MatrixBuilder mb(column.field(), dst_dim, src_dim);
  for (std::size_t r = 0; r < column.rows(); ++r) {
    Scalar v = column.at(r, col);
    if (!v.is_zero()) mb.add(r / src_dim, r % src_dim, v);
  }
  return std::move(mb).build();
}

KernelBasis hom_H_space(const HModule& V, const HModule& W) {
  return kernel_basis(intertwiner_constraints(V.act, W.act, V.dim, W.dim, V.field()));
}

std::vector<Matrix> hom_H_basis(const HModule& V, const HModule& W) {
  KernelBasis kb = hom_H_space(V, W);
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < kb.dim(); ++j) out.push_back(unvec(kb.basis, W.dim, V.dim, j));
  return out;
}

KernelBasis invariants(const HModule& V) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < V.H->dim(); ++i)
    blocks.push_back(V.act[i] - Matrix::identity(V.field(), V.dim) * V.H->counit_of(i));
  return kernel_basis(Matrix::vstack(blocks));
}

ValidationReport validate_comodule(const HComodule& T) {
  ValidationReport rep;
  rep.subject = "H-comodule";
  const HopfAlgebra& H = *T.H;
  std::size_t n = H.dim();
  if (T.coaction.rows() != T.dim * n || T.coaction.cols() != T.dim) throw StructureError("coaction has wrong shape");
  Matrix It = Matrix::identity(H.field(), T.dim);
  Matrix Ih = Matrix::identity(H.field(), n);
  rep.add("coassociativity", kron(T.coaction, Ih) * T.coaction == kron(It, H.comult()) * T.coaction);
  rep.add("counitality", kron(It, H.counit()) * T.coaction == It);
  return rep;
}

HComodule trivial_comodule(HopfPtr H, std::size_t dim) {
  Matrix u = H->unit();
  return {H, dim, kron(Matrix::identity(H->field(), dim), u)};
}

HComodule regular_comodule(HopfPtr H) { return {H, H->dim(), H->comult()}; }

ValidationReport validate_module_algebra(const HModuleAlgebra& A) {
  ValidationReport rep;
  rep.subject = "H-module algebra";
  rep.merge(validate_module(A.module));
  rep.merge(validate_algebra(A.algebra()));
  const HopfAlgebra& H = *A.module.H;
  bool prod = true, unit = true;
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Matrix diag(A.module.field(), A.dim() * A.dim(), A.dim() * A.dim());
    for (const auto& t : H.coproduct(i)) diag += kron(A.module.act[t.a], A.module.act[t.b]) * t.c;
    prod = prod && A.module.act[i] * A.mult == A.mult * diag;
    unit = unit && A.module.act[i] * A.unit == A.unit * H.counit_of(i);
  }
  rep.add("action respects product", prod);
  rep.add("action respects unit", unit);
  return rep;
}

HModuleAlgebra unit_module_algebra(HopfPtr H) {
  Matrix one = Matrix::identity(H->field(), 1);
  return {trivial_module(H, 1), one, one};
}

HModuleAlgebra adjoint_module_algebra(HopfPtr H) { return {adjoint_module(H), H->mult(), H->unit()}; }

HModuleAlgebra function_module_algebra(HopfPtr kG, const GroupTable& table) {
  std::size_t n = table.size();
  if (kG->dim() != n) throw std::invalid_argument("group algebra and table disagree");
  Field f = kG->field();
  // Basis delta_y; g . delta_y = delta_{y g^{-1}}. Group element g is basis index g of kG.
  HModule M{kG, n, {}};
  for (std::size_t g = 0; g < n; ++g) {
    MatrixBuilder mb(f, n, n);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if (table[x][g] == y) mb.add(x, y, f.one());
    M.act.push_back(std::move(mb).build());
  }
  MatrixBuilder m(f, n, n * n), u(f, n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    m.add(a, a * n + a, f.one());
    u.add(a, 0, f.one());
  }
  return {std::move(M), std::move(m).build(), std::move(u).build()};
}

Algebra crossed_product(const HModuleAlgebra& A) {
  const HopfAlgebra& H = *A.module.H;
  Field f = H.field();
  std::size_t da = A.dim(), n = H.dim(), d = da * n;
  MatrixBuilder mb(f, d, d * d);
  // Columns of mult for sparse access.
  std::vector<SparseVec> mcols(da * da);
  for (std::size_t r = 0; r < A.mult.rows(); ++r)
    for (const auto& e : A.mult.row(r)) mcols[e.col].push_back({r, e.value});
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < da; ++b)
        for (std::size_t y = 0; y < n; ++y) {
          std::size_t col = (a * n + x) * d + (b * n + y);
          for (const auto& t : H.coproduct(x)) {
            const Matrix& act = A.module.act[t.a];
            for (std::size_t bb = 0; bb < da; ++bb) {
              Scalar cb = act.at(bb, b);
              if (cb.is_zero()) continue;
              for (const auto& [k, cm] : mcols[a * da + bb])
                for (const auto& [z, ch] : H.product(t.b, y)) mb.add(k * n + z, col, t.c * cb * cm * ch);
            }
          }
        }
  Matrix unit(f, d, 1);
  for (std::size_t a = 0; a < da; ++a)
    for (const auto& [x, c] : H.unit_vec()) unit.add(a * n + x, 0, A.unit.at(a, 0) * c);
  return {f, d, std::move(mb).build(), std::move(unit)};
}

namespace {

// Generalized middle swap (a,b,c,d) -> (a,c,b,d) for dims (p,q,r,s).
Matrix swap_middle(const Field& f, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  std::size_t N = p * q * r * s;
  MatrixBuilder mb(f, N, N);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < s; ++d) mb.add(((a * r + c) * q + b) * s + d, ((a * q + b) * r + c) * s + d, f.one());
  return std::move(mb).build();
}

}  // namespace

ValidationReport validate_bicomodule_algebra(const BicomoduleAlgebra& A) {
  ValidationReport rep;
  rep.subject = "bicomodule algebra";
  rep.merge(validate_algebra(A.alg));
  const HopfAlgebra& H = *A.H;
  Field f = H.field();
  std::size_t n = H.dim(), d = A.dim();
  if (A.coact_l.rows() != n * d || A.coact_l.cols() != d) throw StructureError("left coaction has wrong shape");
  if (A.coact_r.rows() != d * n || A.coact_r.cols() != d) throw StructureError("right coaction has wrong shape");
  Matrix Ia = Matrix::identity(f, d), Ih = Matrix::identity(f, n);
  rep.add("left coaction coassociative", kron(H.comult(), Ia) * A.coact_l == kron(Ih, A.coact_l) * A.coact_l);
  rep.add("left coaction counital", kron(H.counit(), Ia) * A.coact_l == Ia);
  rep.add("right coaction coassociative", kron(A.coact_r, Ih) * A.coact_r == kron(Ia, H.comult()) * A.coact_r);
  rep.add("right coaction counital", kron(Ia, H.counit()) * A.coact_r == Ia);
  rep.add("coactions commute", kron(A.coact_l, Ih) * A.coact_r == kron(Ih, A.coact_r) * A.coact_l);
  // (H (x) A) algebra: product via middle swap.
  Matrix mHA = kron(H.mult(), A.alg.mult) * swap_middle(f, n, d, n, d);
  Matrix mAH = kron(A.alg.mult, H.mult()) * swap_middle(f, d, n, d, n);
  rep.add("left coaction is an algebra map",
          A.coact_l * A.alg.mult == mHA * kron(A.coact_l, A.coact_l) && A.coact_l * A.alg.unit == kron(H.unit(), A.alg.unit));
  rep.add("right coaction is an algebra map",
          A.coact_r * A.alg.mult == mAH * kron(A.coact_r, A.coact_r) && A.coact_r * A.alg.unit == kron(A.alg.unit, H.unit()));
  return rep;
}

BicomoduleAlgebra hopf_as_bicomodule_algebra(HopfPtr H) {
  Algebra alg{H->field(), H->dim(), H->mult(), H->unit()};
  return {H, alg, H->comult(), H->comult()};
}

ValidationReport validate_amodule(const Algebra& A, const AModule& M) {
  ValidationReport rep;
  rep.subject = "A-module";
  if (M.act.size() != A.dim) throw StructureError("A-module action has wrong number of matrices");
  Matrix unit(A.field, M.dim, M.dim);
  for (std::size_t i = 0; i < A.dim; ++i) unit += M.act[i] * A.unit.at(i, 0);
  rep.add("unit acts as identity", unit == Matrix::identity(A.field, M.dim));
  bool mult = true;
  for (std::size_t i = 0; i < A.dim && mult; ++i)
    for (std::size_t j = 0; j < A.dim && mult; ++j) {
      Matrix prod(A.field, M.dim, M.dim);
      for (std::size_t k = 0; k < A.dim; ++k) {
        Scalar c = A.mult.at(k, i * A.dim + j);
        if (!c.is_zero()) prod += M.act[k] * c;
      }
      mult = prod == M.act[i] * M.act[j];
    }
  rep.add("action is multiplicative", mult);
  return rep;
}

AModule regular_amodule(const Algebra& A) {
  AModule M{A.dim, {}};
  for (std::size_t i = 0; i < A.dim; ++i) M.act.push_back(A.mult.col_range(i * A.dim, (i + 1) * A.dim));
  return M;
}

AModule as_amodule(const HModule& M) { return {M.dim, M.act}; }

Matrix flip(const Field& f, std::size_t dv, std::size_t dw) {
  MatrixBuilder mb(f, dv * dw, dv * dw);
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t w = 0; w < dw; ++w) mb.add(w * dv + v, v * dw + w, f.one());
  return std::move(mb).build();
}

Matrix multiply_pair(const Matrix& mult, std::size_t dimA, std::size_t n, std::size_t k) {
  Field f = mult.field();
  if (k + 1 > n) throw std::out_of_range("multiply_pair position");
  std::vector<Matrix> parts{Matrix::identity(f, ipow(dimA, k)), mult, Matrix::identity(f, ipow(dimA, n - 1 - k))};
  return kron_all(parts);
}

Matrix insert_unit(const Matrix& unit, std::size_t dimA, std::size_t n, std::size_t k) {
  Field f = unit.field();
  if (k > n + 1) throw std::out_of_range("insert_unit position");
  std::vector<Matrix> parts{Matrix::identity(f, ipow(dimA, k)), unit, Matrix::identity(f, ipow(dimA, n + 1 - k))};
  return kron_all(parts);
}

KeyIso key_iso(const BicomoduleAlgebra& A, const HModule& V, Side side) {
  const HopfAlgebra& H = *A.H;
  Field f = H.field();
  std::size_t n = H.dim(), d = A.dim(), dv = V.dim;
  AModule reg = regular_amodule(A.alg);
  KeyIso k{Matrix(f, d * dv, d * dv), Matrix(f, d * dv, d * dv), {}, {}};
  MatrixBuilder phi(f, d * dv, d * dv), theta(f, d * dv, d * dv);
  if (side == Side::right) {
    // phi(a (x) v) = a_0 (x) a_1 v ; theta(a (x) v) = a_0 (x) S(a_1) v
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& e : A.coact_r.transpose().row(a)) {
        std::size_t a0 = e.col / n, h = e.col % n;
        phi.add_block(a0 * dv, a * dv, V.act[h], e.value);
        theta.add_block(a0 * dv, a * dv, V.action_of(H.S_of(h)), e.value);
      }
    for (std::size_t x = 0; x < d; ++x) {
      k.source_action.push_back(kron(reg.act[x], Matrix::identity(f, dv)));
      Matrix t(f, d * dv, d * dv);
      for (const auto& e : A.coact_r.transpose().row(x)) t += kron(reg.act[e.col / n], V.act[e.col % n]) * e.value;
      k.target_action.push_back(std::move(t));
    }
  } else {
    // phi(v (x) a) = a_{-1} v (x) a_0 ; theta(v (x) a) = S^{-1}(a_{-1}) v (x) a_0
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& e : A.coact_l.transpose().row(a)) {
        std::size_t h = e.col / d, a0 = e.col % d;
        Matrix unitvec(f, d, d);
        unitvec.set(a0, a, f.one());
        phi.add_block(0, 0, kron(V.act[h], unitvec), e.value);
        theta.add_block(0, 0, kron(V.action_of(H.S_inv_of(h)), unitvec), e.value);
      }
    for (std::size_t x = 0; x < d; ++x) {
      k.source_action.push_back(kron(Matrix::identity(f, dv), reg.act[x]));
      Matrix t(f, d * dv, d * dv);
      for (const auto& e : A.coact_l.transpose().row(x)) t += kron(V.act[e.col / d], reg.act[e.col % d]) * e.value;
      k.target_action.push_back(std::move(t));
    }
  }
  k.phi = std::move(phi).build();
  k.theta = std::move(theta).build();
  return k;
}

ValidationReport validate_key_iso(const KeyIso& k) {
  ValidationReport rep;
  rep.subject = "key isomorphism";
  Matrix I = Matrix::identity(k.phi.field(), k.phi.rows());
  rep.add("phi theta = id", k.phi * k.theta == I);
  rep.add("theta phi = id", k.theta * k.phi == I);
  bool lin = true;
  for (std::size_t x = 0; x < k.source_action.size(); ++x)
    lin = lin && k.phi * k.source_action[x] == k.target_action[x] * k.phi;
  rep.add("phi is A-linear", lin);
  return rep;
}

}  // namespace hopfcyc
