#include "hopfcyc/ayd.hpp"

#include <stdexcept>

namespace hopfcyc {

namespace {

// S(e_c) e_i e_a for all i, cached per (a, c).
std::vector<SparseVec> conjugates(const HopfAlgebra& H, std::size_t a, std::size_t c) {
  std::vector<SparseVec> out(H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i) out[i] = H.multiply(H.multiply(H.S_of(c), H.basis(i)), H.basis(a));
  return out;
}

Matrix eye(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

}  // namespace

HModule monad_on(const HModule& N) {
  const HopfAlgebra& H = *N.H;
  std::size_t n = H.dim(), dN = N.dim;
  HModule out{N.H, n * dN, {}};
  for (std::size_t t = 0; t < n; ++t) {
    MatrixBuilder mb(H.field(), n * dN, n * dN);
    for (const auto& term : H.coproduct3(t)) {
      auto conj = conjugates(H, term.a, term.c);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, y] : conj[i]) mb.add_block(i * dN, j * dN, N.act[term.b], term.coef * y);
    }
    out.act.push_back(std::move(mb).build());
  }
  return out;
}

AModule monad_on(const BicomoduleAlgebra& A, const AModule& N) {
  const HopfAlgebra& H = *A.H;
  std::size_t n = H.dim(), d = A.dim(), dN = N.dim;
  Matrix rT = A.coact_r.transpose();
  Matrix lT = A.coact_l.transpose();
  AModule out{n * dN, {}};
  for (std::size_t a = 0; a < d; ++a) {
    MatrixBuilder mb(H.field(), n * dN, n * dN);
    // (Delta_l (x) 1) Delta_r (a) = a_{-1} (x) a_0 (x) a_1
    for (const auto& er : rT.row(a)) {
      std::size_t a0 = er.col / n, h1 = er.col % n;
      for (const auto& el : lT.row(a0)) {
        std::size_t hm = el.col / d, a00 = el.col % d;
        auto conj = conjugates(H, hm, h1);
        for (std::size_t i = 0; i < n; ++i)
          for (const auto& [j, y] : conj[i]) mb.add_block(i * dN, j * dN, N.act[a00], er.value * el.value * y);
      }
    }
    out.act.push_back(std::move(mb).build());
  }
  return out;
}

Matrix monad_mult(const HopfAlgebra& H, std::size_t dimN) {
  std::size_t n = H.dim();
  MatrixBuilder mb(H.field(), n * dimN, n * n * dimN);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : H.coproduct(i))
      for (std::size_t a = 0; a < dimN; ++a) mb.add(i * dimN + a, (t.a * n + t.b) * dimN + a, t.c);
  return std::move(mb).build();
}

Matrix monad_unit(const HopfAlgebra& H, std::size_t dimN) {
  MatrixBuilder mb(H.field(), H.dim() * dimN, dimN);
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (std::size_t a = 0; a < dimN; ++a) mb.add(i * dimN + a, a, H.counit_of(i));
  return std::move(mb).build();
}

Matrix monad_sigma(const HModule& N) { return Matrix::vstack(N.act); }

Matrix monad_map(const HopfAlgebra& H, const Matrix& f) { return kron(eye(H.field(), H.dim()), f); }

ValidationReport validate_monad(const HModule& N) {
  ValidationReport rep;
  rep.subject = "monad";
  const HopfAlgebra& H = *N.H;
  Field f = H.field();
  std::size_t n = H.dim(), dN = N.dim;
  HModule TN = monad_on(N);
  HModule TTN = monad_on(TN);
  Matrix m = monad_mult(H, dN);
  Matrix mT = monad_mult(H, n * dN);
  Matrix u = monad_unit(H, dN);
  Matrix uT = monad_unit(H, n * dN);
  rep.merge(validate_module(TN), "A(N) ");
  rep.add("associativity", m * monad_map(H, m) == m * mT);
  rep.add("left unit law", m * uT == eye(f, n * dN));
  rep.add("right unit law", m * monad_map(H, u) == eye(f, n * dN));
  bool mlin = true, ulin = true;
  for (std::size_t t = 0; t < n; ++t) {
    mlin = mlin && m * TTN.act[t] == TN.act[t] * m;
    ulin = ulin && u * N.act[t] == TN.act[t] * u;
  }
  rep.add("product is H-linear", mlin);
  rep.add("unit is H-linear", ulin);
  rep.add("sigma is central", m * monad_sigma(TN) == m * monad_map(H, monad_sigma(N)));
  return rep;
}

namespace {

void check_alpha_shape(const Matrix& alpha, std::size_t dim, std::size_t n) {
  if (alpha.rows() != dim || alpha.cols() != n * dim) throw StructureError("contraaction has wrong shape");
}

}  // namespace

ValidationReport validate_contramodule(const AydContramodule& M) {
  ValidationReport rep;
  rep.subject = "aYD contramodule";
  const HopfAlgebra& H = *M.H();
  check_alpha_shape(M.alpha, M.dim(), H.dim());
  rep.merge(validate_module(M.module), "module: ");
  Field f = H.field();
  rep.add("unit law", M.alpha * monad_unit(H, M.dim()) == eye(f, M.dim()));
  rep.add("associativity", M.alpha * monad_map(H, M.alpha) == M.alpha * monad_mult(H, M.dim()));
  HModule T = monad_on(M.module);
  bool compat = true;
  for (std::size_t t = 0; t < H.dim() && compat; ++t) compat = M.alpha * T.act[t] == M.module.act[t] * M.alpha;
  rep.add("compatibility", compat);
  return rep;
}

ValidationReport validate_contramodule(const GeneralizedContramodule& M) {
  ValidationReport rep;
  rep.subject = "generalized aYD contramodule";
  const BicomoduleAlgebra& A = *M.A;
  const HopfAlgebra& H = *A.H;
  check_alpha_shape(M.alpha, M.module.dim, H.dim());
  rep.merge(validate_amodule(A.alg, M.module), "module: ");
  Field f = H.field();
  rep.add("unit law", M.alpha * monad_unit(H, M.module.dim) == eye(f, M.module.dim));
  rep.add("associativity", M.alpha * monad_map(H, M.alpha) == M.alpha * monad_mult(H, M.module.dim));
  AModule T = monad_on(A, M.module);
  bool compat = true;
  for (std::size_t a = 0; a < A.dim() && compat; ++a) compat = M.alpha * T.act[a] == M.module.act[a] * M.alpha;
  rep.add("compatibility", compat);
  return rep;
}

Matrix contra_sigma(const AydContramodule& M) { return M.alpha * monad_sigma(M.module); }

bool is_stable(const AydContramodule& M) { return contra_sigma(M).is_identity(); }

AydContramodule tr_contra(const HModule& V) { return {monad_on(V), monad_mult(*V.H, V.dim)}; }

AydContramodule evaluation_contramodule(const HModule& V, std::size_t index) {
  std::size_t n = V.H->dim();
  if (index >= n) throw std::out_of_range("evaluation index");
  MatrixBuilder mb(V.field(), V.dim, n * V.dim);
  for (std::size_t a = 0; a < V.dim; ++a) mb.add(a, index * V.dim + a, V.field().one());
  return {V, std::move(mb).build()};
}

AydContramodule direct_sum(const AydContramodule& M, const AydContramodule& N) {
  std::size_t n = M.H()->dim(), dm = M.dim(), dn = N.dim(), d = dm + dn;
  MatrixBuilder mb(M.module.field(), d, n * d);
  for (std::size_t a = 0; a < dm; ++a)
    for (const auto& e : M.alpha.row(a)) mb.add(a, (e.col / dm) * d + e.col % dm, e.value);
  for (std::size_t a = 0; a < dn; ++a)
    for (const auto& e : N.alpha.row(a)) mb.add(dm + a, (e.col / dn) * d + dm + e.col % dn, e.value);
  return {direct_sum(M.module, N.module), std::move(mb).build()};
}

Matrix contramodule_hom_constraints(const AydContramodule& M, const AydContramodule& N) {
  const HopfAlgebra& H = *M.H();
  Field f = H.field();
  std::size_t n = H.dim(), dM = M.dim(), dN = N.dim();
  Matrix act = intertwiner_constraints(M.module.act, N.module.act, dM, dN, f);
  // f alpha_M - alpha_N kron(I, f) = 0, as a map on vec f (index b*dM + x).
  MatrixBuilder lhs(f, dN * n * dM, dN * dM);
  lhs.add_block(0, 0, kron(eye(f, dN), M.alpha.transpose()), f.one());
  for (std::size_t a = 0; a < dN; ++a)
    for (const auto& e : N.alpha.row(a)) {
      std::size_t i = e.col / dN, b = e.col % dN;
      for (std::size_t x = 0; x < dM; ++x) lhs.add(a * (n * dM) + i * dM + x, b * dM + x, -e.value);
    }
  std::vector<Matrix> parts{act, std::move(lhs).build()};
  return Matrix::vstack(parts);
}

KernelBasis hom_ayd_space(const AydContramodule& M, const AydContramodule& N) {
  return kernel_basis(contramodule_hom_constraints(M, N));
}

bool is_contramodule_morphism(const AydContramodule& M, const AydContramodule& N, const Matrix& f) {
  const HopfAlgebra& H = *M.H();
  for (std::size_t t = 0; t < H.dim(); ++t)
    if (!(f * M.module.act[t] == N.module.act[t] * f)) return false;
  return f * M.alpha == N.alpha * monad_map(H, f);
}

Matrix tau_free(const HModule& V, const HModule& W) {
  const HopfAlgebra& H = *V.H;
  Field f = H.field();
  std::size_t n = H.dim(), dv = V.dim, dw = W.dim, d = dv * dw;
  Matrix fl = flip(f, dv, dw);
  std::vector<Matrix> twisted;
  for (std::size_t q = 0; q < n; ++q) twisted.push_back(kron(eye(f, dw), V.act[q]) * fl);
  MatrixBuilder mb(f, n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : H.coproduct(i)) mb.add_block(i * d, t.a * d, twisted[t.b], t.c);
  return std::move(mb).build();
}

std::size_t MixedComplexVec::dim_at(int deg) const {
  if (deg < lo || deg > hi()) return 0;
  return dims[static_cast<std::size_t>(deg - lo)];
}

void normalize_ends(MixedComplexVec& X) {
  std::size_t K = X.dims.size();
  if (X.d.size() != K || X.h.size() != K) throw StructureError("mixed complex needs one d and one h per degree");
  for (std::size_t k = 0; k < K; ++k) {
    std::size_t up = k + 1 < K ? X.dims[k + 1] : 0;
    std::size_t down = k > 0 ? X.dims[k - 1] : 0;
    if (X.d[k].rows() == 0 && X.d[k].cols() == 0) X.d[k] = Matrix(X.field, up, X.dims[k]);
    if (X.h[k].rows() == 0 && X.h[k].cols() == 0) X.h[k] = Matrix(X.field, down, X.dims[k]);
    if (X.d[k].rows() != up || X.d[k].cols() != X.dims[k]) throw StructureError("d has wrong shape in a mixed complex");
    if (X.h[k].rows() != down || X.h[k].cols() != X.dims[k]) throw StructureError("h has wrong shape in a mixed complex");
  }
}

MixedComplexVec mixed_complex(Field f, int lo, std::vector<std::size_t> dims, std::vector<Matrix> d, std::vector<Matrix> h) {
  MixedComplexVec X;
  X.field = f;
  X.lo = lo;
  X.dims = std::move(dims);
  if (d.empty()) d.assign(X.dims.size(), Matrix(f, 0, 0));
  if (h.empty()) h.assign(X.dims.size(), Matrix(f, 0, 0));
  X.d = std::move(d);
  X.h = std::move(h);
  X.complete_through = X.hi();
  normalize_ends(X);
  return X;
}

namespace {

// dh + hd at index k, for the underlying spaces of X.
Matrix anticommutator(const MixedComplexVec& X, std::size_t k) {
  std::size_t K = X.dims.size();
  Matrix out(X.field, X.dims[k], X.dims[k]);
  if (k > 0) out += X.d[k - 1] * X.h[k];
  if (k + 1 < K) out += X.h[k + 1] * X.d[k];
  return out;
}

bool squares_vanish(const std::vector<Matrix>& maps, int step) {
  std::size_t K = maps.size();
  for (std::size_t k = 0; k < K; ++k) {
    long next = static_cast<long>(k) + step;
    if (next < 0 || next >= static_cast<long>(K)) continue;
    if (!(maps[static_cast<std::size_t>(next)] * maps[k]).is_zero()) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_mixed_complex(const MixedComplexVec& X) {
  ValidationReport rep;
  rep.subject = "mixed complex";
  rep.add("d^2 = 0", squares_vanish(X.d, 1));
  rep.add("h^2 = 0", squares_vanish(X.h, -1));
  bool ok = true;
  for (std::size_t k = 0; k < X.dims.size(); ++k)
    if (X.lo + static_cast<int>(k) <= X.complete_through) ok = ok && anticommutator(X, k).is_zero();
  rep.add("dh + hd = 0", ok);
  return rep;
}

MixedComplexVec MixedAydContramodule::underlying() const {
  MixedComplexVec X;
  X.field = field();
  X.lo = lo;
  for (const auto& o : objects) X.dims.push_back(o.dim());
  X.d = d;
  X.h = h;
  X.complete_through = hi();
  normalize_ends(X);
  return X;
}

ValidationReport validate_mixed_contramodule(const MixedAydContramodule& M) {
  ValidationReport rep;
  rep.subject = "mixed aYD contramodule";
  if (M.objects.empty()) throw StructureError("mixed contramodule without objects");
  MixedComplexVec X = M.underlying();
  std::size_t K = M.objects.size();
  for (std::size_t k = 0; k < K; ++k)
    rep.merge(validate_contramodule(M.objects[k]), "degree " + std::to_string(M.lo + static_cast<int>(k)) + ": ");
  bool dm = true, hm = true;
  for (std::size_t k = 0; k < K; ++k) {
    if (k + 1 < K) dm = dm && is_contramodule_morphism(M.objects[k], M.objects[k + 1], X.d[k]);
    if (k > 0) hm = hm && is_contramodule_morphism(M.objects[k], M.objects[k - 1], X.h[k]);
  }
  rep.add("d is a morphism", dm);
  rep.add("h is a morphism", hm);
  rep.add("d^2 = 0", squares_vanish(X.d, 1));
  rep.add("h^2 = 0", squares_vanish(X.h, -1));
  bool homotopy = true;
  for (std::size_t k = 0; k < K; ++k)
    homotopy = homotopy && anticommutator(X, k) == eye(X.field, X.dims[k]) - contra_sigma(M.objects[k]);
  rep.add("dh + hd = 1 - sigma", homotopy);
  return rep;
}

MixedAydContramodule concentrated(const AydContramodule& M, int degree) {
  Field f = M.module.field();
  return {degree, {M}, {Matrix(f, 0, M.dim())}, {Matrix(f, 0, M.dim())}};
}

MixedAydContramodule sigma_cone(const AydContramodule& X, int lo) {
  Field f = X.module.field();
  std::size_t d = X.dim();
  Matrix one_minus = eye(f, d) - contra_sigma(X);
  return {lo, {X, X}, {one_minus, Matrix(f, 0, d)}, {Matrix(f, 0, d), eye(f, d)}};
}

MixedAydContramodule shift(const MixedAydContramodule& M, int by) {
  MixedAydContramodule out = M;
  out.lo += by;
  return out;
}

std::size_t mixed_hom_dim(const MixedComplexVec& X, const MixedComplexVec& Y, const std::vector<Matrix>& extra) {
  Field f = X.field;
  // Unknown blocks f^k for degrees present in both.
  int lo = std::max(X.lo, Y.lo), hi = std::min(X.hi(), Y.hi());
  std::vector<std::size_t> offset;
  std::size_t cols = 0;
  auto var = [&](int deg) -> std::ptrdiff_t {
    if (deg < lo || deg > hi) return -1;
    return static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(deg - lo)]);
  };
  for (int deg = lo; deg <= hi; ++deg) {
    offset.push_back(cols);
    cols += X.dim_at(deg) * Y.dim_at(deg);
  }
  if (cols == 0) return 0;
  std::vector<Matrix> blocks;
  auto block_row = [&](std::size_t rows) { return Matrix(f, rows, cols); };
  for (int deg = X.lo; deg <= X.hi(); ++deg) {
    std::size_t xi = X.dim_at(deg);
    std::size_t kx = static_cast<std::size_t>(deg - X.lo);
    std::ptrdiff_t vd = var(deg);
    // f^{deg+1} d_X - d_Y f^{deg} (and the same with h), as maps X^deg -> Y^{deg +- 1}.
    for (int step : {+1, -1}) {
      int tgt = deg + step;
      std::size_t yt = Y.dim_at(tgt);
      if (yt == 0 || xi == 0) continue;
      Matrix row = block_row(yt * xi);
      if (vd >= 0 && Y.dim_at(deg) > 0) {
        std::size_t ky = static_cast<std::size_t>(deg - Y.lo);
        const Matrix& dY = step > 0 ? Y.d[ky] : Y.h[ky];
        row.add_block(0, static_cast<std::size_t>(vd), kron(dY, eye(f, xi)), -f.one());
      }
      std::ptrdiff_t vt = var(tgt);
      if (vt >= 0 && X.dim_at(tgt) > 0) {
        const Matrix& dX = step > 0 ? X.d[kx] : X.h[kx];
        row.add_block(0, static_cast<std::size_t>(vt), kron(eye(f, yt), dX.transpose()), f.one());
      }
      blocks.push_back(std::move(row));
    }
    if (vd >= 0 && kx < extra.size() && extra[kx].rows() > 0) {
      Matrix row = block_row(extra[kx].rows());
      row.add_block(0, static_cast<std::size_t>(vd), extra[kx], f.one());
      blocks.push_back(std::move(row));
    }
  }
  if (blocks.empty()) return cols;
  return solve_dim_hom(Matrix::vstack(blocks));
}

std::size_t hom_mixed_ayd_dim(const MixedAydContramodule& M, const MixedAydContramodule& N) {
  std::vector<Matrix> extra;
  for (std::size_t k = 0; k < M.objects.size(); ++k) {
    int deg = M.lo + static_cast<int>(k);
    if (deg < N.lo || deg > N.hi()) {
      extra.push_back(Matrix(M.field(), 0, 0));
      continue;
    }
    extra.push_back(contramodule_hom_constraints(M.objects[k], N.objects[static_cast<std::size_t>(deg - N.lo)]));
  }
  return mixed_hom_dim(M.underlying(), N.underlying(), extra);
}

// Comodule side.

Matrix module_sigma(const AydModule& V) {
  const HopfAlgebra& H = *V.module.H;
  std::size_t n = H.dim(), d = V.dim();
  Matrix out(H.field(), d, d);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> rows;
    for (std::size_t m0 = 0; m0 < d; ++m0) rows.push_back(m0 * n + k);
    out += V.module.act[k] * V.comodule.coaction.select_rows(rows);
  }
  return out;
}

namespace {

// z -> a z S(c) on H.
Matrix sandwich(const HopfAlgebra& H, std::size_t a, std::size_t c) {
  MatrixBuilder mb(H.field(), H.dim(), H.dim());
  for (std::size_t z = 0; z < H.dim(); ++z)
    for (const auto& [k, v] : H.multiply(H.multiply(H.basis(a), H.basis(z)), H.S_of(c))) mb.add(k, z, v);
  return std::move(mb).build();
}

}  // namespace

ValidationReport validate_ayd_module(const AydModule& V) {
  ValidationReport rep;
  rep.subject = "aYD module";
  rep.merge(validate_module(V.module), "module: ");
  rep.merge(validate_comodule(V.comodule), "comodule: ");
  const HopfAlgebra& H = *V.module.H;
  bool ok = true;
  for (std::size_t t = 0; t < H.dim() && ok; ++t) {
    Matrix rhs(H.field(), V.dim() * H.dim(), V.dim());
    for (const auto& term : H.coproduct3(t))
      rhs += kron(V.module.act[term.b], sandwich(H, term.c, term.a)) * V.comodule.coaction * term.coef;
    ok = V.comodule.coaction * V.module.act[t] == rhs;
  }
  rep.add("aYD condition", ok);
  return rep;
}

bool is_stable_module(const AydModule& V) { return module_sigma(V).is_identity(); }

HComodule comodule_monad_on(const HComodule& T) {
  const HopfAlgebra& H = *T.H;
  std::size_t n = H.dim(), dT = T.dim;
  Matrix cT = T.coaction.transpose();
  MatrixBuilder mb(H.field(), n * dT * n, n * dT);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& term : H.coproduct3(x))
      for (std::size_t t = 0; t < dT; ++t)
        for (const auto& e : cT.row(t)) {
          std::size_t t0 = e.col / n, t1 = e.col % n;
          SparseVec z = H.multiply(H.multiply(H.basis(term.c), H.basis(t1)), H.S_of(term.a));
          for (const auto& [k, v] : z) mb.add((term.b * dT + t0) * n + k, x * dT + t, term.coef * e.value * v);
        }
  return {T.H, n * dT, std::move(mb).build()};
}

AydModule comodule_monad(const HComodule& T) {
  HModule reg = regular_module(T.H);
  HModule M{T.H, T.H->dim() * T.dim, {}};
  for (const auto& a : reg.act) M.act.push_back(kron(a, eye(T.H->field(), T.dim)));
  return {std::move(M), comodule_monad_on(T)};
}

Matrix comodule_monad_mult(const HopfAlgebra& H, std::size_t dimT) { return kron(H.mult(), eye(H.field(), dimT)); }

Matrix comodule_monad_unit(const HopfAlgebra& H, std::size_t dimT) { return kron(H.unit(), eye(H.field(), dimT)); }

Matrix comodule_monad_sigma(const HComodule& T) {
  std::size_t n = T.H->dim();
  MatrixBuilder mb(T.H->field(), n * T.dim, T.dim);
  for (std::size_t r = 0; r < T.coaction.rows(); ++r)
    for (const auto& e : T.coaction.row(r)) mb.add((r % n) * T.dim + r / n, e.col, e.value);
  return std::move(mb).build();
}

ValidationReport validate_comodule_monad(const HComodule& T) {
  ValidationReport rep;
  rep.subject = "comodule monad";
  const HopfAlgebra& H = *T.H;
  Field f = H.field();
  std::size_t n = H.dim(), dT = T.dim;
  HComodule A1 = comodule_monad_on(T);
  HComodule A2 = comodule_monad_on(A1);
  Matrix m = comodule_monad_mult(H, dT), mA = comodule_monad_mult(H, n * dT);
  Matrix u = comodule_monad_unit(H, dT), uA = comodule_monad_unit(H, n * dT);
  Matrix s = comodule_monad_sigma(T), sA = comodule_monad_sigma(A1);
  Matrix Ih = eye(f, n);
  rep.merge(validate_comodule(A1), "A(T) ");
  rep.add("associativity", m * kron(Ih, m) == m * mA);
  rep.add("left unit law", m * uA == eye(f, n * dT));
  rep.add("right unit law", m * kron(Ih, u) == eye(f, n * dT));
  rep.add("product is a comodule map", A1.coaction * m == kron(m, Ih) * A2.coaction);
  rep.add("unit is a comodule map", A1.coaction * u == kron(u, Ih) * T.coaction);
  rep.add("sigma is a comodule map", A1.coaction * s == kron(s, Ih) * T.coaction);
  rep.add("sigma is central", m * sA == m * kron(Ih, s));
  return rep;
}

ValidationReport validate_mixed_ayd_module(const MixedAydModule& M) {
  ValidationReport rep;
  rep.subject = "mixed aYD module";
  if (M.objects.empty()) throw StructureError("mixed module without objects");
  Field f = M.objects.front().module.field();
  MixedComplexVec X;
  X.field = f;
  X.lo = M.lo;
  for (const auto& o : M.objects) X.dims.push_back(o.dim());
  X.d = M.d;
  X.h = M.h;
  normalize_ends(X);
  std::size_t K = M.objects.size();
  for (std::size_t k = 0; k < K; ++k)
    rep.merge(validate_ayd_module(M.objects[k]), "degree " + std::to_string(M.lo + static_cast<int>(k)) + ": ");
  auto is_map = [&](const AydModule& a, const AydModule& b, const Matrix& g) {
    const HopfAlgebra& H = *a.module.H;
    for (std::size_t t = 0; t < H.dim(); ++t)
      if (!(g * a.module.act[t] == b.module.act[t] * g)) return false;
    return b.comodule.coaction * g == kron(g, eye(f, H.dim())) * a.comodule.coaction;
  };
  bool dm = true, hm = true;
  for (std::size_t k = 0; k < K; ++k) {
    if (k + 1 < K) dm = dm && is_map(M.objects[k], M.objects[k + 1], X.d[k]);
    if (k > 0) hm = hm && is_map(M.objects[k], M.objects[k - 1], X.h[k]);
  }
  rep.add("d is a morphism", dm);
  rep.add("h is a morphism", hm);
  rep.add("d^2 = 0", squares_vanish(X.d, 1));
  rep.add("h^2 = 0", squares_vanish(X.h, -1));
  bool homotopy = true;
  for (std::size_t k = 0; k < K; ++k)
    homotopy = homotopy && anticommutator(X, k) == eye(f, X.dims[k]) - module_sigma(M.objects[k]);
  rep.add("dh + hd = 1 - sigma", homotopy);
  return rep;
}

}  // namespace hopfcyc
