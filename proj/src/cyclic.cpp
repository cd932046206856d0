#include "hopfcyc/cyclic.hpp"

#include <limits>
#include <map>
#include <tuple>

namespace hopfcyc {

namespace {

Matrix eye(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t checked_pow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

void guard(std::size_t dim, std::size_t max_dim, const std::string& what) {
  if (dim > max_dim)
    throw GuardError(what + " has dimension " + std::to_string(dim) + ", above the bound " + std::to_string(max_dim));
}

Scalar sign(const Field& f, long k) { return (k % 2 == 0) ? f.one() : -f.one(); }

// (a_0, .., a_m) -> (a_1, .., a_m, e_p . a_0)
Matrix rotate_act(const HModule& A, std::size_t m, std::size_t p) {
  Field f = A.field();
  std::size_t rest = ipow(A.dim, m);
  return kron(eye(f, rest), A.act[p]) * flip(f, A.dim, rest);
}

// Sum_p kron(alpha_p, R_p^T): the map f -> alpha(h -> f o R_h) on vec(f).
Matrix twisted_precompose(const AydContramodule& M, const std::vector<Matrix>& R) {
  Field f = M.module.field();
  std::size_t dM = M.dim();
  Matrix out(f, dM * R.front().cols(), dM * R.front().rows());
  for (std::size_t p = 0; p < R.size(); ++p) {
    Matrix ap = M.alpha.col_range(p * dM, (p + 1) * dM);
    if (ap.is_zero()) continue;
    out += kron(ap, R[p].transpose());
  }
  return out;
}

Matrix precompose(std::size_t dM, const Matrix& P) { return kron(eye(P.field(), dM), P.transpose()); }

Matrix restrict_to(const KernelBasis& dst, const Matrix& full, const KernelBasis& src) {
  if (src.dim() == 0) return Matrix(full.field(), dst.dim(), 0);
  return dst.coordinates(full * src.basis);
}

Matrix powers_sum(const Matrix& lambda, std::size_t count) {
  Field f = lambda.field();
  Matrix acc = eye(f, lambda.rows()), term = acc;
  for (std::size_t i = 1; i < count; ++i) {
    term = lambda * term;
    acc += term;
  }
  return acc;
}

// Structure induced on the cokernel of a sub-contramodule inclusion.
AydContramodule quotient_contramodule(const AydContramodule& X, const Cokernel& q) {
  const HopfAlgebra& H = *X.H();
  AydContramodule out{HModule{X.H(), q.dim(), {}}, Matrix()};
  for (const auto& a : X.module.act) out.module.act.push_back(q.projection * a * q.section);
  out.alpha = q.projection * X.alpha * kron(eye(H.field(), H.dim()), q.section);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- ch(A)

ChernCharacter chern(const HModuleAlgebra& A, std::size_t n_max, std::size_t max_dim) {
  const HopfAlgebra& H = *A.module.H;
  Field f = H.field();
  std::size_t dA = A.dim();
  if (dA == 0) throw std::invalid_argument("algebra of dimension 0");
  guard(checked_mul(H.dim(), checked_pow(dA, n_max + 1)), max_dim, "Tr(A^(x)" + std::to_string(n_max + 1) + ")");

  ChernCharacter ch;
  ch.algebra = A;
  ch.n_max = n_max;
  for (std::size_t n = 0; n <= n_max; ++n) {
    HModule V = tensor_power(A.module, n + 1);
    ch.objects.push_back(tr_contra(V));
    ch.cyclic.push_back(tau_free(A.module, tensor_power(A.module, n)));
    std::vector<Matrix> faces;
    if (n >= 1) {
      for (std::size_t i = 0; i < n; ++i) faces.push_back(monad_map(H, multiply_pair(A.mult, dA, n, n - 1 - i)));
      faces.push_back(faces.front() * ch.cyclic[n]);
    }
    std::size_t dim = ch.objects[n].dim();
    Matrix b(f, n == 0 ? 0 : ch.objects[n - 1].dim(), dim);
    for (std::size_t i = 0; i < faces.size(); ++i) b += faces[i] * sign(f, static_cast<long>(i));
    ch.faces.push_back(std::move(faces));
    ch.b.push_back(std::move(b));
  }
  for (std::size_t n = 0; n < n_max; ++n) ch.extra.push_back(monad_map(H, insert_unit(A.unit, dA, n, n + 1)));
  for (std::size_t n = 0; n < n_max; ++n) {
    Matrix one_minus = eye(f, ch.objects[n + 1].dim()) - chain_lambda(ch, n + 1);
    ch.B.push_back(one_minus * ch.extra[n] * chain_norm(ch, n));
  }
  ch.B.push_back(Matrix(f, 0, ch.objects[n_max].dim()));

  for (std::size_t n = 0; n < n_max; ++n) {
    std::vector<Matrix> degs;
    for (std::size_t i = 0; i <= n; ++i) degs.push_back(monad_map(H, insert_unit(A.unit, dA, n, n - i)));
    ch.degeneracies.push_back(std::move(degs));
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    Matrix image(f, ch.objects[n].dim(), 0);
    if (n >= 1) image = Matrix::hstack(ch.degeneracies[n - 1]);
    ch.quotient.push_back(cokernel(image));
    ch.normalized.push_back(quotient_contramodule(ch.objects[n], ch.quotient[n]));
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Cokernel& q = ch.quotient[n];
    ch.normalized_b.push_back(n == 0 ? Matrix(f, 0, q.dim()) : ch.quotient[n - 1].projection * ch.b[n] * q.section);
    ch.normalized_B.push_back(n == n_max ? Matrix(f, 0, q.dim()) : ch.quotient[n + 1].projection * ch.B[n] * q.section);
  }
  return ch;
}

Matrix chain_lambda(const ChernCharacter& ch, std::size_t n) {
  return ch.cyclic.at(n) * sign(ch.field(), static_cast<long>(n));
}

Matrix chain_norm(const ChernCharacter& ch, std::size_t n) { return powers_sum(chain_lambda(ch, n), n + 1); }

MixedAydContramodule ChernCharacter::as_mixed() const {
  MixedAydContramodule M;
  M.lo = -static_cast<int>(n_max);
  for (std::size_t k = 0; k <= n_max; ++k) {
    std::size_t n = n_max - k;
    M.objects.push_back(normalized[n]);
    M.d.push_back(normalized_b[n]);
    M.h.push_back(normalized_B[n]);
  }
  return M;
}

ValidationReport validate_chern(const ChernCharacter& ch) {
  ValidationReport rep;
  rep.subject = "ch(A)";
  Field f = ch.field();
  std::size_t N = ch.n_max;
  bool contra = true, bmor = true, Bmor = true, simp = true, para = true, period = true;
  bool b2 = true, B2 = true, homotopy = true, degenerate = true;
  bool ncontra = true, nmor = true, nb2 = true, nhomotopy = true;
  for (std::size_t n = 0; n <= N; ++n) {
    const auto& X = ch.objects[n];
    contra = contra && validate_contramodule(X).passed();
    if (n >= 1) bmor = bmor && is_contramodule_morphism(X, ch.objects[n - 1], ch.b[n]);
    if (n < N) Bmor = Bmor && is_contramodule_morphism(X, ch.objects[n + 1], ch.B[n]);
    period = period && power(ch.cyclic[n], n + 1) == contra_sigma(X);
    // d_i d_j = d_{j-1} d_i for i < j
    if (n >= 2)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          simp = simp && ch.faces[n - 1][i] * ch.faces[n][j] == ch.faces[n - 1][j - 1] * ch.faces[n][i];
    // d_i t_n = t_{n-1} d_{i-1} for 1 <= i <= n
    if (n >= 1)
      for (std::size_t i = 1; i <= n; ++i)
        para = para && ch.faces[n][i] * ch.cyclic[n] == ch.cyclic[n - 1] * ch.faces[n][i - 1];
    if (n >= 2) b2 = b2 && (ch.b[n - 1] * ch.b[n]).is_zero();
    if (n + 1 < N) degenerate = degenerate && (ch.quotient[n + 2].projection * ch.B[n + 1] * ch.B[n]).is_zero();
    if (n < N) {
      Matrix lhs = ch.b[n + 1] * ch.B[n];
      if (n >= 1) lhs += ch.B[n - 1] * ch.b[n];
      homotopy = homotopy && lhs == eye(f, X.dim()) - contra_sigma(X);
    }
    // normalized chains
    const auto& Y = ch.normalized[n];
    ncontra = ncontra && validate_contramodule(Y).passed();
    if (n >= 1) nmor = nmor && is_contramodule_morphism(Y, ch.normalized[n - 1], ch.normalized_b[n]);
    if (n < N) nmor = nmor && is_contramodule_morphism(Y, ch.normalized[n + 1], ch.normalized_B[n]);
    if (n >= 2) nb2 = nb2 && (ch.normalized_b[n - 1] * ch.normalized_b[n]).is_zero();
    if (n + 1 < N) B2 = B2 && (ch.normalized_B[n + 1] * ch.normalized_B[n]).is_zero();
    if (n < N) {
      Matrix lhs = ch.normalized_b[n + 1] * ch.normalized_B[n];
      if (n >= 1) lhs += ch.normalized_B[n - 1] * ch.normalized_b[n];
      nhomotopy = nhomotopy && lhs == eye(f, Y.dim()) - contra_sigma(Y);
    }
  }
  rep.add("objects are aYD contramodules", contra);
  rep.add("b is a morphism", bmor);
  rep.add("B is a morphism", Bmor);
  rep.add("simplicial relations", simp);
  rep.add("paracyclic relations", para);
  rep.add("t^(n+1) = sigma", period);
  rep.add("b^2 = 0", b2);
  rep.add("bB + Bb = 1 - sigma", homotopy);
  rep.add("B^2 is degenerate", degenerate);
  rep.add("normalized: aYD contramodules", ncontra);
  rep.add("normalized: b and B are morphisms", nmor);
  rep.add("normalized: b^2 = 0", nb2);
  rep.add("normalized: B^2 = 0", B2);
  rep.add("normalized: bB + Bb = 1 - sigma", nhomotopy);
  return rep;
}

// ---------------------------------------------------------------- cochains

const CochainDegree& CocyclicComplex::at(int j, std::size_t n) const {
  if (j < lo() || j > hi() || n > n_max) throw std::out_of_range("cochain degree out of range");
  return pieces[static_cast<std::size_t>(j - lo())][n];
}

CocyclicComplex build_cocyclic(const HModuleAlgebra& A, const MixedAydContramodule& M, std::size_t n_max,
                               std::size_t max_dim) {
  Field f = A.module.field();
  std::size_t dA = A.dim(), nH = A.module.H->dim();
  if (dA == 0) throw std::invalid_argument("algebra of dimension 0");
  if (M.objects.empty()) throw std::invalid_argument("coefficient without objects");
  MixedComplexVec U = M.underlying();
  std::size_t K = M.objects.size();
  for (const auto& obj : M.objects)
    guard(checked_mul(checked_pow(dA, n_max + 1), obj.dim()), max_dim,
          "Hom(A^(x)" + std::to_string(n_max + 1) + ", M)");

  CocyclicComplex C;
  C.algebra = A;
  C.coefficient = M;
  C.n_max = n_max;
  std::vector<HModule> powers;
  for (std::size_t n = 0; n <= n_max; ++n) powers.push_back(tensor_power(A.module, n + 1));
  C.pieces.assign(K, std::vector<CochainDegree>(n_max + 1));
  for (std::size_t c = 0; c < K; ++c)
    for (std::size_t n = 0; n <= n_max; ++n) C.pieces[c][n].space = hom_H_space(powers[n], M.objects[c].module);

  for (std::size_t c = 0; c < K; ++c) {
    const AydContramodule& Mj = M.objects[c];
    std::size_t dM = Mj.dim();
    Matrix sig = contra_sigma(Mj);
    for (std::size_t n = 0; n <= n_max; ++n) {
      CochainDegree& P = C.pieces[c][n];
      std::size_t s = powers[n].dim;
      std::vector<Matrix> rot;
      for (std::size_t p = 0; p < nH; ++p) rot.push_back(rotate_act(A.module, n, p));
      P.cyclic = restrict_to(P.space, twisted_precompose(Mj, rot), P.space);
      P.sigma = restrict_to(P.space, kron(sig, eye(f, s)), P.space);
      P.d = c + 1 < K ? restrict_to(C.pieces[c + 1][n].space, kron(U.d[c], eye(f, s)), P.space)
                      : Matrix(f, 0, P.space.dim());
      P.h = c > 0 ? restrict_to(C.pieces[c - 1][n].space, kron(U.h[c], eye(f, s)), P.space)
                  : Matrix(f, 0, P.space.dim());
      if (n == n_max) {
        P.extra = Matrix(f, P.space.dim(), 0);
        continue;
      }
      const KernelBasis& next = C.pieces[c][n + 1].space;
      for (std::size_t i = 0; i <= n; ++i)
        P.cofaces.push_back(restrict_to(next, precompose(dM, multiply_pair(A.mult, dA, n + 1, n - i)), P.space));
      Matrix last = multiply_pair(A.mult, dA, n + 1, n);
      std::vector<Matrix> R;
      for (std::size_t p = 0; p < nH; ++p) R.push_back(last * rotate_act(A.module, n + 1, p));
      P.cofaces.push_back(restrict_to(next, twisted_precompose(Mj, R), P.space));
      for (std::size_t i = 0; i <= n; ++i)
        P.codegeneracies.push_back(restrict_to(P.space, precompose(dM, insert_unit(A.unit, dA, n, n - i)), next));
      P.extra = restrict_to(P.space, precompose(dM, insert_unit(A.unit, dA, n, n + 1)), next);
    }
  }
  return C;
}

Matrix operator_b(const CocyclicComplex& C, int j, std::size_t n) {
  const auto& P = C.at(j, n);
  if (P.cofaces.empty()) throw std::out_of_range("b beyond the truncation");
  Field f = C.field();
  Matrix out(f, C.dim(j, n + 1), C.dim(j, n));
  for (std::size_t i = 0; i < P.cofaces.size(); ++i) out += P.cofaces[i] * sign(f, static_cast<long>(i));
  return out;
}

Matrix operator_bprime(const CocyclicComplex& C, int j, std::size_t n) {
  const auto& P = C.at(j, n);
  if (P.cofaces.empty()) throw std::out_of_range("b' beyond the truncation");
  Field f = C.field();
  Matrix out(f, C.dim(j, n + 1), C.dim(j, n));
  for (std::size_t i = 0; i + 1 < P.cofaces.size(); ++i) out += P.cofaces[i] * sign(f, static_cast<long>(i));
  return out;
}

Matrix operator_lambda(const CocyclicComplex& C, int j, std::size_t n) {
  return C.at(j, n).cyclic * sign(C.field(), static_cast<long>(n));
}

Matrix operator_N(const CocyclicComplex& C, int j, std::size_t n) { return powers_sum(operator_lambda(C, j, n), n + 1); }

Matrix operator_B(const CocyclicComplex& C, int j, std::size_t n) {
  const auto& P = C.at(j, n);
  if (n >= C.n_max) throw std::out_of_range("B beyond the truncation");
  Matrix one_minus = eye(C.field(), C.dim(j, n + 1)) - operator_lambda(C, j, n + 1);
  return operator_N(C, j, n) * P.extra * one_minus;
}

ValidationReport validate_cocyclic(const CocyclicComplex& C) {
  ValidationReport rep;
  rep.subject = "cocyclic complex";
  Field f = C.field();
  std::size_t N = C.n_max;
  bool cofaces = true, codeg = true, mixed = true, para = true, parad = true, period = true;
  bool b2 = true, bp2 = true, B2 = true, homotopy = true, dcomm = true, hcomm = true;
  for (int j = C.lo(); j <= C.hi(); ++j) {
    for (std::size_t n = 0; n <= N; ++n) {
      const auto& P = C.at(j, n);
      period = period && power(P.cyclic, n + 1) == P.sigma;
      if (j < C.hi()) {
        const auto& Q = C.at(j + 1, n);
        dcomm = dcomm && Q.cyclic * P.d == P.d * P.cyclic && Q.sigma * P.d == P.d * P.sigma;
        if (n < N)
          for (std::size_t i = 0; i <= n + 1; ++i) dcomm = dcomm && Q.cofaces[i] * P.d == C.at(j, n + 1).d * P.cofaces[i];
      }
      if (j > C.lo()) {
        const auto& Q = C.at(j - 1, n);
        hcomm = hcomm && Q.cyclic * P.h == P.h * P.cyclic;
        if (n < N)
          for (std::size_t i = 0; i <= n + 1; ++i) hcomm = hcomm && Q.cofaces[i] * P.h == C.at(j, n + 1).h * P.cofaces[i];
      }
      if (n >= N) continue;
      const auto& Nx = C.at(j, n + 1);
      // tau_{n+1} delta_i = delta_{i-1} tau_n, tau_{n+1} delta_0 = delta_{n+1}
      for (std::size_t i = 1; i <= n + 1; ++i) para = para && Nx.cyclic * P.cofaces[i] == P.cofaces[i - 1] * P.cyclic;
      para = para && Nx.cyclic * P.cofaces[0] == P.cofaces[n + 1];
      // tau_n sigma_i = sigma_{i-1} tau_{n+1}, tau_n sigma_0 = sigma_n tau_{n+1}^2
      for (std::size_t i = 1; i <= n; ++i)
        parad = parad && P.cyclic * P.codegeneracies[i] == P.codegeneracies[i - 1] * Nx.cyclic;
      parad = parad && P.cyclic * P.codegeneracies[0] == P.codegeneracies[n] * Nx.cyclic * Nx.cyclic;
      // sigma_j delta_i
      for (std::size_t jj = 0; jj <= n; ++jj)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          Matrix lhs = P.codegeneracies[jj] * P.cofaces[i];
          if (i == jj || i == jj + 1) {
            mixed = mixed && lhs == eye(f, P.space.dim());
          } else if (n >= 1) {
            const auto& Pr = C.at(j, n - 1);
            if (i < jj) mixed = mixed && lhs == Pr.cofaces[i] * Pr.codegeneracies[jj - 1];
            else mixed = mixed && lhs == Pr.cofaces[i - 1] * Pr.codegeneracies[jj];
          }
        }
      if (n + 1 < N) {
        // delta_j delta_i = delta_i delta_{j-1}, i < j
        for (std::size_t jj = 1; jj <= n + 2; ++jj)
          for (std::size_t i = 0; i < jj; ++i)
            cofaces = cofaces && Nx.cofaces[jj] * P.cofaces[i] == Nx.cofaces[i] * P.cofaces[jj - 1];
        // sigma_j sigma_i = sigma_i sigma_{j+1}, i <= j
        for (std::size_t jj = 0; jj <= n; ++jj)
          for (std::size_t i = 0; i <= jj; ++i)
            codeg = codeg && P.codegeneracies[jj] * Nx.codegeneracies[i] == P.codegeneracies[i] * Nx.codegeneracies[jj + 1];
        b2 = b2 && (operator_b(C, j, n + 1) * operator_b(C, j, n)).is_zero();
        bp2 = bp2 && (operator_bprime(C, j, n + 1) * operator_bprime(C, j, n)).is_zero();
        // on normalized cochains, those killed by every codegeneracy
        KernelBasis normal = kernel_basis(Matrix::vstack(Nx.codegeneracies));
        B2 = B2 && (operator_B(C, j, n) * operator_B(C, j, n + 1) * normal.basis).is_zero();
      }
      Matrix lhs = operator_B(C, j, n) * operator_b(C, j, n);
      if (n >= 1) lhs += operator_b(C, j, n - 1) * operator_B(C, j, n - 1);
      homotopy = homotopy && lhs == eye(f, P.space.dim()) - P.sigma;
    }
  }
  rep.add("cosimplicial: cofaces", cofaces);
  rep.add("cosimplicial: codegeneracies", codeg);
  rep.add("cosimplicial: mixed", mixed);
  rep.add("paracocyclic: cofaces", para);
  rep.add("paracocyclic: codegeneracies", parad);
  rep.add("tau^(n+1) = sigma", period);
  rep.add("b^2 = 0", b2);
  rep.add("b'^2 = 0", bp2);
  rep.add("B^2 = 0 on normalized cochains", B2);
  rep.add("bB + Bb = 1 - sigma", homotopy);
  rep.add("d commutes with the structure", dcomm);
  rep.add("h commutes with the structure", hcomm);
  return rep;
}

Matrix induced_on_cochains(const CocyclicComplex& C, int j, const Matrix& X, std::size_t a, std::size_t b) {
  const HopfAlgebra& H = *C.algebra.module.H;
  std::size_t dA = C.algebra.dim(), sa = ipow(dA, a + 1), sb = ipow(dA, b + 1);
  Matrix Y = X * monad_unit(H, sa);
  std::vector<Matrix> R;
  for (std::size_t p = 0; p < H.dim(); ++p) {
    std::vector<std::size_t> rows(sb);
    for (std::size_t x = 0; x < sb; ++x) rows[x] = p * sb + x;
    R.push_back(Y.select_rows(rows));
  }
  const AydContramodule& Mj = C.coefficient.objects.at(static_cast<std::size_t>(j - C.lo()));
  return restrict_to(C.at(j, a).space, twisted_precompose(Mj, R), C.at(j, b).space);
}

ValidationReport check_tau_consistency(const ChernCharacter& ch, const CocyclicComplex& C) {
  ValidationReport rep;
  rep.subject = "chain and cochain operators";
  std::size_t N = std::min(ch.n_max, C.n_max);
  bool tau = true, faces = true, extra = true, b = true, B = true, dims = true;
  for (int j = C.lo(); j <= C.hi(); ++j) {
    const AydContramodule& Mj = C.coefficient.objects[static_cast<std::size_t>(j - C.lo())];
    for (std::size_t n = 0; n <= N; ++n) {
      const auto& P = C.at(j, n);
      tau = tau && induced_on_cochains(C, j, ch.cyclic[n], n, n) == P.cyclic;
      dims = dims && hom_ayd_space(ch.objects[n], Mj).dim() == P.space.dim();
      if (n == N) continue;
      for (std::size_t i = 0; i <= n + 1; ++i)
        faces = faces && induced_on_cochains(C, j, ch.faces[n + 1][i], n + 1, n) == P.cofaces[i];
      extra = extra && induced_on_cochains(C, j, ch.extra[n], n, n + 1) == P.extra;
      b = b && induced_on_cochains(C, j, ch.b[n + 1], n + 1, n) == operator_b(C, j, n);
      B = B && induced_on_cochains(C, j, ch.B[n], n, n + 1) == operator_B(C, j, n);
    }
  }
  rep.add("tau", tau);
  rep.add("faces", faces);
  rep.add("extra degeneracy", extra);
  rep.add("b", b);
  rep.add("B", B);
  rep.add("adjunction dimensions", dims);
  return rep;
}

// ---------------------------------------------------------------- Hom(ch(A), M)

MixedComplexVec hom_mixed_complex(const ChernCharacter& ch, const MixedAydContramodule& M) {
  Field f = ch.field();
  MixedComplexVec U = M.underlying();
  std::size_t K = M.objects.size(), N = ch.n_max;
  // pieces[c][n] = Hom_aYD(X_n, M^{lo+c})
  std::vector<std::vector<KernelBasis>> pieces(K);
  for (std::size_t c = 0; c < K; ++c)
    for (std::size_t n = 0; n <= N; ++n) pieces[c].push_back(hom_ayd_space(ch.normalized[n], M.objects[c]));

  MixedComplexVec X;
  X.field = f;
  X.lo = M.lo;
  int top = M.hi() + static_cast<int>(N);
  std::size_t D = static_cast<std::size_t>(top - X.lo + 1);
  // offset of piece (c, n) inside its degree lo + c + n
  std::vector<std::vector<std::size_t>> offset(K, std::vector<std::size_t>(N + 1));
  X.dims.assign(D, 0);
  for (std::size_t k = 0; k < D; ++k)
    for (std::size_t c = 0; c < K; ++c)
      if (k >= c && k - c <= N) {
        offset[c][k - c] = X.dims[k];
        X.dims[k] += pieces[c][k - c].dim();
      }
  for (std::size_t k = 0; k < D; ++k) {
    long deg = X.lo + static_cast<long>(k);
    MatrixBuilder d(f, k + 1 < D ? X.dims[k + 1] : 0, X.dims[k]);
    MatrixBuilder h(f, k > 0 ? X.dims[k - 1] : 0, X.dims[k]);
    Scalar minus_sign = -sign(f, deg);
    for (std::size_t c = 0; c < K; ++c) {
      if (k < c || k - c > N) continue;
      std::size_t n = k - c, col = offset[c][n];
      const KernelBasis& src = pieces[c][n];
      std::size_t dM = M.objects[c].dim(), dX = ch.normalized[n].dim();
      if (src.dim() == 0) continue;
      if (c + 1 < K)
        d.add_block(offset[c + 1][n], col, restrict_to(pieces[c + 1][n], kron(U.d[c], eye(f, dX)), src), f.one());
      if (n + 1 <= N)
        d.add_block(offset[c][n + 1], col,
                    restrict_to(pieces[c][n + 1], precompose(dM, ch.normalized_b[n + 1]), src), minus_sign);
      if (c > 0)
        h.add_block(offset[c - 1][n], col, restrict_to(pieces[c - 1][n], kron(U.h[c], eye(f, dX)), src), f.one());
      if (n >= 1)
        h.add_block(offset[c][n - 1], col, restrict_to(pieces[c][n - 1], precompose(dM, ch.normalized_B[n - 1]), src),
                    minus_sign);
    }
    X.d.push_back(std::move(d).build());
    X.h.push_back(std::move(h).build());
  }
  X.complete_through = M.lo + static_cast<int>(N) - 1;
  X.bounded_below = true;
  return X;
}

// ---------------------------------------------------------------- graded complexes

bool GradedComplex::squares_to_zero() const {
  for (std::size_t k = 0; k + 1 < D.size(); ++k) {
    if (D[k + 1].rows() != (k + 2 < dims.size() ? dims[k + 2] : 0) || D[k + 1].rows() == 0) continue;
    if (!(D[k + 1] * D[k]).is_zero()) return false;
  }
  return true;
}

DimTable GradedComplex::cohomology(int from, int to) const {
  if (from < lo || to >= hi()) throw std::out_of_range("cohomology window outside the computed complex");
  std::vector<std::size_t> ranks(dims.size(), 0);
  for (int t = std::max(lo, from - 1); t <= to; ++t) ranks[static_cast<std::size_t>(t - lo)] = rank(D[static_cast<std::size_t>(t - lo)]);
  DimTable out;
  for (int t = from; t <= to; ++t) {
    std::size_t k = static_cast<std::size_t>(t - lo);
    std::size_t below = k > 0 ? ranks[k - 1] : 0;
    if (ranks[k] + below > dims[k]) throw std::logic_error("differential does not square to zero");
    out.emplace_back(t, dims[k] - ranks[k] - below);
  }
  return out;
}

GradedComplex y_complex(const MixedComplexVec& X, int from, int to) {
  if (!X.bounded_below) throw std::invalid_argument("y-series needs a bounded below mixed complex");
  if (to > X.complete_through)
    throw std::out_of_range("degree " + std::to_string(to) + " needs the mixed complex beyond degree " +
                            std::to_string(X.complete_through));
  Field f = X.field;
  GradedComplex G;
  G.field = f;
  G.lo = from - 1;
  int top = to + 1;
  // Block m of T^t is X^{t-2m} y^m.
  auto blocks = [&](int t) {
    std::vector<std::pair<int, std::size_t>> out;  // (degree of X, offset)
    std::size_t off = 0;
    for (int g = t; g >= X.lo; g -= 2) {
      out.emplace_back(g, off);
      off += X.dim_at(g);
    }
    return std::make_pair(out, off);
  };
  for (int t = G.lo; t <= top; ++t) G.dims.push_back(blocks(t).second);
  for (int t = G.lo; t <= top; ++t) {
    auto [src, sdim] = blocks(t);
    if (t == top) {
      G.D.push_back(Matrix(f, 0, sdim));
      continue;
    }
    auto [dst, ddim] = blocks(t + 1);
    MatrixBuilder mb(f, ddim, sdim);
    for (std::size_t m = 0; m < src.size(); ++m) {
      auto [g, off] = src[m];
      std::size_t k = static_cast<std::size_t>(g - X.lo);
      if (X.dim_at(g) == 0) continue;
      // d: X^g y^m -> X^{g+1} y^m, block m of T^{t+1}
      if (g + 1 <= X.hi() && m < dst.size()) mb.add_block(dst[m].second, off, X.d[k], f.one());
      // -h: X^g y^m -> X^{g-1} y^{m+1}
      if (g - 1 >= X.lo && m + 1 < dst.size()) mb.add_block(dst[m + 1].second, off, X.h[k], -f.one());
    }
    G.D.push_back(std::move(mb).build());
  }
  return G;
}

DimTable y_cohomology(const MixedComplexVec& X, int from, int to) { return y_complex(X, from, to).cohomology(from, to); }

DimTable hopf_cyclic_cohomology(const HModuleAlgebra& A, const MixedAydContramodule& M, int from, int to,
                                const CyclicOptions& opt) {
  long need = static_cast<long>(to) + 1 - M.lo;
  std::size_t n_max = opt.n_max != 0 ? opt.n_max : static_cast<std::size_t>(std::max(1L, need));
  std::size_t biggest = 0;
  for (const auto& o : M.objects) biggest = std::max(biggest, o.dim());
  guard(checked_mul(checked_pow(A.dim(), n_max + 1), biggest), opt.max_dim, "Hom(A^(x)" + std::to_string(n_max + 1) + ", M)");
  ChernCharacter ch = chern(A, n_max, opt.max_dim);
  return y_cohomology(hom_mixed_complex(ch, M), from, to);
}

GradedComplex tsygan_complex(const HModuleAlgebra& A, const AydContramodule& M, int from, int to,
                             const CyclicOptions& opt) {
  if (!is_stable(M)) throw std::invalid_argument("Tsygan bicomplex needs a stable coefficient; use the tricomplex");
  Field f = A.module.field();
  std::size_t n_max = static_cast<std::size_t>(std::max(1, to + 1));
  if (opt.n_max > n_max) n_max = opt.n_max;
  CocyclicComplex C = build_cocyclic(A, concentrated(M, 0), n_max, opt.max_dim);
  std::vector<Matrix> b, bp, one_minus, norm;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Matrix lam = operator_lambda(C, 0, n);
    one_minus.push_back(eye(f, C.dim(0, n)) - lam);
    norm.push_back(powers_sum(lam, n + 1));
    if (n < n_max) {
      b.push_back(operator_b(C, 0, n));
      bp.push_back(operator_bprime(C, 0, n));
    }
  }
  GradedComplex G;
  G.field = f;
  G.lo = from - 1;
  int top = to + 1;
  // Degree t holds columns p = 0..t with C^{t-p}; offsets by increasing p.
  auto offsets = [&](int t) {
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (int p = 0; p <= t; ++p) {
      off.push_back(acc);
      acc += C.dim(0, static_cast<std::size_t>(t - p));
    }
    off.push_back(acc);
    return off;
  };
  for (int t = G.lo; t <= top; ++t) G.dims.push_back(t < 0 ? 0 : offsets(t).back());
  for (int t = G.lo; t <= top; ++t) {
    std::size_t sdim = t < 0 ? 0 : offsets(t).back();
    if (t == top || t + 1 < 0) {
      G.D.push_back(Matrix(f, t == top ? 0 : (t + 1 < 0 ? 0 : offsets(t + 1).back()), sdim));
      continue;
    }
    auto so = offsets(t), to_ = offsets(t + 1);
    MatrixBuilder mb(f, to_.back(), sdim);
    for (int p = 0; t >= 0 && p <= t; ++p) {
      std::size_t n = static_cast<std::size_t>(t - p), pp = static_cast<std::size_t>(p);
      // vertical: (p, n) -> (p, n+1)
      if (pp % 2 == 0) mb.add_block(to_[pp], so[pp], b[n], f.one());
      else mb.add_block(to_[pp], so[pp], bp[n], -f.one());
      // horizontal: (p, n) -> (p+1, n)
      mb.add_block(to_[pp + 1], so[pp], pp % 2 == 0 ? one_minus[n] : norm[n], f.one());
    }
    G.D.push_back(std::move(mb).build());
  }
  return G;
}

DimTable tsygan_bicomplex(const HModuleAlgebra& A, const AydContramodule& M, int from, int to,
                          const CyclicOptions& opt) {
  return tsygan_complex(A, M, from, to, opt).cohomology(from, to);
}

// ---------------------------------------------------------------- tricomplex

GradedComplex Tricomplex::total() const {
  GradedComplex G;
  G.field = field;
  G.lo = lo;
  G.dims = dims;
  for (std::size_t t = 0; t < dims.size(); ++t) G.D.push_back(delta[0][t] + delta[1][t] + delta[2][t] - delta[3][t]);
  return G;
}

Tricomplex build_tricomplex(const HModuleAlgebra& A, const MixedAydContramodule& M, int from, int to,
                            const CyclicOptions& opt) {
  Field f = A.module.field();
  long need = static_cast<long>(to) + 1 - M.lo;
  std::size_t n_max = static_cast<std::size_t>(std::max(1L, need));
  if (opt.n_max > n_max) n_max = opt.n_max;
  CocyclicComplex C = build_cocyclic(A, M, n_max, opt.max_dim);

  // Cached operators per (j, i).
  std::map<std::pair<int, std::size_t>, Matrix> b, bp, one_minus, norm;
  for (int j = C.lo(); j <= C.hi(); ++j)
    for (std::size_t i = 0; i <= n_max; ++i) {
      Matrix lam = operator_lambda(C, j, i);
      one_minus[{j, i}] = eye(f, C.dim(j, i)) - lam;
      norm[{j, i}] = powers_sum(lam, i + 1);
      if (i < n_max) {
        b[{j, i}] = operator_b(C, j, i);
        bp[{j, i}] = operator_bprime(C, j, i);
      }
    }

  Tricomplex T;
  T.field = f;
  T.lo = from - 1;
  int top = to + 1;
  using Key = std::tuple<std::size_t, int, std::size_t, int>;
  std::vector<std::map<Key, std::size_t>> index;
  for (int t = T.lo; t <= top; ++t) {
    std::vector<Tricomplex::Piece> ps;
    std::map<Key, std::size_t> idx;
    std::size_t off = 0;
    for (int j = C.lo(); j <= C.hi(); ++j)
      for (int l = 0; l <= 1; ++l)
        for (long k = 0;; ++k) {
          long i = static_cast<long>(t) - j - 2 * k - l;
          if (i < 0) break;
          std::size_t dim = C.dim(j, static_cast<std::size_t>(i));
          Tricomplex::Piece piece{static_cast<std::size_t>(i), j, static_cast<std::size_t>(k), l, off, dim};
          idx[{piece.i, j, piece.k, l}] = ps.size();
          ps.push_back(piece);
          off += dim;
        }
    T.pieces.push_back(std::move(ps));
    T.dims.push_back(off);
    index.push_back(std::move(idx));
  }
  for (int t = T.lo; t <= top; ++t) {
    std::size_t ti = static_cast<std::size_t>(t - T.lo);
    std::size_t rows = t == top ? 0 : T.dims[ti + 1];
    std::array<MatrixBuilder, 4> mb{MatrixBuilder(f, rows, T.dims[ti]), MatrixBuilder(f, rows, T.dims[ti]),
                                    MatrixBuilder(f, rows, T.dims[ti]), MatrixBuilder(f, rows, T.dims[ti])};
    if (t < top) {
      const auto& dst = index[ti + 1];
      auto target = [&](std::size_t i, int j, std::size_t k, int l) -> const Tricomplex::Piece* {
        auto it = dst.find({i, j, k, l});
        return it == dst.end() ? nullptr : &T.pieces[ti + 1][it->second];
      };
      for (const auto& P : T.pieces[ti]) {
        if (P.dim == 0) continue;
        const auto& Q = C.at(P.j, P.i);
        Scalar s = sign(f, static_cast<long>(P.i) + P.l);
        if (P.l == 0) {
          if (auto* q = target(P.i, P.j, P.k, 1)) mb[0].add_block(q->offset, P.offset, one_minus[{P.j, P.i}], f.one());
          if (auto* q = target(P.i + 1, P.j, P.k, 0)) mb[1].add_block(q->offset, P.offset, b[{P.j, P.i}], f.one());
        } else {
          if (auto* q = target(P.i, P.j, P.k + 1, 0)) mb[0].add_block(q->offset, P.offset, norm[{P.j, P.i}], f.one());
          if (auto* q = target(P.i + 1, P.j, P.k, 1)) mb[1].add_block(q->offset, P.offset, bp[{P.j, P.i}], -f.one());
        }
        if (P.j < C.hi())
          if (auto* q = target(P.i, P.j + 1, P.k, P.l)) mb[2].add_block(q->offset, P.offset, Q.d, s);
        if (P.j > C.lo())
          if (auto* q = target(P.i, P.j - 1, P.k + 1, P.l)) mb[3].add_block(q->offset, P.offset, Q.h, s);
      }
    }
    for (int r = 0; r < 4; ++r) T.delta[static_cast<std::size_t>(r)].push_back(std::move(mb[static_cast<std::size_t>(r)]).build());
  }
  return T;
}

ValidationReport validate_tricomplex(const Tricomplex& T) {
  ValidationReport rep;
  rep.subject = "tricomplex";
  GradedComplex G = T.total();
  bool dsq = true, rel = true;
  for (std::size_t t = 0; t + 2 < T.dims.size(); ++t) {
    dsq = dsq && (G.D[t + 1] * G.D[t]).is_zero();
    Matrix d1sq = T.delta[0][t + 1] * T.delta[0][t];
    Matrix comm = T.delta[2][t + 1] * T.delta[3][t] + T.delta[3][t + 1] * T.delta[2][t];
    rel = rel && d1sq == comm;
  }
  rep.add("D^2 = 0", dsq);
  rep.add("[delta_3, delta_4] = delta_1^2", rel);
  return rep;
}

DimTable tricomplex_cohomology(const HModuleAlgebra& A, const MixedAydContramodule& M, int from, int to,
                               const CyclicOptions& opt) {
  Tricomplex T = build_tricomplex(A, M, from, to, opt);
  return T.total().cohomology(from, to);
}

}  // namespace hopfcyc
