#include "hopfcyc/hopf.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hopfcyc {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.holds; });
}

std::vector<std::string> ValidationReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.holds) out.push_back(c.law);
  return out;
}

void ValidationReport::add(std::string law, bool holds, std::string detail) {
  checks.push_back({std::move(law), holds, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.law, c.holds, c.detail});
}

namespace {

SparseVec column_of(const Matrix& t, std::size_t j) {
  SparseVec out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const auto& r = t.row(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Matrix::Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) out.push_back({i, it->value});
  }
  return out;
}

std::vector<SparseVec> all_columns(const Matrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) cols[e.col].push_back({i, e.value});
  return cols;
}

void require_shape(const Matrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw StructureError(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
}

}  // namespace

HopfAlgebra::HopfAlgebra(Field field, std::vector<std::string> labels, Matrix mult, Matrix unit, Matrix comult,
                         Matrix counit, Matrix antipode, std::optional<Matrix> antipode_inv)
    : field_(field),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      S_(std::move(antipode)) {
  std::size_t n = labels_.size();
  if (n == 0) throw StructureError("Hopf algebra of dimension 0");
  for (const Matrix* m : {&mult_, &unit_, &comult_, &counit_, &S_})
    if (!(m->field() == field_)) throw StructureError("structure tensor over the wrong field");
  require_shape(mult_, n, n * n, "mult");
  require_shape(unit_, n, 1, "unit");
  require_shape(comult_, n * n, n, "comult");
  require_shape(counit_, 1, n, "counit");
  require_shape(S_, n, n, "antipode");
  if (antipode_inv) {
    require_shape(*antipode_inv, n, n, "antipode_inv");
    S_inv_ = std::move(*antipode_inv);
  } else {
    try {
      S_inv_ = inverse(S_);
    } catch (const std::domain_error&) {
      throw StructureError("antipode is not invertible and no antipode_inv was supplied");
    }
    s_inv_computed_ = true;
  }

  prod_ = all_columns(mult_);
  S_cols_ = all_columns(S_);
  S_inv_cols_ = all_columns(S_inv_);
  unit_vec_ = column_of(unit_, 0);
  eps_.assign(n, field_.zero());
  for (const auto& e : counit_.row(0)) eps_[e.col] = e.value;
  auto dcols = all_columns(comult_);
  cop_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [idx, c] : dcols[i]) cop_[i].push_back({idx / n, idx % n, c});
  cop3_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
    for (const auto& t : cop_[i])
      for (const auto& u : cop_[t.a]) {
        auto key = std::make_tuple(u.a, u.b, t.b);
        auto [it, fresh] = acc.try_emplace(key, field_.zero());
        it->second += u.c * t.c;
      }
    for (auto& [k, v] : acc)
      if (!v.is_zero()) cop3_[i].push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  }
}

SparseVec HopfAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : product(i, j)) {
        auto [it, fresh] = acc.try_emplace(k, field_.zero());
        it->second += a * b * c;
      }
  SparseVec out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back({k, v});
  return out;
}

SparseVec HopfAlgebra::apply_S(const SparseVec& x) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, a] : x)
    for (const auto& [k, c] : S_cols_[i]) {
      auto [it, fresh] = acc.try_emplace(k, field_.zero());
      it->second += a * c;
    }
  SparseVec out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back({k, v});
  return out;
}

SparseVec HopfAlgebra::basis(std::size_t i) const { return {{i, field_.one()}}; }

namespace {

// Permutation a(x)b(x)c(x)d -> a(x)c(x)b(x)d on (k^n)^{(x)4}.
Matrix middle_swap(const Field& f, std::size_t n) {
  MatrixBuilder mb(f, n * n * n * n, n * n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) mb.add(((a * n + c) * n + b) * n + d, ((a * n + b) * n + c) * n + d, f.one());
  return std::move(mb).build();
}

}  // namespace

ValidationReport validate_hopf(const HopfAlgebra& H) {
  ValidationReport rep;
  rep.subject = "Hopf algebra";
  Field f = H.field();
  std::size_t n = H.dim();
  Matrix I = Matrix::identity(f, n);
  const Matrix& m = H.mult();
  const Matrix& u = H.unit();
  const Matrix& D = H.comult();
  const Matrix& e = H.counit();

  rep.add("associativity", m * kron(m, I) == m * kron(I, m));
  rep.add("unitality", m * kron(u, I) == I && m * kron(I, u) == I);
  rep.add("coassociativity", kron(D, I) * D == kron(I, D) * D);
  rep.add("counitality", kron(e, I) * D == I && kron(I, e) * D == I);
  Matrix one = Matrix::identity(f, 1);
  bool delta_alg = D * m == kron(m, m) * (middle_swap(f, n) * kron(D, D)) && D * u == kron(u, u);
  rep.add("comult is an algebra map", delta_alg);
  rep.add("counit is an algebra map", e * m == kron(e, e) && e * u == one);
  Matrix ue = u * e;
  rep.add("antipode", m * kron(H.antipode(), I) * D == ue && m * kron(I, H.antipode()) * D == ue);
  rep.add("antipode inverse", H.antipode() * H.antipode_inv() == I && H.antipode_inv() * H.antipode() == I);
  return rep;
}

ValidationReport validate_hopf_map(const HopfMap& rho) {
  ValidationReport rep;
  rep.subject = "Hopf map";
  const HopfAlgebra& K = *rho.source;
  const HopfAlgebra& H = *rho.target;
  if (rho.matrix.rows() != H.dim() || rho.matrix.cols() != K.dim())
    throw StructureError("Hopf map matrix has the wrong shape");
  const Matrix& r = rho.matrix;
  rep.add("multiplicative", r * K.mult() == H.mult() * kron(r, r));
  rep.add("unital", r * K.unit() == H.unit());
  rep.add("comultiplicative", H.comult() * r == kron(r, r) * K.comult());
  rep.add("counital", H.counit() * r == K.counit());
  rep.add("commutes with antipode", r * K.antipode() == H.antipode() * r);
  return rep;
}

ValidationReport validate_algebra(const Algebra& A) {
  ValidationReport rep;
  rep.subject = "algebra";
  require_shape(A.mult, A.dim, A.dim * A.dim, "algebra mult");
  require_shape(A.unit, A.dim, 1, "algebra unit");
  Matrix I = Matrix::identity(A.field, A.dim);
  rep.add("associativity", A.mult * kron(A.mult, I) == A.mult * kron(I, A.mult));
  rep.add("unitality", A.mult * kron(A.unit, I) == I && A.mult * kron(I, A.unit) == I);
  return rep;
}

}  // namespace hopfcyc
