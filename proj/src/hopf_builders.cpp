#include "hopfcyc/hopf.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace hopfcyc {

namespace {

struct GroupInfo {
  std::size_t identity;
  std::vector<std::size_t> inverse;
};

GroupInfo check_group(const GroupTable& t) {
  std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : t) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw std::invalid_argument("group table is not associative");
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n; ++b) ok = ok && t[a][b] == b && t[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) throw std::invalid_argument("group table has no identity");
  GroupInfo info{e, std::vector<std::size_t>(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == e && t[b][a] == e) info.inverse[a] = b;
    if (info.inverse[a] == n) throw std::invalid_argument("group element without inverse");
  }
  return info;
}

std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

GroupTable cyclic_group_table(std::size_t n) {
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Elements of S3 as permutations of {0,1,2}, listed as images.
namespace {
const std::array<std::array<std::size_t, 3>, 6> kS3 = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
}

GroupTable symmetric_group3_table() {
  GroupTable t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t i = 0; i < 3; ++i) comp[i] = kS3[a][kS3[b][i]];
      for (std::size_t c = 0; c < 6; ++c)
        if (kS3[c] == comp) t[a][b] = c;
    }
  return t;
}

std::vector<std::string> symmetric_group3_labels() { return {"e", "(012)", "(021)", "(01)", "(12)", "(02)"}; }

HopfPtr build_trivial_hopf(Field field) {
  Matrix one = Matrix::identity(field, 1);
  return std::make_shared<HopfAlgebra>(field, std::vector<std::string>{"1"}, one, one, one, one, one, one);
}

HopfPtr build_group_algebra(const GroupTable& table, Field field, std::vector<std::string> labels) {
  GroupInfo info = check_group(table);
  std::size_t n = table.size();
  if (labels.empty()) labels = default_labels(n, "g");
  Scalar one = field.one();
  MatrixBuilder m(field, n, n * n), u(field, n, 1), d(field, n * n, n), e(field, 1, n), s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.add(table[a][b], a * n + b, one);
    d.add(a * n + a, a, one);
    e.add(0, a, one);
    s.add(info.inverse[a], a, one);
  }
  u.add(info.identity, 0, one);
  Matrix S = std::move(s).build();
  Matrix Sinv = S;
  return std::make_shared<HopfAlgebra>(field, std::move(labels), std::move(m).build(), std::move(u).build(),
                                       std::move(d).build(), std::move(e).build(), std::move(S), std::move(Sinv));
}

HopfPtr build_dual_group_algebra(const GroupTable& table, Field field, std::vector<std::string> labels) {
  GroupInfo info = check_group(table);
  std::size_t n = table.size();
  if (labels.empty()) labels = default_labels(n, "d");
  Scalar one = field.one();
  MatrixBuilder m(field, n, n * n), u(field, n, 1), d(field, n * n, n), e(field, 1, n), s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    m.add(a, a * n + a, one);
    u.add(a, 0, one);
    for (std::size_t b = 0; b < n; ++b) d.add(a * n + b, table[a][b], one);
    s.add(info.inverse[a], a, one);
  }
  e.add(0, info.identity, one);
  Matrix S = std::move(s).build();
  Matrix Sinv = S;
  return std::make_shared<HopfAlgebra>(field, std::move(labels), std::move(m).build(), std::move(u).build(),
                                       std::move(d).build(), std::move(e).build(), std::move(S), std::move(Sinv));
}

namespace {

using Poly = std::map<std::size_t, Scalar>;  // index -> coefficient

void accumulate(Poly& p, std::size_t k, const Scalar& v) {
  auto [it, fresh] = p.try_emplace(k, v);
  if (!fresh) it->second += v;
}

}  // namespace

HopfPtr build_taft(std::size_t N, const Scalar& q) {
  Field f = q.field();
  if (N < 2) throw std::invalid_argument("Taft algebra needs N >= 2");
  Scalar pw = f.one();
  for (std::size_t j = 1; j <= N; ++j) {
    pw *= q;
    if (j < N && pw.is_one()) throw std::invalid_argument("q is not a primitive N-th root of unity");
  }
  if (!pw.is_one()) throw std::invalid_argument("q is not an N-th root of unity");

  std::size_t n = N * N;
  auto idx = [N](std::size_t a, std::size_t b) { return b * N + a; };  // g^a x^b
  std::vector<Scalar> qpow(N * N, f.one());
  for (std::size_t k = 1; k < qpow.size(); ++k) qpow[k] = qpow[k - 1] * q;

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::string s;
      if (a > 0) s += a == 1 ? "g" : "g^" + std::to_string(a);
      if (b > 0) s += b == 1 ? "x" : "x^" + std::to_string(b);
      labels[idx(a, b)] = s.empty() ? "1" : s;
    }

  // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
  MatrixBuilder m(f, n, n * n);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c)
        for (std::size_t d = 0; d < N; ++d)
          if (b + d < N) m.add(idx((a + c) % N, b + d), idx(a, b) * n + idx(c, d), qpow[(b * c) % N]);
  Matrix mult = std::move(m).build();
  Matrix unit(f, n, 1);
  unit.set(idx(0, 0), 0, f.one());

  auto mul = [&](const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        std::size_t ga = i % N, xb = i / N, gc = j % N, xd = j / N;
        if (xb + xd < N) accumulate(out, idx((ga + gc) % N, xb + xd), a * b * qpow[(xb * gc) % N]);
      }
    return out;
  };
  // H (x) H elements encoded as index i*n + j.
  auto mul2 = [&](const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        Poly l = mul({{i / n, f.one()}}, {{j / n, f.one()}});
        Poly r = mul({{i % n, f.one()}}, {{j % n, f.one()}});
        for (const auto& [k1, c1] : l)
          for (const auto& [k2, c2] : r) accumulate(out, k1 * n + k2, a * b * c1 * c2);
      }
    return out;
  };

  Poly dg{{idx(1, 0) * n + idx(1, 0), f.one()}};
  Poly dx{{idx(0, 1) * n + idx(0, 0), f.one()}, {idx(1, 0) * n + idx(0, 1), f.one()}};
  Poly sg{{idx(N - 1, 0), f.one()}};
  Poly sx{{idx(N - 1, 1), -f.one()}};  // -g^{-1} x
  MatrixBuilder d(f, n * n, n), e(f, 1, n), s(f, n, n);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Poly D{{idx(0, 0) * n + idx(0, 0), f.one()}};
      Poly Sv{{idx(0, 0), f.one()}};
      for (std::size_t k = 0; k < a; ++k) D = mul2(D, dg);
      for (std::size_t k = 0; k < b; ++k) D = mul2(D, dx);
      // S is an anti-homomorphism: S(g^a x^b) = S(x)^b S(g)^a.
      for (std::size_t k = 0; k < b; ++k) Sv = mul(Sv, sx);
      for (std::size_t k = 0; k < a; ++k) Sv = mul(Sv, sg);
      std::size_t col = idx(a, b);
      for (const auto& [k, v] : D) d.add(k, col, v);
      for (const auto& [k, v] : Sv) s.add(k, col, v);
      if (b == 0) e.add(0, col, f.one());
    }
  return std::make_shared<HopfAlgebra>(f, std::move(labels), std::move(mult), std::move(unit), std::move(d).build(),
                                       std::move(e).build(), std::move(s).build());
}

HopfPtr build_taft(std::size_t N, std::uint64_t p, std::uint64_t q) {
  Field f = Field::prime(p);
  if ((p - 1) % N != 0) throw std::invalid_argument("Taft algebra needs N | p-1");
  return build_taft(N, f.from_int(static_cast<long long>(q % p)));
}

HopfPtr build_sweedler(Field field) {
  if (field.characteristic() == 2) throw std::invalid_argument("Sweedler algebra needs characteristic != 2");
  return build_taft(2, field.from_int(-1));
}

}  // namespace hopfcyc
