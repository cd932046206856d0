#include "hopfcyc/document.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace hopfcyc {

using json = nlohmann::ordered_json;

namespace {

using Triple = std::tuple<std::size_t, std::size_t, Scalar>;

std::vector<Triple> entries(const Matrix& m) {
  std::vector<Triple> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) out.emplace_back(r, e.col, e.value);
  return out;
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw DocumentError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(where, std::string("missing key \"") + key + "\"");
  return *it;
}

const json& require_array(const json& j, const char* key, const std::string& where) {
  const json& a = require(j, key, where);
  if (!a.is_array()) throw DocumentError(where + "/" + key, "expected an array");
  return a;
}

std::size_t get_index(const json& e, const char* key, std::size_t bound, const std::string& where) {
  const json& v = require(e, key, where);
  if (!v.is_number_unsigned()) throw DocumentError(where + "/" + key, "expected a non-negative integer");
  auto x = v.get<std::size_t>();
  if (x >= bound)
    throw DocumentError(where + "/" + key, "index " + std::to_string(x) + " out of range [0, " +
                                               std::to_string(bound) + ")");
  return x;
}

std::size_t get_size(const json& j, const char* key, const std::string& where) {
  return get_index(j, key, std::size_t{1} << 20, where);
}

int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) throw DocumentError(where + "/" + key, "expected an integer");
  return v.get<int>();
}

Scalar get_scalar(const json& e, const Field& f, const std::string& where) {
  const json& v = require(e, "c", where);
  if (!v.is_string()) throw DocumentError(where + "/c", "scalars must be strings such as \"3\" or \"-1/2\"");
  try {
    return f.parse(v.get<std::string>());
  } catch (const std::exception& ex) {
    throw DocumentError(where + "/c", ex.what());
  }
}

// Reads a sparse list whose entries carry the index keys `keys` (with bounds)
// and a scalar "c"; place(indices) gives (row, col). Repeated positions add up.
template <std::size_t K, class Place>
Matrix read_sparse(const json& arr, const std::string& where, const Field& f, std::size_t rows, std::size_t cols,
                   const std::array<const char*, K>& keys, const std::array<std::size_t, K>& bounds, Place place) {
  if (!arr.is_array()) throw DocumentError(where, "expected an array");
  MatrixBuilder mb(f, rows, cols);
  for (std::size_t t = 0; t < arr.size(); ++t) {
    std::string w = where + "/" + std::to_string(t);
    std::array<std::size_t, K> idx{};
    for (std::size_t k = 0; k < K; ++k) idx[k] = get_index(arr[t], keys[k], bounds[k], w);
    auto [r, c] = place(idx);
    mb.add(r, c, get_scalar(arr[t], f, w));
  }
  return std::move(mb).build();
}

template <std::size_t K, class Key>
json write_sparse(const Matrix& m, const std::array<const char*, K>& keys, Key key) {
  std::vector<std::pair<std::array<std::size_t, K>, Scalar>> items;
  for (auto& [r, c, v] : entries(m)) items.emplace_back(key(r, c), v);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (const auto& [idx, v] : items) {
    json e = json::object();
    for (std::size_t k = 0; k < K; ++k) e[keys[k]] = idx[k];
    e["c"] = v.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

Field field_from_json(const json& j) {
  const json& kind = require(j, "kind", "/field");
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    std::size_t p = get_index(j, "p", std::size_t{1} << 31, "/field");
    try {
      return Field::prime(p);
    } catch (const std::exception& ex) {
      throw DocumentError("/field/p", ex.what());
    }
  }
  throw DocumentError("/field/kind", "expected \"Q\" or \"Fp\"");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

Matrix read_mult(const json& j, const std::string& w, const Field& f, std::size_t n) {
  return read_sparse<3>(j, w, f, n, n * n, {"i", "j", "k"}, {n, n, n},
                        [n](auto x) { return std::pair{x[2], x[0] * n + x[1]}; });
}
json write_mult(const Matrix& m, std::size_t n) {
  return write_sparse<3>(m, {"i", "j", "k"}, [n](std::size_t r, std::size_t c) {
    return std::array<std::size_t, 3>{c / n, c % n, r};
  });
}
Matrix read_unit(const json& j, const std::string& w, const Field& f, std::size_t n) {
  return read_sparse<1>(j, w, f, n, 1, {"k"}, {n}, [](auto x) { return std::pair{x[0], std::size_t{0}}; });
}
json write_unit(const Matrix& m) {
  return write_sparse<1>(m, {"k"}, [](std::size_t r, std::size_t) { return std::array<std::size_t, 1>{r}; });
}
// act[h](i, j) = c, i.e. e_h . v_j has coefficient c on v_i.
std::vector<Matrix> read_action(const json& j, const std::string& w, const Field& f, std::size_t n, std::size_t d) {
  Matrix stacked = read_sparse<3>(j, w, f, n * d, d, {"h", "i", "j"}, {n, d, d},
                                  [d](auto x) { return std::pair{x[0] * d + x[1], x[2]}; });
  std::vector<Matrix> out;
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<std::size_t> rows(d);
    for (std::size_t i = 0; i < d; ++i) rows[i] = h * d + i;
    out.push_back(stacked.select_rows(rows));
  }
  return out;
}
json write_action(const std::vector<Matrix>& act) {
  std::size_t d = act.empty() ? 0 : act.front().rows();
  Matrix stacked = Matrix::vstack(act);
  if (act.empty()) return json::array();
  return write_sparse<3>(stacked, {"h", "i", "j"}, [d](std::size_t r, std::size_t c) {
    return std::array<std::size_t, 3>{r / d, r % d, c};
  });
}

HModule read_module(const json& j, const std::string& w, HopfPtr H, std::size_t d) {
  return HModule{H, d, read_action(require(j, "action", w), w + "/action", H->field(), H->dim(), d)};
}

AydContramodule read_contra(const json& j, const std::string& w, HopfPtr H) {
  std::size_t d = get_size(j, "dim", w), n = H->dim();
  HModule m = read_module(j, w, H, d);
  // alpha(delta_h (x) m_j) has coefficient c on m_i.
  Matrix alpha = read_sparse<3>(require(j, "contraaction", w), w + "/contraaction", H->field(), d, n * d,
                                {"h", "j", "i"}, {n, d, d}, [d](auto x) { return std::pair{x[2], x[0] * d + x[1]}; });
  return {std::move(m), std::move(alpha)};
}

AydModule read_aydmodule(const json& j, const std::string& w, HopfPtr H) {
  std::size_t d = get_size(j, "dim", w), n = H->dim();
  HModule m = read_module(j, w, H, d);
  // coaction(m_i) has coefficient c on m_j (x) e_h.
  Matrix co = read_sparse<3>(require(j, "coaction", w), w + "/coaction", H->field(), d * n, d, {"i", "j", "h"},
                             {d, d, n}, [n](auto x) { return std::pair{x[1] * n + x[2], x[0]}; });
  return {std::move(m), HComodule{H, d, std::move(co)}};
}

json write_object_common(int degree, std::size_t dim, const std::vector<Matrix>& act) {
  return json{{"degree", degree}, {"dim", dim}, {"action", write_action(act)}};
}

// d and h lists: {"degree": source degree, "entries": [{"i": row, "j": col, "c"}]}.
std::vector<Matrix> read_maps(const json& j, const char* key, const std::string& w, const Field& f, int lo,
                              const std::vector<std::size_t>& dims, int step) {
  std::size_t K = dims.size();
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < K; ++k) {
    bool inside = step > 0 ? k + 1 < K : k > 0;
    out.emplace_back(f, inside ? dims[k + step] : 0, dims[k]);
  }
  auto it = j.find(key);
  if (it == j.end()) return out;
  std::string wk = w + "/" + key;
  if (!it->is_array()) throw DocumentError(wk, "expected an array");
  for (std::size_t t = 0; t < it->size(); ++t) {
    std::string we = wk + "/" + std::to_string(t);
    int deg = get_int((*it)[t], "degree", we);
    int k = deg - lo;
    if (k < 0 || k >= static_cast<int>(K)) throw DocumentError(we + "/degree", "degree outside the complex");
    std::size_t r = out[k].rows(), c = out[k].cols();
    if (r == 0 && (step > 0 ? static_cast<std::size_t>(k) + 1 == K : k == 0))
      throw DocumentError(we + "/degree", "no target degree for this map");
    out[k] = out[k] + read_sparse<2>(require_array((*it)[t], "entries", we), we + "/entries", f, r, c, {"i", "j"},
                                     {r, c}, [](auto x) { return std::pair{x[0], x[1]}; });
  }
  return out;
}

json write_maps(const std::vector<Matrix>& maps, int lo) {
  json out = json::array();
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].is_zero()) continue;
    out.push_back(json{{"degree", lo + static_cast<int>(k)},
                       {"entries", write_sparse<2>(maps[k], {"i", "j"}, [](std::size_t r, std::size_t c) {
                          return std::array<std::size_t, 2>{r, c};
                        })}});
  }
  return out;
}

CoefficientDoc read_coefficient(const json& j, HopfPtr H) {
  const std::string w = "/coefficient";
  CoefficientDoc out;
  const json& kind = require(j, "kind", w);
  if (kind == "contramodule")
    out.kind = CoefficientDoc::Kind::contramodule;
  else if (kind == "module")
    out.kind = CoefficientDoc::Kind::module;
  else
    throw DocumentError(w + "/kind", "expected \"contramodule\" or \"module\"");
  const json& cx = require_array(j, "complex", w);
  if (cx.empty()) throw DocumentError(w + "/complex", "at least one degree is required");
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t t = 0; t < cx.size(); ++t)
    order.emplace_back(get_int(cx[t], "degree", w + "/complex/" + std::to_string(t)), t);
  std::sort(order.begin(), order.end());
  for (std::size_t k = 1; k < order.size(); ++k)
    if (order[k].first != order[k - 1].first + 1)
      throw DocumentError(w + "/complex/" + std::to_string(order[k].second), "degrees must be consecutive");
  int lo = order.front().first;
  std::vector<std::size_t> dims;
  for (auto [deg, t] : order) {
    std::string wt = w + "/complex/" + std::to_string(t);
    if (out.kind == CoefficientDoc::Kind::contramodule) {
      out.contra.objects.push_back(read_contra(cx[t], wt, H));
      dims.push_back(out.contra.objects.back().dim());
    } else {
      out.module.objects.push_back(read_aydmodule(cx[t], wt, H));
      dims.push_back(out.module.objects.back().dim());
    }
  }
  auto d = read_maps(j, "d", w, H->field(), lo, dims, 1);
  auto h = read_maps(j, "h", w, H->field(), lo, dims, -1);
  if (out.kind == CoefficientDoc::Kind::contramodule)
    out.contra = MixedAydContramodule{lo, std::move(out.contra.objects), std::move(d), std::move(h)};
  else
    out.module = MixedAydModule{lo, std::move(out.module.objects), std::move(d), std::move(h)};
  return out;
}

json write_coefficient(const CoefficientDoc& c) {
  json out = json::object();
  json cx = json::array();
  if (c.kind == CoefficientDoc::Kind::contramodule) {
    out["kind"] = "contramodule";
    const auto& M = c.contra;
    for (std::size_t k = 0; k < M.objects.size(); ++k) {
      const auto& o = M.objects[k];
      std::size_t d = o.dim();
      json e = write_object_common(M.lo + static_cast<int>(k), d, o.module.act);
      e["contraaction"] = write_sparse<3>(o.alpha, {"h", "j", "i"}, [d](std::size_t r, std::size_t col) {
        return std::array<std::size_t, 3>{col / d, col % d, r};
      });
      cx.push_back(std::move(e));
    }
    out["complex"] = std::move(cx);
    out["d"] = write_maps(M.d, M.lo);
    out["h"] = write_maps(M.h, M.lo);
  } else {
    out["kind"] = "module";
    const auto& M = c.module;
    for (std::size_t k = 0; k < M.objects.size(); ++k) {
      const auto& o = M.objects[k];
      std::size_t n = o.module.H->dim();
      json e = write_object_common(M.lo + static_cast<int>(k), o.dim(), o.module.act);
      e["coaction"] = write_sparse<3>(o.comodule.coaction, {"i", "j", "h"}, [n](std::size_t r, std::size_t col) {
        return std::array<std::size_t, 3>{col, r / n, r % n};
      });
      cx.push_back(std::move(e));
    }
    out["complex"] = std::move(cx);
    out["d"] = write_maps(M.d, M.lo);
    out["h"] = write_maps(M.h, M.lo);
  }
  return out;
}

}  // namespace

HopfPtr hopf_from_json(const json& j, Field f, const std::string& w) {
  std::size_t n = get_size(j, "dim", w);
  if (n == 0) throw DocumentError(w + "/dim", "dimension must be positive");
  std::vector<std::string> labels;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != n) throw DocumentError(w + "/basis", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) throw DocumentError(w + "/basis/" + std::to_string(i), "labels are strings");
      labels.push_back((*it)[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  Matrix mult = read_mult(require(j, "mult", w), w + "/mult", f, n);
  Matrix unit = read_unit(require(j, "unit", w), w + "/unit", f, n);
  Matrix comult = read_sparse<3>(require(j, "comult", w), w + "/comult", f, n * n, n, {"i", "j", "k"}, {n, n, n},
                                 [n](auto x) { return std::pair{x[1] * n + x[2], x[0]}; });
  Matrix counit = read_sparse<1>(require(j, "counit", w), w + "/counit", f, 1, n, {"i"}, {n},
                                 [](auto x) { return std::pair{std::size_t{0}, x[0]}; });
  auto read_S = [&](const json& a, const std::string& wa) {
    return read_sparse<2>(a, wa, f, n, n, {"i", "j"}, {n, n}, [](auto x) { return std::pair{x[1], x[0]}; });
  };
  Matrix S = read_S(require(j, "antipode", w), w + "/antipode");
  std::optional<Matrix> S_inv;
  if (auto it = j.find("antipode_inv"); it != j.end()) S_inv = read_S(*it, w + "/antipode_inv");
  try {
    return std::make_shared<HopfAlgebra>(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                                         std::move(counit), std::move(S), std::move(S_inv));
  } catch (const std::exception& ex) {
    throw DocumentError(w, ex.what());
  }
}

json hopf_to_json(const HopfAlgebra& H) {
  std::size_t n = H.dim();
  json out = json::object();
  out["dim"] = n;
  out["basis"] = H.labels();
  out["mult"] = write_mult(H.mult(), n);
  out["unit"] = write_unit(H.unit());
  out["comult"] = write_sparse<3>(H.comult(), {"i", "j", "k"}, [n](std::size_t r, std::size_t c) {
    return std::array<std::size_t, 3>{c, r / n, r % n};
  });
  out["counit"] = write_sparse<1>(H.counit(), {"i"}, [](std::size_t, std::size_t c) {
    return std::array<std::size_t, 1>{c};
  });
  auto write_S = [](const Matrix& S) {
    return write_sparse<2>(S, {"i", "j"}, [](std::size_t r, std::size_t c) { return std::array<std::size_t, 2>{c, r}; });
  };
  out["antipode"] = write_S(H.antipode());
  if (!H.antipode_inv_computed()) out["antipode_inv"] = write_S(H.antipode_inv());
  return out;
}

WorkspaceDocument parse_document(const json& j) {
  if (!j.is_object()) throw DocumentError("", "top level must be an object");
  static const std::array<const char*, 6> known{"field", "hopf", "algebra", "coefficient", "map", "task"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find_if(known.begin(), known.end(), [&](const char* k) { return it.key() == k; }) == known.end())
      throw DocumentError("/" + it.key(), "unknown top-level key");

  WorkspaceDocument doc;
  doc.field = field_from_json(require(j, "field", ""));
  doc.hopf = hopf_from_json(require(j, "hopf", ""), doc.field);
  const Field& f = doc.field;
  std::size_t n = doc.hopf->dim();

  if (auto it = j.find("algebra"); it != j.end()) {
    const std::string w = "/algebra";
    std::size_t d = get_size(*it, "dim", w);
    Matrix mult = read_mult(require(*it, "mult", w), w + "/mult", f, d);
    Matrix unit = read_unit(require(*it, "unit", w), w + "/unit", f, d);
    if (it->contains("action")) {
      doc.algebra = HModuleAlgebra{read_module(*it, w, doc.hopf, d), std::move(mult), std::move(unit)};
    } else if (it->contains("coact_l") || it->contains("coact_r")) {
      Matrix cl = read_sparse<3>(require(*it, "coact_l", w), w + "/coact_l", f, n * d, d, {"i", "h", "j"}, {d, n, d},
                                 [d](auto x) { return std::pair{x[1] * d + x[2], x[0]}; });
      Matrix cr = read_sparse<3>(require(*it, "coact_r", w), w + "/coact_r", f, d * n, d, {"i", "j", "h"}, {d, d, n},
                                 [n](auto x) { return std::pair{x[1] * n + x[2], x[0]}; });
      doc.bicomodule = BicomoduleAlgebra{doc.hopf, Algebra{f, d, std::move(mult), std::move(unit)}, std::move(cl),
                                         std::move(cr)};
    } else {
      throw DocumentError(w, "expected \"action\" (module algebra) or \"coact_l\"/\"coact_r\" (bicomodule algebra)");
    }
  }
  if (auto it = j.find("coefficient"); it != j.end()) doc.coefficient = read_coefficient(*it, doc.hopf);
  if (auto it = j.find("map"); it != j.end()) {
    const std::string w = "/map";
    HopfPtr K = hopf_from_json(require(*it, "source", w), f, w + "/source");
    Matrix m = read_sparse<2>(require(*it, "matrix", w), w + "/matrix", f, n, K->dim(), {"i", "j"}, {n, K->dim()},
                              [](auto x) { return std::pair{x[0], x[1]}; });
    doc.map = HopfMap{K, doc.hopf, std::move(m)};
  }
  if (auto it = j.find("task"); it != j.end()) {
    if (!it->is_object()) throw DocumentError("/task", "expected an object");
    doc.task = *it;
  }
  return doc;
}

WorkspaceDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw DocumentError("byte " + std::to_string(ex.byte), "malformed JSON");
  }
  return parse_document(j);
}

json to_json(const WorkspaceDocument& doc) {
  json out = json::object();
  out["field"] = field_to_json(doc.field);
  out["hopf"] = hopf_to_json(*doc.hopf);
  if (doc.algebra) {
    const auto& A = *doc.algebra;
    std::size_t d = A.dim();
    out["algebra"] = json{{"dim", d}, {"action", write_action(A.module.act)}, {"mult", write_mult(A.mult, d)},
                          {"unit", write_unit(A.unit)}};
  } else if (doc.bicomodule) {
    const auto& A = *doc.bicomodule;
    std::size_t d = A.dim(), n = A.H->dim();
    out["algebra"] = json{
        {"dim", d},
        {"mult", write_mult(A.alg.mult, d)},
        {"unit", write_unit(A.alg.unit)},
        {"coact_l", write_sparse<3>(A.coact_l, {"i", "h", "j"},
                                    [d](std::size_t r, std::size_t c) {
                                      return std::array<std::size_t, 3>{c, r / d, r % d};
                                    })},
        {"coact_r", write_sparse<3>(A.coact_r, {"i", "j", "h"}, [n](std::size_t r, std::size_t c) {
           return std::array<std::size_t, 3>{c, r / n, r % n};
         })}};
  }
  if (doc.coefficient) out["coefficient"] = write_coefficient(*doc.coefficient);
  if (doc.map)
    out["map"] = json{{"source", hopf_to_json(*doc.map->source)},
                      {"matrix", write_sparse<2>(doc.map->matrix, {"i", "j"}, [](std::size_t r, std::size_t c) {
                         return std::array<std::size_t, 2>{r, c};
                       })}};
  if (!doc.task.empty()) out["task"] = doc.task;
  return out;
}

std::string serialize_document(const WorkspaceDocument& doc, int indent) { return to_json(doc).dump(indent); }

WorkspaceDocument example_document(const std::string& name, Field field, std::size_t n, std::size_t N,
                                   std::uint64_t p, std::uint64_t q) {
  WorkspaceDocument doc;
  bool group = false;
  if (name == "group-zn") {
    doc.hopf = build_group_algebra(cyclic_group_table(n), field);
    group = true;
  } else if (name == "dual-group-zn") {
    doc.hopf = build_dual_group_algebra(cyclic_group_table(n), field);
  } else if (name == "sweedler") {
    doc.hopf = build_sweedler(field);
  } else if (name == "taft") {
    field = Field::prime(p);
    doc.hopf = build_taft(N, p, q);
  } else if (name == "s3") {
    doc.hopf = build_group_algebra(symmetric_group3_table(), field, symmetric_group3_labels());
    group = true;
  } else {
    throw std::invalid_argument("unknown example \"" + name + "\"");
  }
  doc.field = field;
  doc.algebra = unit_module_algebra(doc.hopf);
  AydContramodule M = group ? evaluation_contramodule(trivial_module(doc.hopf), 0) : tr_contra(trivial_module(doc.hopf));
  doc.coefficient = CoefficientDoc{CoefficientDoc::Kind::contramodule, concentrated(M), {}};
  doc.task = json{{"degrees", "0..4"}, {"method", "all"}};
  return doc;
}

}  // namespace hopfcyc
