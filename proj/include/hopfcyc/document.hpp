#pragma once

#include "hopfcyc/ayd.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hopfcyc {

/// Schema violation; where() is a JSON pointer into the offending document.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct CoefficientDoc {
  enum class Kind { contramodule, module };
  Kind kind = Kind::contramodule;
  MixedAydContramodule contra;  // kind == contramodule
  MixedAydModule module;        // kind == module
};

struct WorkspaceDocument {
  Field field = Field::rationals();
  HopfPtr hopf;
  std::optional<HModuleAlgebra> algebra;
  std::optional<BicomoduleAlgebra> bicomodule;
  std::optional<CoefficientDoc> coefficient;
  std::optional<HopfMap> map;  // source described inline, target = hopf
  nlohmann::ordered_json task = nlohmann::ordered_json::object();
};

WorkspaceDocument parse_document(const std::string& text);
WorkspaceDocument parse_document(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const WorkspaceDocument& doc);
std::string serialize_document(const WorkspaceDocument& doc, int indent = 2);

nlohmann::ordered_json hopf_to_json(const HopfAlgebra& H);
HopfPtr hopf_from_json(const nlohmann::ordered_json& j, Field field, const std::string& where = "/hopf");

/// Builder documents: "group-zn" (n), "dual-group-zn" (n), "sweedler", "taft"
/// (N, p, q; always over F_p), "s3". Carries A = k and a stable degree-0
/// coefficient: (k, ev_1) for group algebras, Tr(k) otherwise.
WorkspaceDocument example_document(const std::string& name, Field field, std::size_t n = 2, std::size_t N = 3,
                                   std::uint64_t p = 7, std::uint64_t q = 2);

}  // namespace hopfcyc
