#include "admit/corpus.hpp"

#include "admit/error.hpp"
#include "admit/io.hpp"

namespace admit::corpus {

namespace detail {
extern EmbeddedDocument const kDocuments[];
extern std::size_t const kDocumentCount;
}  // namespace detail

std::vector<Document> documents() {
  std::vector<Document> out;
  for (std::size_t i = 0; i < detail::kDocumentCount; ++i) {
    auto const& d = detail::kDocuments[i];
    out.push_back({d.name, d.kind, d.text});
  }
  return out;
}

std::vector<std::string> algebra_names() {
  std::vector<std::string> out;
  for (auto const& d : documents()) {
    if (d.kind == "alg") {
      out.push_back(d.name);
    }
  }
  return out;
}

std::optional<Document> find(std::string_view name) {
  for (auto const& d : documents()) {
    if (d.name == name) {
      return d;
    }
  }
  return std::nullopt;
}

namespace {

Document require(std::string_view name, std::string_view kind) {
  auto d = find(name);
  if (!d) {
    throw AlgebraError("no corpus entry '" + std::string(name) + "'");
  }
  if (d->kind != kind) {
    throw AlgebraError("corpus entry '" + std::string(name) + "' is not a ." +
                       std::string(kind) + " document");
  }
  return *d;
}

}  // namespace

FiniteAlgebra algebra(std::string_view name) {
  return parse_algebra(require(name, "alg").text);
}

FiniteStructure structure(std::string_view name) {
  return parse_structure(require(name, "str").text);
}

bool has_alter_ego(std::string_view name) {
  return find(std::string(name) + "~").has_value();
}

AlterEgo alter_ego(std::string_view name) {
  AlterEgo e{algebra(name), structure(std::string(name) + "~")};
  if (e.tilde.labels != e.base.labels()) {
    throw AlgebraError("alter ego of '" + std::string(name) +
                       "' has different element labels");
  }
  return e;
}

std::optional<FiniteStructure> hint(std::string_view name) {
  if (!find(std::string(name) + "_X")) {
    return std::nullopt;
  }
  return structure(std::string(name) + "_X");
}

std::vector<CaseStudy> const& case_studies() {
  static std::vector<CaseStudy> const rows = {
      {"de-morgan", "D4", 2, 4, 168, 5, 10, false},
      {"ms", "MS", 2, 6, 8790, 6, 14, false},
      {"k2", "K2", 2, 4, 414, 4, 7, false},
      {"k3", "K3", 2, 5, 3059, 4, 9, false},
      {"double-stone", "dS", 2, 4, 7776, 4, 8, false},
      {"involutive-stone", "L6", 2, 6, 3483648, 6, 20, true},
      {"kleene-stone", "L5", 2, 5, 1741824, 4, 12, true},
  };
  return rows;
}

std::optional<CaseStudy> case_study(std::string_view row) {
  for (auto const& r : case_studies()) {
    if (r.row == row) {
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace admit::corpus
