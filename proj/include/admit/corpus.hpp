#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/structure.hpp"

// Built-in documents: every case-study algebra (`NAME`, an .alg document),
// its alter ego (`NAME~`, a .str document) and, where one is bundled, a test
// space hint (`NAME_X`, a .str document whose labels name points of the
// square of the alter ego).
namespace admit::corpus {

namespace detail {
struct EmbeddedDocument {
  char const* name;
  char const* kind;  // "alg" or "str"
  char const* text;
};
}  // namespace detail

struct Document {
  std::string name;
  std::string kind;
  std::string_view text;
};

std::vector<Document> documents();
std::vector<std::string> algebra_names();
std::optional<Document> find(std::string_view name);

// Throw AlgebraError for unknown names or the wrong document kind.
FiniteAlgebra algebra(std::string_view name);
FiniteStructure structure(std::string_view name);
// The algebra `name` with the structure `name~`.
AlterEgo alter_ego(std::string_view name);
bool has_alter_ego(std::string_view name);
std::optional<FiniteStructure> hint(std::string_view name);

// One row of the case-study table: sizes of M, the free algebra on s
// generators, the test space X and E(X).
struct CaseStudy {
  std::string row;
  std::string algebra;
  std::size_t s = 2;
  std::size_t m_size = 0;
  std::size_t free_size = 0;
  std::size_t x_size = 0;
  std::size_t ex_size = 0;
  bool big = false;  // free algebra beyond the default budget
};

std::vector<CaseStudy> const& case_studies();
std::optional<CaseStudy> case_study(std::string_view row);

}  // namespace admit::corpus
