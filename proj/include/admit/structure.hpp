#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "admit/algebra.hpp"

namespace admit {

// Marks an argument tuple outside the domain of a partial operation.
inline constexpr Element kUndefined = static_cast<Element>(-1);

// Total or partial operation on a structure; partial tables hold kUndefined
// outside the domain.
struct StructOp {
  std::string name;
  int arity = 0;
  bool partial = false;
  std::vector<Element> table;

  bool operator==(StructOp const&) const = default;
};

// Dense indicator over universe^arity, row-major.
struct StructRelation {
  std::string name;
  int arity = 1;
  std::vector<std::uint8_t> holds;

  bool operator==(StructRelation const&) const = default;
};

// A finite discrete structure: total operations, partial operations with
// explicit domains, relations. Points may carry display labels and, when
// they arise as maps or tuples over an algebra, those values as coords.
struct FiniteStructure {
  std::string name;
  std::size_t size = 0;
  std::vector<StructOp> ops;
  std::vector<StructRelation> relations;
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> coords;

  std::string const& label(Element p) const { return labels.at(p); }
  std::optional<Element> find_label(std::string_view l) const;
  std::optional<std::size_t> find_op(std::string_view n) const;
  std::optional<std::size_t> find_relation(std::string_view n) const;

  Element apply(std::size_t op, std::span<Element const> args) const;
  bool related(std::size_t rel, std::span<Element const> args) const;

  // Same operation and relation symbols with the same arities and kinds.
  bool same_type(FiniteStructure const& other) const;
  // Throws AlgebraError on malformed tables.
  void validate() const;

  // Equality ignores coords.
  bool operator==(FiniteStructure const& o) const {
    return name == o.name && size == o.size && ops == o.ops &&
           relations == o.relations && labels == o.labels;
  }
};

// Index of a tuple in a row-major table over n points.
std::size_t tuple_index(std::size_t n, std::span<Element const> args);

// Alter ego of a finite algebra: a structure on the same universe.
struct AlterEgo {
  FiniteAlgebra base;
  FiniteStructure tilde;
};

struct StructMorphism {
  FiniteStructure source;
  FiniteStructure target;
  std::vector<Element> map;

  Element operator()(Element p) const { return map[p]; }
  bool injective() const;
  bool surjective() const;
};

struct CompatibilityReport {
  bool ok = true;
  std::string violation;  // empty when ok
};

// Each operation, partial operation (with its domain) and relation of the
// alter ego must be a subuniverse of the matching power of the base, taken
// as the graph for operations.
CompatibilityReport check_compatibility(AlterEgo const& ego);

// Pointwise power. Point i is the tuple of base elements given by the
// lexicographic digits of i; coords hold the tuples.
FiniteStructure power_structure(FiniteStructure const& tilde, std::size_t s,
                                std::string name = {});

// Least subset containing gens, closed under total operations and under
// partial operations on domain tuples inside the subset; sorted.
std::vector<Element> substructure_closure(FiniteStructure const& x,
                                          std::span<Element const> gens);

struct Substructure {
  FiniteStructure structure;
  std::vector<Element> inclusion;
};

// Induced structure on a closed subset. Throws AlgebraError when the subset
// is not closed.
Substructure induced_substructure(FiniteStructure const& x,
                                  std::span<Element const> subset,
                                  std::string name = {});

// Structure-preserving map check (total ops commute; partial domains and
// values preserved; relations preserved).
bool is_struct_morphism(FiniteStructure const& x, FiniteStructure const& y,
                        std::span<Element const> map);

// Injective morphism that also reflects relations and partial domains.
bool is_embedding(FiniteStructure const& x, FiniteStructure const& y,
                  std::span<Element const> map);

enum class MorphMode { all, surjective, embedding, first };

struct MorphSearch {
  bool surjective = false;
  bool embedding = false;
};

// Backtracking over the points of x with forward checking; y has at most 64
// points. Return false from `visit` to stop.
void for_each_struct_morphism(
    FiniteStructure const& x, FiniteStructure const& y, MorphSearch filter,
    std::function<bool(std::span<Element const>)> const& visit);

// Sorted by map.
std::vector<StructMorphism> enumerate_struct_morphisms(
    FiniteStructure const& x, FiniteStructure const& y,
    MorphMode mode = MorphMode::all);

std::size_t count_struct_morphisms(FiniteStructure const& x,
                                   FiniteStructure const& y,
                                   MorphSearch filter = {});

std::optional<StructMorphism> find_struct_morphism(FiniteStructure const& x,
                                                   FiniteStructure const& y,
                                                   MorphSearch filter = {});

bool structures_isomorphic(FiniteStructure const& x, FiniteStructure const& y);

}  // namespace admit
