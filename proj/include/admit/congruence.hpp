#pragma once

#include <compare>
#include <span>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/homomorphism.hpp"

namespace admit {

// Partition of {0..n-1} in canonical form: rep[i] is the least element of
// the block containing i.
class Congruence {
 public:
  Congruence() = default;

  static Congruence identity(std::size_t n);
  static Congruence full(std::size_t n);
  // Any block labelling (equal labels = same block).
  static Congruence from_labels(std::span<Element const> block_of);
  // Kernel of a map.
  static Congruence kernel(std::span<Element const> map) {
    return from_labels(map);
  }

  std::size_t size() const noexcept { return rep_.size(); }
  Element rep(Element e) const { return rep_[e]; }
  std::span<Element const> reps() const noexcept { return rep_; }
  bool related(Element a, Element b) const { return rep_[a] == rep_[b]; }

  std::size_t block_count() const;
  // Blocks in order of their least element, each sorted.
  std::vector<std::vector<Element>> blocks() const;
  // block_index()[e] = position of e's block in blocks().
  std::vector<Element> block_index() const;

  bool is_identity() const;
  bool is_full() const;
  // Set inclusion of the relations.
  bool leq(Congruence const& other) const;
  Congruence meet(Congruence const& other) const;
  Congruence join(Congruence const& other) const;

  bool operator==(Congruence const&) const = default;
  auto operator<=>(Congruence const& o) const { return rep_ <=> o.rep_; }

 private:
  std::vector<Element> rep_;
};

bool is_compatible(FiniteAlgebra const& a, Congruence const& theta);

Congruence principal_congruence(FiniteAlgebra const& a, Element x, Element y);

// Congruence generated by a set of pairs.
Congruence generated_congruence(
    FiniteAlgebra const& a,
    std::span<std::pair<Element, Element> const> pairs);

// All congruences, sorted by number of blocks descending then by rep array.
// The first entry is the identity, the last the full congruence.
std::vector<Congruence> congruence_lattice(FiniteAlgebra const& a);

struct Quotient {
  FiniteAlgebra algebra;
  Homomorphism projection;
};

// Throws AlgebraError when theta is not a congruence of a.
Quotient quotient(FiniteAlgebra const& a, Congruence const& theta,
                  std::string name = {});

}  // namespace admit
