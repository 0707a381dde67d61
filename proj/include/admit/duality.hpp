#pragma once

#include <optional>
#include <string>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/congruence.hpp"
#include "admit/homomorphism.hpp"
#include "admit/structure.hpp"

namespace admit {

// Homomorphisms A -> M as a structure of the alter ego's type, operations
// and relations taken pointwise. Points are ordered by their value tables;
// coords[p] is the table of point p and its label spells it out.
FiniteStructure dual_space(FiniteAlgebra const& a, AlterEgo const& ego,
                           std::string name = {});

// Morphisms X -> alter ego, as a subalgebra of M^X.
struct MorphismAlgebra {
  FiniteAlgebra algebra;
  // maps[e] is the morphism that element e stands for.
  std::vector<std::vector<Element>> maps;
};

MorphismAlgebra eval_functor(FiniteStructure const& x, AlterEgo const& ego,
                             std::string name = {});

// Dual of a homomorphism u: A -> B, the morphism D(B) -> D(A), x |-> x o u.
// The dual spaces must come from dual_space.
StructMorphism dual_of_homomorphism(Homomorphism const& u,
                                    FiniteStructure const& dual_a,
                                    FiniteStructure const& dual_b);

// E of a morphism phi: X -> Y, the homomorphism E(Y) -> E(X),
// alpha |-> alpha o phi.
Homomorphism eval_of_morphism(StructMorphism const& phi,
                              MorphismAlgebra const& eval_x,
                              MorphismAlgebra const& eval_y);

// a |-> (x |-> x(a)) from A into E(D(A)).
struct NaturalEvaluation {
  FiniteStructure dual;
  MorphismAlgebra second_dual;
  Homomorphism map;
};
NaturalEvaluation natural_evaluation(FiniteAlgebra const& a,
                                     AlterEgo const& ego);

// x |-> (alpha |-> alpha(x)) from X into D(E(X)).
struct StructEvaluation {
  MorphismAlgebra eval;
  FiniteStructure dual;
  StructMorphism map;
};
StructEvaluation structure_evaluation(FiniteStructure const& x,
                                      AlterEgo const& ego);

// Substructures of X generated by unions of images of morphisms Y -> X.
struct SubstructureLattice {
  FiniteStructure x;
  // Sorted point sets, by size then lexicographically; all non-empty.
  std::vector<std::vector<Element>> members;
  std::vector<bool> join_irreducible;

  std::optional<std::size_t> index_of(std::vector<Element> const& set) const;
  // Join-irreducible members not strictly contained in another one.
  std::vector<std::size_t> maximal_join_irreducibles() const;
};

SubstructureLattice y_substructure_lattice(FiniteStructure const& x,
                                           FiniteStructure const& y);

// Keeps the structures that are not morphic images of another member; of
// mutually surjective equal-size members the first stays.
std::vector<std::size_t> morphic_image_sweep(
    std::vector<FiniteStructure> const& v);

struct DualMinGenSet {
  FiniteStructure dual;
  SubstructureLattice lattice;
  std::vector<FiniteStructure> survivors;
};

// Maximal join-irreducible X-substructures of X = D(B) after the morphic
// image sweep; E of each survivor gives the minimal generating set of
// ISP(B).
DualMinGenSet dual_min_gen_set(FiniteAlgebra const& b, AlterEgo const& ego);

// The lattice of D(A)-substructures of D(A) corresponds to the
// Q-congruences of A: Z |-> {(a,b) : x(a) = x(b) for all x in Z}.
Congruence congruence_of_substructure(FiniteStructure const& dual,
                                      std::vector<Element> const& points,
                                      std::size_t algebra_size);

}  // namespace admit
