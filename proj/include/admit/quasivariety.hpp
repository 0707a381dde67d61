#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/congruence.hpp"
#include "admit/constructions.hpp"
#include "admit/homomorphism.hpp"

namespace admit {

// A finite set of finite algebras over one signature.
using GeneratorSet = std::vector<FiniteAlgebra>;
using MultisetOfSizes = std::vector<std::size_t>;

// Multiset extension of the order on the naturals: x <= y iff x == y or y
// arises from x by replacing some elements with finitely many smaller ones
// in reverse. Total on finite multisets of naturals.
bool multiset_leq(MultisetOfSizes x, MultisetOfSizes y);
MultisetOfSizes size_multiset(GeneratorSet const& k);

struct SeparatingMap {
  std::size_t target;  // index into the generator set
  Homomorphism hom;
};

struct IspResult {
  bool member = false;
  // One homomorphism per pair that was not yet separated when it was found;
  // together they separate all points when `member`.
  std::vector<SeparatingMap> family;
  // A pair no homomorphism separates, when not a member.
  std::optional<std::pair<Element, Element>> unseparated;
};

// C lies in ISP(gens) iff homomorphisms into members of gens separate the
// points of C.
IspResult in_isp(FiniteAlgebra const& c, GeneratorSet const& gens);

// Congruences theta with A/theta in ISP(gens), in congruence_lattice order.
std::vector<Congruence> q_congruences(FiniteAlgebra const& a,
                                      GeneratorSet const& gens);

// Throws AlgebraError when A is not in ISP(gens). The one-element algebra is
// not Q-subdirectly irreducible.
bool is_q_subdirectly_irreducible(FiniteAlgebra const& a,
                                  GeneratorSet const& gens);

// Elements of `lattice` (closed under meet) that are meet-irreducible: not
// the top and not the meet of the members strictly above them.
std::vector<Congruence> meet_irreducibles(
    std::vector<Congruence> const& lattice);

// Worklist form: drop any algebra whose quotients embedding into the list
// separate its points, replacing it by the quotients that embed into it
// alone; then remove members embedding into larger members.
GeneratorSet min_gen_set_bfs(GeneratorSet const& k);

// Quotients by the minimal meet-irreducible Q-congruences of each input,
// then the same final sweep.
GeneratorSet min_gen_set_dfs(GeneratorSet const& k);

struct SubPreHom {
  Subalgebra sub;
  std::vector<Element> generators;  // in the parent algebra
  Homomorphism surjection;          // sub.algebra ->> B
};

// A subalgebra of A of least size with B as a homomorphic image. Ties go to
// the lexicographically least generating set. Throws SearchExhausted when
// no subalgebra maps onto B.
SubPreHom sub_pre_hom(FiniteAlgebra const& a, FiniteAlgebra const& b);

}  // namespace admit
