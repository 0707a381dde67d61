#pragma once

// Invariant checks shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "admit/duality.hpp"
#include "admit/quasivariety.hpp"
#include "admit/structure.hpp"

namespace admit::testing {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;  // first failure

  void fail(std::string what) {
    if (ok) {
      detail = std::move(what);
    }
    ok = false;
  }
  void merge(Outcome const& o) {
    checked += o.checked;
    if (!o.ok) {
      fail(o.detail);
    }
  }
};

// Uniformly random tables over `sig`.
FiniteAlgebra random_algebra(std::mt19937_64& rng, std::size_t n,
                             Signature const& sig, std::string name = "R");

// Subalgebras of the alter ego's base generated by at most two elements, and
// binary products of those, with at most max_size elements; one per
// isomorphism class.
std::vector<FiniteAlgebra> small_members(AlterEgo const& ego,
                                         std::size_t max_size);

// Naive enumeration of all maps a -> b that preserve the operations.
std::size_t naive_hom_count(FiniteAlgebra const& a, FiniteAlgebra const& b);

// Multiset order by direct comparison of the sizes sorted in decreasing
// order, longer wins on a common prefix.
bool multiset_leq_oracle(MultisetOfSizes x, MultisetOfSizes y);

// Q-congruences of A and substructures of D(A) in mutually inverse,
// order-reversing correspondence.
Outcome galois_correspondence(FiniteAlgebra const& a, AlterEgo const& ego);

// in_isp(C, {B}) against brute-force point separation and against D(C)
// being generated by the images of all morphisms D(B) -> D(C).
Outcome isp_three_way(FiniteAlgebra const& b, FiniteAlgebra const& c,
                      AlterEgo const& ego);

// e_M : M -> E(D(M)) is bijective.
Outcome evaluation_is_isomorphism(AlterEgo const& ego);

// D turns injective homomorphisms a -> b into surjections and surjective
// ones into embeddings.
Outcome dual_swaps_arrows(FiniteAlgebra const& a, FiniteAlgebra const& b,
                          AlterEgo const& ego);

// Reflexivity, antisymmetry, totality, transitivity and agreement with the
// oracle on random multisets (entries 1..20, length at most 6).
Outcome multiset_order_laws(std::uint64_t seed, std::size_t samples);

// bfs and dfs outputs agree up to isomorphism, and each is Q-subdirectly
// irreducible, an antichain under embedding, generates the same
// quasivariety as k and is no larger in the multiset order.
Outcome min_gen_set_laws(GeneratorSet const& k);

// Members of a substructure lattice as sorted label lists.
std::vector<std::vector<std::string>> member_labels(
    SubstructureLattice const& lat);

// Strict pairs (p, q), p < q, of the binary relation `rel` on x.
std::vector<std::pair<Element, Element>> strict_pairs(FiniteStructure const& x,
                                                      std::string_view rel);

// A factorisation a ~ A/t1 x A/t2 with |A/t1| = m and |A/t2| = n, if any.
struct Split {
  FiniteAlgebra left;
  FiniteAlgebra right;
};
std::optional<Split> split_as_product(FiniteAlgebra const& a, std::size_t m,
                                      std::size_t n);

// Same name, labels, signature and tables.
bool same_algebra(FiniteAlgebra const& a, FiniteAlgebra const& b);

// Random documents with awkward labels (quotes, spaces, keywords) and
// partial operations, for print/parse round trips.
FiniteAlgebra random_document_algebra(std::mt19937_64& rng);
FiniteStructure random_document_structure(std::mt19937_64& rng);

// parse(print(x)) == x for every corpus document.
Outcome round_trip_corpus();
// The same for `count` random documents, alternating kinds.
Outcome round_trip_fuzz(std::uint64_t seed, std::size_t count);

// The suites of the acceptance run.
Outcome suite_galois();
Outcome suite_isp(std::size_t pairs);
Outcome suite_evaluation();
Outcome suite_arrows();
Outcome suite_multiset();
Outcome suite_min_gen_set(std::size_t random_algebras);

}  // namespace admit::testing
