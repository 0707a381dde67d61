#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "admit/algebra.hpp"

namespace admit {

// Direct product; tuples are indexed lexicographically with the first factor
// most significant. Labels are concatenated ("ab") when every factor label is
// a single character, otherwise written "(a,b)".
FiniteAlgebra product(std::span<FiniteAlgebra const> factors,
                      std::string name = {});

FiniteAlgebra power(FiniteAlgebra const& a, std::size_t exponent,
                    std::string name = {});

// The one-element algebra of a signature.
FiniteAlgebra trivial_algebra(Signature const& sig, std::string name = "1");

// Least subuniverse containing `gens` and the constants; sorted.
std::vector<Element> subalgebra_closure(FiniteAlgebra const& a,
                                        std::span<Element const> gens);

struct Subalgebra {
  FiniteAlgebra algebra;
  // inclusion[i] is the element of the parent that i stands for.
  std::vector<Element> inclusion;
};

// Subalgebra on a subuniverse (sorted or not). Throws AlgebraError when the
// set is not closed.
Subalgebra induced_subalgebra(FiniteAlgebra const& a,
                              std::span<Element const> subuniverse,
                              std::string name = {});

// A small generating set found greedily (largest closure first).
std::vector<Element> generating_set(FiniteAlgebra const& a);

// Lexicographically first generating set with exactly k elements, if any.
std::optional<std::vector<Element>> generating_set_of_size(
    FiniteAlgebra const& a, std::size_t k);

// Least k such that some k-element set generates a.
std::size_t generator_count(FiniteAlgebra const& a);

bool is_commutative(FiniteAlgebra const& a, std::size_t op);

}  // namespace admit
