#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "admit/algebra.hpp"

namespace admit {

struct Homomorphism {
  FiniteAlgebra source;
  FiniteAlgebra target;
  std::vector<Element> map;

  Element operator()(Element e) const { return map[e]; }
  bool injective() const;
  bool surjective() const;
};

// g after f.
Homomorphism compose(Homomorphism const& g, Homomorphism const& f);

// Exhaustive check that `map` commutes with every operation.
bool preserves_operations(FiniteAlgebra const& a, FiniteAlgebra const& b,
                          std::span<Element const> map);

enum class HomMode { all, injective, surjective, first };

struct HomSearch {
  bool injective = false;
  bool surjective = false;
};

// Visits every homomorphism a -> b satisfying the filter, in lexicographic
// order of the generator images. Return false from `visit` to stop early.
// Throws AlgebraError on signature mismatch.
void for_each_homomorphism(
    FiniteAlgebra const& a, FiniteAlgebra const& b, HomSearch filter,
    std::function<bool(std::span<Element const>)> const& visit);

// Results sorted by map.
std::vector<Homomorphism> enumerate_homomorphisms(FiniteAlgebra const& a,
                                                  FiniteAlgebra const& b,
                                                  HomMode mode = HomMode::all);

std::size_t count_homomorphisms(FiniteAlgebra const& a, FiniteAlgebra const& b,
                                HomSearch filter = {});

std::optional<Homomorphism> find_homomorphism(FiniteAlgebra const& a,
                                              FiniteAlgebra const& b,
                                              HomSearch filter = {});

// Bijective homomorphism (whose inverse is then automatically a
// homomorphism for finite algebras), or nothing.
std::optional<Homomorphism> isomorphism(FiniteAlgebra const& a,
                                        FiniteAlgebra const& b);

inline bool is_isomorphic(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  return isomorphism(a, b).has_value();
}

// a embeds into b.
inline bool embeds(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  return a.size() <= b.size() &&
         find_homomorphism(a, b, {.injective = true}).has_value();
}

}  // namespace admit
