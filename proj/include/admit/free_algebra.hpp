#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "admit/algebra.hpp"
#include "admit/tuple_set.hpp"

namespace admit {

struct FreeAlgebraOptions {
  // Abort with BudgetExceeded once the element store would pass this.
  std::size_t memory_budget = std::size_t{2} << 30;
};

// The free algebra on s generators in the quasivariety generated by M,
// represented as the subalgebra of M^(M^s) generated by the projections.
// Element e is the tuple coords(e); coordinate c corresponds to the point
// point(c) of M^s (lexicographic, first generator most significant).
class FreeAlgebra {
 public:
  FiniteAlgebra const& base() const noexcept { return base_; }
  std::size_t generator_count() const noexcept { return s_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  // |M|^s
  std::size_t width() const noexcept { return tuples_.width(); }

  std::span<Byte const> coords(Element e) const { return tuples_[e]; }
  TupleSet const& tuples() const noexcept { return tuples_; }
  std::vector<Element> point(std::size_t coordinate) const;
  Element generator(std::size_t i) const { return generators_.at(i); }
  std::optional<Element> find(std::span<Byte const> tuple) const;

  // Term representatives are kept by the closure construction only.
  bool has_terms() const noexcept { return !deriv_op_.empty(); }
  // A term of least depth in the generators x0..x(s-1) denoting e.
  // Throws AlgebraError when no derivations were kept.
  Term term_of(Element e) const;

  // Applies operation `op` coordinatewise.
  Element apply(std::size_t op, std::span<Element const> args) const;

  // Full operation tables. Throws BudgetExceeded when they would have more
  // than `max_entries` entries in total.
  FiniteAlgebra to_algebra(std::size_t max_entries = std::size_t{1} << 26)
      const;

 private:
  friend FreeAlgebra free_algebra(FiniteAlgebra const&, std::size_t,
                                  FreeAlgebraOptions);
  friend FreeAlgebra free_algebra_relational(FiniteAlgebra const&,
                                             std::size_t, FreeAlgebraOptions);

  FiniteAlgebra base_;
  std::size_t s_ = 0;
  TupleSet tuples_;
  std::vector<Element> generators_;
  // Derivation of each element: operation (-1 for generators) and the
  // offset of its argument indices in deriv_args_.
  std::vector<std::int32_t> deriv_op_;
  std::vector<std::uint32_t> deriv_offset_;
  std::vector<std::uint32_t> deriv_args_;
};

// Closure of the projection tuples. Elements are discovered in order of
// nondecreasing term depth. Requires |M| <= 255.
FreeAlgebra free_algebra(FiniteAlgebra const& m, std::size_t s,
                         FreeAlgebraOptions opts = {});

// Enumerates the s-ary term functions of M directly: f belongs to the free
// algebra iff for all points p, q of M^s the pair (f(p), f(q)) lies in the
// subalgebra of M^2 generated by the coordinate pairs of (p, q). Valid when M
// has a majority term; throws AlgebraError otherwise. Elements come out in
// lexicographic order and carry no term representatives.
FreeAlgebra free_algebra_relational(FiniteAlgebra const& m, std::size_t s,
                                    FreeAlgebraOptions opts = {});

// Same criterion, counting only.
std::size_t free_algebra_size_relational(FiniteAlgebra const& m,
                                         std::size_t s);

// A ternary term t with t(x,x,y) = t(x,y,x) = t(y,x,x) = x in M, searched
// among the lattice medians j(j(m(x,y), m(y,z)), m(x,z)) over pairs of binary
// operations, or nothing.
std::optional<Term> find_majority_term(FiniteAlgebra const& m);

}  // namespace admit
