#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace admit {

// Elements of a finite universe {0, ..., n-1}.
using Element = std::uint32_t;

struct OpSymbol {
  std::string name;
  int arity = 0;

  bool operator==(OpSymbol const&) const = default;
};

// Ordered list of operation symbols. Names are unique.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> ops);

  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  OpSymbol const& operator[](std::size_t i) const { return ops_[i]; }
  auto begin() const noexcept { return ops_.begin(); }
  auto end() const noexcept { return ops_.end(); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws AlgebraError when `name` is not declared.
  std::size_t index_of(std::string_view name) const;
  int max_arity() const noexcept;

  bool operator==(Signature const&) const = default;

 private:
  std::vector<OpSymbol> ops_;
};

// A finite algebra with universe {0..n-1} and one flat row-major table per
// operation (n^k entries for a k-ary operation). Immutable; copies share the
// underlying tables.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, Signature signature, std::size_t size,
                std::vector<std::vector<Element>> tables,
                std::vector<std::string> labels = {});

  std::string const& name() const { return d_->name; }
  Signature const& signature() const { return d_->signature; }
  std::size_t size() const noexcept { return d_ ? d_->size : 0; }
  std::vector<std::string> const& labels() const { return d_->labels; }
  std::string const& label(Element e) const { return d_->labels.at(e); }
  std::optional<Element> find_label(std::string_view label) const;

  std::span<Element const> table(std::size_t op) const {
    return d_->tables[op];
  }
  int arity(std::size_t op) const { return d_->signature[op].arity; }

  Element apply(std::size_t op, std::span<Element const> args) const;
  Element constant(std::size_t op) const { return d_->tables[op][0]; }
  Element unary(std::size_t op, Element a) const { return d_->tables[op][a]; }
  Element binary(std::size_t op, Element a, Element b) const {
    return d_->tables[op][a * d_->size + b];
  }

  FiniteAlgebra renamed(std::string name) const;
  FiniteAlgebra relabeled(std::vector<std::string> labels) const;

  // Same signature, size and tables (names and labels ignored).
  bool same_tables(FiniteAlgebra const& other) const;

 private:
  struct Data {
    std::string name;
    Signature signature;
    std::size_t size = 0;
    std::vector<std::vector<Element>> tables;
    std::vector<std::string> labels;
  };
  std::shared_ptr<Data const> d_;
};

// Number of entries in a table of the given arity over n elements.
std::size_t table_size(std::size_t n, int arity);

class Term {
 public:
  static Term variable(std::size_t index);
  static Term apply(std::string op, std::vector<Term> args = {});

  bool is_variable() const noexcept { return op_.empty(); }
  std::size_t var() const noexcept { return var_; }
  std::string const& op() const noexcept { return op_; }
  std::vector<Term> const& args() const noexcept { return args_; }

  // Largest variable index plus one; 0 for ground terms.
  std::size_t var_count() const;
  std::size_t depth() const;
  std::size_t node_count() const;
  // Variables in order of first occurrence (left to right, depth first).
  void collect_variables(std::vector<std::size_t>& out) const;
  // Replace each variable i by subst[i].
  Term substitute(std::vector<Term> const& subst) const;

  bool operator==(Term const&) const = default;

 private:
  std::size_t var_ = 0;
  std::string op_;
  std::vector<Term> args_;
};

struct Identity {
  Term lhs;
  Term rhs;

  bool operator==(Identity const&) const = default;
};

struct QuasiIdentity {
  std::vector<Identity> premises;
  Identity conclusion;

  std::size_t var_count() const;
  // Variables ordered by first occurrence: premises first, then conclusion.
  std::vector<std::size_t> variables_by_occurrence() const;

  bool operator==(QuasiIdentity const&) const = default;
};

// Values of variables 0..values.size()-1 in some algebra.
struct Assignment {
  std::vector<Element> values;

  bool operator==(Assignment const&) const = default;
};

// Throws AlgebraError on unknown operations, arity mismatches and
// unassigned variables.
Element eval_term(Term const& t, FiniteAlgebra const& a, Assignment const& asg);

// A term resolved against a signature into postfix code, for repeated
// evaluation in hot loops.
class CompiledTerm {
 public:
  CompiledTerm() = default;
  CompiledTerm(Term const& t, Signature const& sig);

  Element eval(FiniteAlgebra const& a, std::span<Element const> vars) const;
  std::size_t var_count() const noexcept { return var_count_; }

 private:
  struct Instr {
    // op < 0 pushes variable `arg`; otherwise applies operation `op`.
    int op;
    std::uint32_t arg;
  };
  std::vector<Instr> code_;
  std::size_t var_count_ = 0;
  std::size_t max_stack_ = 0;
};

}  // namespace admit
