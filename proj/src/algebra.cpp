#include "admit/algebra.hpp"

#include <algorithm>
#include <set>

#include "admit/error.hpp"

namespace admit {

Signature::Signature(std::vector<OpSymbol> ops) : ops_(std::move(ops)) {
  std::set<std::string_view> seen;
  for (auto const& op : ops_) {
    if (op.arity < 0) {
      throw AlgebraError("operation '" + op.name + "' has negative arity");
    }
    if (!seen.insert(op.name).second) {
      throw AlgebraError("duplicate operation symbol '" + op.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) {
    throw AlgebraError("unknown operation '" + std::string(name) + "'");
  }
  return *i;
}

int Signature::max_arity() const noexcept {
  int m = 0;
  for (auto const& op : ops_) {
    m = std::max(m, op.arity);
  }
  return m;
}

std::size_t table_size(std::size_t n, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) {
    s *= n;
  }
  return s;
}

FiniteAlgebra::FiniteAlgebra(std::string name, Signature signature,
                             std::size_t size,
                             std::vector<std::vector<Element>> tables,
                             std::vector<std::string> labels) {
  if (size == 0) {
    throw AlgebraError("algebra '" + name + "' has an empty universe");
  }
  if (tables.size() != signature.size()) {
    throw AlgebraError("algebra '" + name + "': expected " +
                       std::to_string(signature.size()) + " tables, got " +
                       std::to_string(tables.size()));
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i].size() != table_size(size, signature[i].arity)) {
      throw AlgebraError("algebra '" + name + "': table of '" +
                         signature[i].name + "' has wrong length");
    }
    for (Element v : tables[i]) {
      if (v >= size) {
        throw AlgebraError("algebra '" + name + "': table of '" +
                           signature[i].name + "' has out-of-range entry");
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      labels.push_back(std::to_string(i));
    }
  } else if (labels.size() != size) {
    throw AlgebraError("algebra '" + name + "': label count mismatch");
  }
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->signature = std::move(signature);
  d->size = size;
  d->tables = std::move(tables);
  d->labels = std::move(labels);
  d_ = std::move(d);
}

std::optional<Element> FiniteAlgebra::find_label(std::string_view label) const {
  auto const& ls = d_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - ls.begin());
}

Element FiniteAlgebra::apply(std::size_t op,
                             std::span<Element const> args) const {
  std::size_t idx = 0;
  for (Element a : args) {
    idx = idx * d_->size + a;
  }
  return d_->tables[op][idx];
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  return FiniteAlgebra(std::move(name), d_->signature, d_->size, d_->tables,
                       d_->labels);
}

FiniteAlgebra FiniteAlgebra::relabeled(std::vector<std::string> labels) const {
  return FiniteAlgebra(d_->name, d_->signature, d_->size, d_->tables,
                       std::move(labels));
}

bool FiniteAlgebra::same_tables(FiniteAlgebra const& other) const {
  return signature() == other.signature() && size() == other.size() &&
         d_->tables == other.d_->tables;
}

Term Term::variable(std::size_t index) {
  Term t;
  t.var_ = index;
  return t;
}

Term Term::apply(std::string op, std::vector<Term> args) {
  if (op.empty()) {
    throw AlgebraError("empty operation symbol in term");
  }
  Term t;
  t.op_ = std::move(op);
  t.args_ = std::move(args);
  return t;
}

std::size_t Term::var_count() const {
  if (is_variable()) {
    return var_ + 1;
  }
  std::size_t m = 0;
  for (auto const& a : args_) {
    m = std::max(m, a.var_count());
  }
  return m;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (auto const& a : args_) {
    d = std::max(d, a.depth() + 1);
  }
  return d;
}

std::size_t Term::node_count() const {
  std::size_t c = 1;
  for (auto const& a : args_) {
    c += a.node_count();
  }
  return c;
}

void Term::collect_variables(std::vector<std::size_t>& out) const {
  if (is_variable()) {
    if (std::find(out.begin(), out.end(), var_) == out.end()) {
      out.push_back(var_);
    }
    return;
  }
  for (auto const& a : args_) {
    a.collect_variables(out);
  }
}

Term Term::substitute(std::vector<Term> const& subst) const {
  if (is_variable()) {
    if (var_ >= subst.size()) {
      throw AlgebraError("substitution does not cover x" +
                         std::to_string(var_));
    }
    return subst[var_];
  }
  std::vector<Term> args;
  args.reserve(args_.size());
  for (auto const& a : args_) {
    args.push_back(a.substitute(subst));
  }
  return Term::apply(op_, std::move(args));
}

std::size_t QuasiIdentity::var_count() const {
  std::size_t m = std::max(conclusion.lhs.var_count(),
                           conclusion.rhs.var_count());
  for (auto const& p : premises) {
    m = std::max({m, p.lhs.var_count(), p.rhs.var_count()});
  }
  return m;
}

std::vector<std::size_t> QuasiIdentity::variables_by_occurrence() const {
  std::vector<std::size_t> out;
  for (auto const& p : premises) {
    p.lhs.collect_variables(out);
    p.rhs.collect_variables(out);
  }
  conclusion.lhs.collect_variables(out);
  conclusion.rhs.collect_variables(out);
  return out;
}

Element eval_term(Term const& t, FiniteAlgebra const& a,
                  Assignment const& asg) {
  if (t.is_variable()) {
    if (t.var() >= asg.values.size()) {
      throw AlgebraError("variable x" + std::to_string(t.var()) +
                         " is unassigned");
    }
    Element v = asg.values[t.var()];
    if (v >= a.size()) {
      throw AlgebraError("variable x" + std::to_string(t.var()) +
                         " is assigned an out-of-range element");
    }
    return v;
  }
  std::size_t op = a.signature().index_of(t.op());
  if (static_cast<std::size_t>(a.arity(op)) != t.args().size()) {
    throw AlgebraError("operation '" + t.op() + "' expects " +
                       std::to_string(a.arity(op)) + " arguments, got " +
                       std::to_string(t.args().size()));
  }
  std::vector<Element> args;
  args.reserve(t.args().size());
  for (auto const& sub : t.args()) {
    args.push_back(eval_term(sub, a, asg));
  }
  return a.apply(op, args);
}

namespace {

void compile_into(Term const& t, Signature const& sig,
                  std::vector<std::pair<int, std::uint32_t>>& code,
                  std::size_t depth, std::size_t& max_depth) {
  if (t.is_variable()) {
    code.emplace_back(-1, static_cast<std::uint32_t>(t.var()));
    max_depth = std::max(max_depth, depth + 1);
    return;
  }
  std::size_t op = sig.index_of(t.op());
  if (static_cast<std::size_t>(sig[op].arity) != t.args().size()) {
    throw AlgebraError("operation '" + t.op() + "' expects " +
                       std::to_string(sig[op].arity) + " arguments, got " +
                       std::to_string(t.args().size()));
  }
  std::size_t d = depth;
  for (auto const& sub : t.args()) {
    compile_into(sub, sig, code, d, max_depth);
    ++d;
  }
  code.emplace_back(static_cast<int>(op),
                    static_cast<std::uint32_t>(t.args().size()));
  max_depth = std::max(max_depth, depth + 1);
}

}  // namespace

CompiledTerm::CompiledTerm(Term const& t, Signature const& sig)
    : var_count_(t.var_count()) {
  std::vector<std::pair<int, std::uint32_t>> code;
  compile_into(t, sig, code, 0, max_stack_);
  code_.reserve(code.size());
  for (auto [op, arg] : code) {
    code_.push_back({op, arg});
  }
}

Element CompiledTerm::eval(FiniteAlgebra const& a,
                           std::span<Element const> vars) const {
  // Terms in practice are shallow; spill to the heap only for deep ones.
  Element small[32];
  std::vector<Element> big;
  Element* stack = small;
  if (max_stack_ > 32) {
    big.resize(max_stack_);
    stack = big.data();
  }
  std::size_t sp = 0;
  std::size_t const n = a.size();
  for (auto const& in : code_) {
    if (in.op < 0) {
      stack[sp++] = vars[in.arg];
      continue;
    }
    auto table = a.table(static_cast<std::size_t>(in.op));
    std::size_t k = in.arg;
    std::size_t idx = 0;
    for (std::size_t i = sp - k; i < sp; ++i) {
      idx = idx * n + stack[i];
    }
    sp -= k;
    stack[sp++] = table[idx];
  }
  return stack[0];
}

}  // namespace admit
