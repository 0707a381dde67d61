#include "admit/free_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "admit/constructions.hpp"
#include "admit/error.hpp"
#include "admit/kernels.hpp"

namespace admit {

namespace {

std::size_t checked_width(FiniteAlgebra const& m, std::size_t s) {
  if (s == 0) {
    throw AlgebraError("free algebra: need at least one generator");
  }
  if (m.size() > 255) {
    throw AlgebraError("free algebra: generating algebra has more than 255 "
                       "elements");
  }
  std::size_t w = 1;
  for (std::size_t i = 0; i < s; ++i) {
    w *= m.size();
    if (w > (std::size_t{1} << 24)) {
      throw AlgebraError("free algebra: |M|^s too large");
    }
  }
  return w;
}

// Projection tuple of generator g over the points of M^s.
std::vector<Byte> projection(std::size_t n, std::size_t s, std::size_t g) {
  std::size_t w = 1;
  for (std::size_t i = 0; i < s; ++i) {
    w *= n;
  }
  std::size_t stride = 1;
  for (std::size_t i = g + 1; i < s; ++i) {
    stride *= n;
  }
  std::vector<Byte> t(w);
  for (std::size_t c = 0; c < w; ++c) {
    t[c] = static_cast<Byte>((c / stride) % n);
  }
  return t;
}

std::vector<std::vector<Byte>> byte_tables(FiniteAlgebra const& m) {
  std::vector<std::vector<Byte>> out;
  for (std::size_t op = 0; op < m.signature().size(); ++op) {
    auto t = m.table(op);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

}  // namespace

std::vector<Element> FreeAlgebra::point(std::size_t coordinate) const {
  std::size_t const n = base_.size();
  std::vector<Element> p(s_);
  for (std::size_t i = s_; i-- > 0;) {
    p[i] = static_cast<Element>(coordinate % n);
    coordinate /= n;
  }
  return p;
}

std::optional<Element> FreeAlgebra::find(std::span<Byte const> tuple) const {
  if (tuple.size() != width()) {
    return std::nullopt;
  }
  auto r = tuples_.find(tuple);
  if (!r) {
    return std::nullopt;
  }
  return *r;
}

Term FreeAlgebra::term_of(Element e) const {
  if (!has_terms()) {
    throw AlgebraError("free algebra has no stored term representatives");
  }
  if (e >= size()) {
    throw AlgebraError("term_of: element out of range");
  }
  std::int32_t const op = deriv_op_[e];
  if (op < 0) {
    return Term::variable(deriv_args_[deriv_offset_[e]]);
  }
  auto const& sym = base_.signature()[static_cast<std::size_t>(op)];
  std::vector<Term> args;
  for (int i = 0; i < sym.arity; ++i) {
    args.push_back(
        term_of(deriv_args_[deriv_offset_[e] + static_cast<std::size_t>(i)]));
  }
  return Term::apply(sym.name, std::move(args));
}

Element FreeAlgebra::apply(std::size_t op, std::span<Element const> args) const {
  std::size_t const w = width();
  std::vector<Byte> out(w);
  std::vector<Element> vals(args.size());
  for (std::size_t c = 0; c < w; ++c) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      vals[i] = tuples_[args[i]][c];
    }
    out[c] = static_cast<Byte>(base_.apply(op, vals));
  }
  auto r = tuples_.find(out);
  if (!r) {
    throw AlgebraError("free algebra not closed under '" +
                       base_.signature()[op].name + "'");
  }
  return *r;
}

FiniteAlgebra FreeAlgebra::to_algebra(std::size_t max_entries) const {
  Signature const& sig = base_.signature();
  std::size_t const n = size();
  std::size_t total = 0;
  for (auto const& op : sig) {
    total += table_size(n, op.arity);
    if (total > max_entries) {
      throw BudgetExceeded("free algebra operation tables exceed " +
                               std::to_string(max_entries) + " entries",
                           n);
    }
  }
  auto const& k = kernels::active();
  auto const bt = byte_tables(base_);
  std::size_t const m = base_.size();
  std::size_t const w = width();
  std::vector<Byte> buf(w);
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    std::vector<Element> table(table_size(n, ar));
    if (ar == 0) {
      std::fill(buf.begin(), buf.end(), bt[op][0]);
      table[0] = *tuples_.find(buf);
    } else if (ar == 1) {
      for (Element x = 0; x < n; ++x) {
        k.lift_unary(bt[op].data(), m, tuples_[x].data(), buf.data(), w);
        table[x] = *tuples_.find(buf);
      }
    } else if (ar == 2) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          k.lift_binary(bt[op].data(), m, tuples_[x].data(), tuples_[y].data(),
                        buf.data(), w);
          table[std::size_t{x} * n + y] = *tuples_.find(buf);
        }
      }
    } else {
      std::vector<Element> args(static_cast<std::size_t>(ar));
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t rest = idx;
        for (int j = ar; j-- > 0;) {
          args[static_cast<std::size_t>(j)] = static_cast<Element>(rest % n);
          rest /= n;
        }
        table[idx] = apply(op, args);
      }
    }
    tables.push_back(std::move(table));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element e = 0; e < n; ++e) {
    labels.push_back("f" + std::to_string(e));
  }
  return FiniteAlgebra("F_" + base_.name() + "(" + std::to_string(s_) + ")",
                       sig, n, std::move(tables), std::move(labels));
}

FreeAlgebra free_algebra(FiniteAlgebra const& m, std::size_t s,
                         FreeAlgebraOptions opts) {
  std::size_t const w = checked_width(m, s);
  std::size_t const n = m.size();
  Signature const& sig = m.signature();
  auto const& k = kernels::active();
  auto const bt = byte_tables(m);
  std::vector<char> commutative(sig.size());
  for (std::size_t op = 0; op < sig.size(); ++op) {
    commutative[op] = is_commutative(m, op);
  }

  FreeAlgebra f;
  f.base_ = m;
  f.s_ = s;
  f.tuples_ = TupleSet(w);

  auto over_budget = [&] {
    std::size_t bytes = f.tuples_.memory_bytes() +
                        f.deriv_op_.capacity() * 4 +
                        f.deriv_offset_.capacity() * 4 +
                        f.deriv_args_.capacity() * 4;
    return bytes > opts.memory_budget;
  };
  auto add = [&](std::span<Byte const> t, std::int32_t op,
                 std::span<std::uint32_t const> args) -> std::uint32_t {
    auto [idx, fresh] = f.tuples_.insert(t);
    if (fresh) {
      f.deriv_op_.push_back(op);
      f.deriv_offset_.push_back(static_cast<std::uint32_t>(f.deriv_args_.size()));
      f.deriv_args_.insert(f.deriv_args_.end(), args.begin(), args.end());
      if ((idx & 0xFFF) == 0 && over_budget()) {
        throw BudgetExceeded("free algebra exceeds the memory budget of " +
                                 std::to_string(opts.memory_budget) + " bytes",
                             f.tuples_.size());
      }
    }
    return idx;
  };

  for (std::size_t g = 0; g < s; ++g) {
    auto t = projection(n, s, g);
    std::uint32_t gi = static_cast<std::uint32_t>(g);
    f.generators_.push_back(add(t, -1, std::span(&gi, 1)));
  }
  std::vector<Byte> buf(w);
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity == 0) {
      std::fill(buf.begin(), buf.end(), bt[op][0]);
      add(buf, static_cast<std::int32_t>(op), {});
    }
  }

  std::vector<Byte> x(w);
  std::vector<Byte> y(w);
  std::uint32_t args[2];
  std::vector<std::uint32_t> pos_args;
  std::vector<Element> vals;
  for (std::size_t pos = 0; pos < f.tuples_.size(); ++pos) {
    std::copy_n(f.tuples_[pos].data(), w, x.data());
    auto const p = static_cast<std::uint32_t>(pos);
    for (std::size_t op = 0; op < sig.size(); ++op) {
      int const ar = sig[op].arity;
      auto const opi = static_cast<std::int32_t>(op);
      if (ar == 1) {
        k.lift_unary(bt[op].data(), n, x.data(), buf.data(), w);
        args[0] = p;
        add(buf, opi, std::span(args, 1));
      } else if (ar == 2) {
        for (std::uint32_t j = 0; j <= p; ++j) {
          std::copy_n(f.tuples_[j].data(), w, y.data());
          k.lift_binary(bt[op].data(), n, x.data(), y.data(), buf.data(), w);
          args[0] = p;
          args[1] = j;
          add(buf, opi, std::span(args, 2));
          if (!commutative[op] && j != p) {
            k.lift_binary(bt[op].data(), n, y.data(), x.data(), buf.data(), w);
            args[0] = j;
            args[1] = p;
            add(buf, opi, std::span(args, 2));
          }
        }
      } else if (ar > 2) {
        auto const ka = static_cast<std::size_t>(ar);
        pos_args.assign(ka, 0);
        vals.resize(ka);
        while (true) {
          if (std::find(pos_args.begin(), pos_args.end(), p) !=
              pos_args.end()) {
            for (std::size_t c = 0; c < w; ++c) {
              for (std::size_t i = 0; i < ka; ++i) {
                vals[i] = f.tuples_[pos_args[i]][c];
              }
              buf[c] = static_cast<Byte>(m.apply(op, vals));
            }
            add(buf, opi, pos_args);
          }
          std::size_t i = ka;
          bool done = true;
          while (i > 0) {
            --i;
            if (++pos_args[i] <= p) {
              done = false;
              break;
            }
            pos_args[i] = 0;
          }
          if (done) {
            break;
          }
        }
      }
    }
  }
  return f;
}

namespace {

// Binary constraint network of the relational free-algebra criterion.
struct TermFunctionCsp {
  std::size_t n = 0;
  std::size_t vars = 0;
  std::vector<std::uint64_t> initial;  // per variable
  // allowed[(c * vars + d) * n + v] for c < d: admissible values of d when
  // c takes v. Only constrained pairs appear in `next`.
  std::vector<std::uint64_t> allowed;
  std::vector<std::vector<std::uint32_t>> next;

  TermFunctionCsp(FiniteAlgebra const& m, std::size_t s) {
    n = m.size();
    if (n > 64) {
      throw AlgebraError("relational free algebra: |M| must be at most 64");
    }
    vars = checked_width(m, s);
    if (!find_majority_term(m)) {
      throw AlgebraError("relational free algebra: '" + m.name() +
                         "' has no detectable majority term");
    }
    FiniteAlgebra const m2 = power(m, 2);
    std::vector<std::vector<Byte>> proj;
    for (std::size_t g = 0; g < s; ++g) {
      proj.push_back(projection(n, s, g));
    }

    initial.resize(vars);
    std::vector<Element> gens;
    for (std::size_t c = 0; c < vars; ++c) {
      gens.clear();
      for (std::size_t g = 0; g < s; ++g) {
        gens.push_back(proj[g][c]);
      }
      std::uint64_t mask = 0;
      for (Element e : subalgebra_closure(m, gens)) {
        mask |= std::uint64_t{1} << e;
      }
      initial[c] = mask;
    }

    allowed.assign(vars * vars * n, 0);
    next.resize(vars);
    std::map<std::vector<Element>, std::vector<Element>> memo;
    for (std::size_t c = 0; c < vars; ++c) {
      for (std::size_t d = c + 1; d < vars; ++d) {
        gens.clear();
        for (std::size_t g = 0; g < s; ++g) {
          gens.push_back(static_cast<Element>(proj[g][c] * n + proj[g][d]));
        }
        std::sort(gens.begin(), gens.end());
        auto it = memo.find(gens);
        if (it == memo.end()) {
          it = memo.emplace(gens, subalgebra_closure(m2, gens)).first;
        }
        std::uint64_t* row = &allowed[(c * vars + d) * n];
        for (Element e : it->second) {
          row[e / n] |= std::uint64_t{1} << (e % n);
        }
        bool constrained = false;
        for (std::size_t v = 0; v < n; ++v) {
          if ((initial[c] >> v & 1) && (row[v] & initial[d]) != initial[d]) {
            constrained = true;
          }
        }
        if (constrained) {
          next[c].push_back(static_cast<std::uint32_t>(d));
        }
      }
    }
  }

  // Calls visit(values) for every solution, values in lexicographic order.
  template <typename Visit>
  void solve(Visit&& visit) const {
    std::vector<std::uint64_t> dom(vars * (vars + 1));
    std::copy(initial.begin(), initial.end(), dom.begin());
    std::vector<Byte> val(vars);
    solve_at(0, dom, val, visit);
  }

  template <typename Visit>
  void solve_at(std::size_t c, std::vector<std::uint64_t>& dom,
                std::vector<Byte>& val, Visit& visit) const {
    if (c == vars) {
      visit(val);
      return;
    }
    std::uint64_t const* cur = &dom[c * vars];
    std::uint64_t* nxt = &dom[(c + 1) * vars];
    std::uint64_t choices = cur[c];
    while (choices) {
      auto const v = static_cast<std::size_t>(std::countr_zero(choices));
      choices &= choices - 1;
      std::copy(cur + c + 1, cur + vars, nxt + c + 1);
      bool ok = true;
      for (std::uint32_t d : next[c]) {
        nxt[d] &= allowed[(c * vars + d) * n + v];
        if (nxt[d] == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        val[c] = static_cast<Byte>(v);
        solve_at(c + 1, dom, val, visit);
      }
    }
  }
};

}  // namespace

FreeAlgebra free_algebra_relational(FiniteAlgebra const& m, std::size_t s,
                                    FreeAlgebraOptions opts) {
  TermFunctionCsp csp(m, s);
  FreeAlgebra f;
  f.base_ = m;
  f.s_ = s;
  f.tuples_ = TupleSet(csp.vars);
  csp.solve([&](std::vector<Byte> const& t) {
    f.tuples_.insert(t);
    if ((f.tuples_.size() & 0xFFF) == 0 &&
        f.tuples_.memory_bytes() > opts.memory_budget) {
      throw BudgetExceeded("free algebra exceeds the memory budget of " +
                               std::to_string(opts.memory_budget) + " bytes",
                           f.tuples_.size());
    }
  });
  for (std::size_t g = 0; g < s; ++g) {
    auto t = projection(m.size(), s, g);
    f.generators_.push_back(*f.tuples_.find(t));
  }
  return f;
}

std::size_t free_algebra_size_relational(FiniteAlgebra const& m,
                                         std::size_t s) {
  TermFunctionCsp csp(m, s);
  std::size_t count = 0;
  csp.solve([&](std::vector<Byte> const&) { ++count; });
  return count;
}

std::optional<Term> find_majority_term(FiniteAlgebra const& m) {
  Signature const& sig = m.signature();
  std::size_t const n = m.size();
  for (std::size_t mo = 0; mo < sig.size(); ++mo) {
    if (sig[mo].arity != 2) {
      continue;
    }
    for (std::size_t jo = 0; jo < sig.size(); ++jo) {
      if (sig[jo].arity != 2) {
        continue;
      }
      auto med = [&](Element x, Element y, Element z) {
        return m.binary(jo, m.binary(jo, m.binary(mo, x, y), m.binary(mo, y, z)),
                        m.binary(mo, x, z));
      };
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        for (Element y = 0; y < n && ok; ++y) {
          ok = med(x, x, y) == x && med(x, y, x) == x && med(y, x, x) == x;
        }
      }
      if (ok) {
        auto v = [](std::size_t i) { return Term::variable(i); };
        auto mt = [&](Term a, Term b) {
          return Term::apply(sig[mo].name, {std::move(a), std::move(b)});
        };
        auto jt = [&](Term a, Term b) {
          return Term::apply(sig[jo].name, {std::move(a), std::move(b)});
        };
        return jt(jt(mt(v(0), v(1)), mt(v(1), v(2))), mt(v(0), v(2)));
      }
    }
  }
  return std::nullopt;
}

}  // namespace admit
