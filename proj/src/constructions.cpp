#include "admit/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "admit/error.hpp"

namespace admit {

namespace {

std::string join_labels(std::vector<std::string const*> const& parts,
                        bool compact) {
  std::string out;
  if (!compact) {
    out += '(';
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!compact && i > 0) {
      out += ',';
    }
    out += *parts[i];
  }
  if (!compact) {
    out += ')';
  }
  return out;
}

// Calls f(args) for every k-tuple over `elems` that uses at least one element
// at position >= `fresh_from`. Positions index into `elems`.
template <typename F>
void for_each_new_tuple(std::vector<Element> const& elems,
                        std::size_t fresh_from, int arity, F&& f) {
  std::size_t const m = elems.size();
  if (arity == 0 || fresh_from >= m) {
    return;
  }
  std::vector<std::size_t> pos(static_cast<std::size_t>(arity), 0);
  std::vector<Element> args(static_cast<std::size_t>(arity));
  while (true) {
    bool fresh = false;
    for (std::size_t p : pos) {
      fresh = fresh || p >= fresh_from;
    }
    if (fresh) {
      for (std::size_t i = 0; i < pos.size(); ++i) {
        args[i] = elems[pos[i]];
      }
      f(args);
    }
    std::size_t i = pos.size();
    while (i > 0) {
      --i;
      if (++pos[i] < m) {
        break;
      }
      pos[i] = 0;
      if (i == 0) {
        return;
      }
    }
  }
}

}  // namespace

FiniteAlgebra product(std::span<FiniteAlgebra const> factors,
                      std::string name) {
  if (factors.empty()) {
    throw AlgebraError("product of an empty family");
  }
  Signature const& sig = factors[0].signature();
  std::size_t n = 1;
  bool compact = true;
  for (auto const& f : factors) {
    if (!(f.signature() == sig)) {
      throw AlgebraError("product: signature mismatch between '" +
                         factors[0].name() + "' and '" + f.name() + "'");
    }
    n *= f.size();
    for (auto const& l : f.labels()) {
      compact = compact && l.size() == 1;
    }
  }
  std::size_t const k = factors.size();
  // coords[e * k + i] = i-th coordinate of e.
  std::vector<Element> coords(n * k);
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t rest = e;
    for (std::size_t i = k; i-- > 0;) {
      coords[e * k + i] = static_cast<Element>(rest % factors[i].size());
      rest /= factors[i].size();
    }
  }
  auto encode = [&](std::vector<Element> const& c) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < k; ++i) {
      e = e * factors[i].size() + c[i];
    }
    return static_cast<Element>(e);
  };

  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    std::size_t const len = table_size(n, ar);
    std::vector<Element> table(len);
    std::vector<Element> args(static_cast<std::size_t>(ar));
    std::vector<Element> fargs(static_cast<std::size_t>(ar));
    std::vector<Element> out(k);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int j = ar; j-- > 0;) {
        args[static_cast<std::size_t>(j)] = static_cast<Element>(rest % n);
        rest /= n;
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (int j = 0; j < ar; ++j) {
          fargs[static_cast<std::size_t>(j)] =
              coords[args[static_cast<std::size_t>(j)] * k + i];
        }
        out[i] = factors[i].apply(op, fargs);
      }
      table[idx] = encode(out);
    }
    tables.push_back(std::move(table));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<std::string const*> parts(k);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t i = 0; i < k; ++i) {
      parts[i] = &factors[i].label(coords[e * k + i]);
    }
    labels.push_back(join_labels(parts, compact));
  }
  if (name.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      name += (i ? "x" : "") + factors[i].name();
    }
  }
  return FiniteAlgebra(std::move(name), sig, n, std::move(tables),
                       std::move(labels));
}

FiniteAlgebra power(FiniteAlgebra const& a, std::size_t exponent,
                    std::string name) {
  std::vector<FiniteAlgebra> f(exponent, a);
  if (name.empty()) {
    name = a.name() + "^" + std::to_string(exponent);
  }
  return product(f, std::move(name));
}

FiniteAlgebra trivial_algebra(Signature const& sig, std::string name) {
  std::vector<std::vector<Element>> tables;
  for (auto const& op : sig) {
    (void)op;
    tables.push_back({0});
  }
  return FiniteAlgebra(std::move(name), sig, 1, std::move(tables), {"*"});
}

std::vector<Element> subalgebra_closure(FiniteAlgebra const& a,
                                        std::span<Element const> gens) {
  std::size_t const n = a.size();
  std::vector<char> in(n, 0);
  std::vector<Element> elems;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      elems.push_back(e);
    }
  };
  for (Element g : gens) {
    if (g >= n) {
      throw AlgebraError("subalgebra_closure: element " + std::to_string(g) +
                         " out of range");
    }
    add(g);
  }
  Signature const& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity == 0) {
      add(a.constant(op));
    }
  }
  std::size_t done = 0;
  while (done < elems.size()) {
    std::size_t const frontier = elems.size();
    // Snapshot so products discovered in this round wait for the next one.
    std::vector<Element> snapshot = elems;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      int const ar = sig[op].arity;
      if (ar == 1) {
        for (std::size_t i = done; i < frontier; ++i) {
          add(a.unary(op, snapshot[i]));
        }
      } else if (ar == 2) {
        for (std::size_t i = done; i < frontier; ++i) {
          for (std::size_t j = 0; j < frontier; ++j) {
            add(a.binary(op, snapshot[i], snapshot[j]));
            add(a.binary(op, snapshot[j], snapshot[i]));
          }
        }
      } else if (ar > 2) {
        for_each_new_tuple(snapshot, done, ar,
                           [&](std::vector<Element> const& args) {
                             add(a.apply(op, args));
                           });
      }
    }
    done = frontier;
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subalgebra induced_subalgebra(FiniteAlgebra const& a,
                              std::span<Element const> subuniverse,
                              std::string name) {
  std::vector<Element> inc(subuniverse.begin(), subuniverse.end());
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  if (inc.empty()) {
    throw AlgebraError("induced_subalgebra: empty subuniverse");
  }
  std::size_t const n = a.size();
  std::vector<Element> index(n, static_cast<Element>(-1));
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (inc[i] >= n) {
      throw AlgebraError("induced_subalgebra: element out of range");
    }
    index[inc[i]] = static_cast<Element>(i);
  }
  std::size_t const m = inc.size();
  Signature const& sig = a.signature();
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    std::size_t const len = table_size(m, ar);
    std::vector<Element> table(len);
    std::vector<Element> args(static_cast<std::size_t>(ar));
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int j = ar; j-- > 0;) {
        args[static_cast<std::size_t>(j)] = inc[rest % m];
        rest /= m;
      }
      Element r = a.apply(op, args);
      if (index[r] == static_cast<Element>(-1)) {
        throw AlgebraError("induced_subalgebra: set is not closed under '" +
                           sig[op].name + "'");
      }
      table[idx] = index[r];
    }
    tables.push_back(std::move(table));
  }
  std::vector<std::string> labels;
  for (Element e : inc) {
    labels.push_back(a.label(e));
  }
  if (name.empty()) {
    name = a.name() + "_sub";
  }
  return {FiniteAlgebra(std::move(name), sig, m, std::move(tables),
                        std::move(labels)),
          std::move(inc)};
}

std::vector<Element> generating_set(FiniteAlgebra const& a) {
  std::size_t const n = a.size();
  std::vector<Element> gens;
  std::vector<Element> closure = subalgebra_closure(a, gens);
  while (closure.size() < n) {
    std::vector<char> in(n, 0);
    for (Element e : closure) {
      in[e] = 1;
    }
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 0; x < n; ++x) {
      if (in[x]) {
        continue;
      }
      if (n > 64) {
        best = x;
        break;
      }
      gens.push_back(x);
      std::size_t s = subalgebra_closure(a, gens).size();
      gens.pop_back();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    closure = subalgebra_closure(a, gens);
  }
  return gens;
}

std::optional<std::vector<Element>> generating_set_of_size(
    FiniteAlgebra const& a, std::size_t k) {
  std::size_t const n = a.size();
  if (k > n) {
    return std::nullopt;
  }
  std::vector<Element> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (subalgebra_closure(a, pick).size() == n) {
      return pick;
    }
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return std::nullopt;
    }
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
}

std::size_t generator_count(FiniteAlgebra const& a) {
  for (std::size_t k = 0;; ++k) {
    if (generating_set_of_size(a, k)) {
      return k;
    }
  }
}

bool is_commutative(FiniteAlgebra const& a, std::size_t op) {
  if (a.arity(op) != 2) {
    return false;
  }
  std::size_t const n = a.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (a.binary(op, x, y) != a.binary(op, y, x)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace admit
