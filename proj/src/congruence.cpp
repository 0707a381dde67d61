#include "admit/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "admit/error.hpp"

namespace admit {

namespace {

struct UnionFind {
  std::vector<Element> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Element find(Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller root so roots stay least elements.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent[b] = a;
    return true;
  }
  std::vector<Element> reps() {
    std::vector<Element> r(parent.size());
    for (Element i = 0; i < r.size(); ++i) {
      r[i] = find(i);
    }
    return r;
  }
};

}  // namespace

Congruence Congruence::identity(std::size_t n) {
  Congruence c;
  c.rep_.resize(n);
  std::iota(c.rep_.begin(), c.rep_.end(), 0);
  return c;
}

Congruence Congruence::full(std::size_t n) {
  Congruence c;
  c.rep_.assign(n, 0);
  return c;
}

Congruence Congruence::from_labels(std::span<Element const> block_of) {
  Congruence c;
  c.rep_.resize(block_of.size());
  std::unordered_map<Element, Element> first;
  for (Element i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = first.emplace(block_of[i], i);
    c.rep_[i] = it->second;
  }
  return c;
}

std::size_t Congruence::block_count() const {
  std::size_t c = 0;
  for (Element i = 0; i < rep_.size(); ++i) {
    c += rep_[i] == i;
  }
  return c;
}

std::vector<Element> Congruence::block_index() const {
  std::vector<Element> idx(rep_.size());
  Element next = 0;
  for (Element i = 0; i < rep_.size(); ++i) {
    idx[i] = rep_[i] == i ? next++ : idx[rep_[i]];
  }
  return idx;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<Element> idx = block_index();
  std::vector<std::vector<Element>> out(block_count());
  for (Element i = 0; i < rep_.size(); ++i) {
    out[idx[i]].push_back(i);
  }
  return out;
}

bool Congruence::is_identity() const {
  for (Element i = 0; i < rep_.size(); ++i) {
    if (rep_[i] != i) {
      return false;
    }
  }
  return true;
}

bool Congruence::is_full() const {
  return std::all_of(rep_.begin(), rep_.end(),
                     [](Element r) { return r == 0; });
}

bool Congruence::leq(Congruence const& other) const {
  for (Element i = 0; i < rep_.size(); ++i) {
    if (other.rep_[i] != other.rep_[rep_[i]]) {
      return false;
    }
  }
  return true;
}

Congruence Congruence::meet(Congruence const& other) const {
  std::vector<Element> labels(rep_.size());
  for (Element i = 0; i < rep_.size(); ++i) {
    labels[i] = rep_[i] * static_cast<Element>(rep_.size()) + other.rep_[i];
  }
  return from_labels(labels);
}

Congruence Congruence::join(Congruence const& other) const {
  UnionFind uf(rep_.size());
  for (Element i = 0; i < rep_.size(); ++i) {
    uf.unite(i, rep_[i]);
    uf.unite(i, other.rep_[i]);
  }
  Congruence c;
  c.rep_ = uf.reps();
  return c;
}

bool is_compatible(FiniteAlgebra const& a, Congruence const& theta) {
  std::size_t const n = a.size();
  if (theta.size() != n) {
    return false;
  }
  Signature const& sig = a.signature();
  // It suffices to check each operation against single-argument changes
  // x -> rep(x).
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    std::size_t const len = table_size(n, ar);
    std::vector<Element> args(static_cast<std::size_t>(ar));
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int j = ar; j-- > 0;) {
        args[static_cast<std::size_t>(j)] = static_cast<Element>(rest % n);
        rest /= n;
      }
      Element const v = theta.rep(a.table(op)[idx]);
      for (std::size_t j = 0; j < args.size(); ++j) {
        Element const keep = args[j];
        args[j] = theta.rep(keep);
        bool ok = theta.rep(a.apply(op, args)) == v;
        args[j] = keep;
        if (!ok) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence generated_congruence(
    FiniteAlgebra const& a,
    std::span<std::pair<Element, Element> const> pairs) {
  std::size_t const n = a.size();
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> work;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw AlgebraError("generated_congruence: element out of range");
    }
    if (uf.unite(x, y)) {
      work.emplace_back(x, y);
    }
  }
  Signature const& sig = a.signature();
  std::vector<Element> args;
  // Each union is pushed once; translating the spanning edges suffices.
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      int const ar = sig[op].arity;
      if (ar == 0) {
        continue;
      }
      if (ar == 1) {
        Element u = a.unary(op, x);
        Element v = a.unary(op, y);
        if (uf.unite(u, v)) {
          work.emplace_back(u, v);
        }
        continue;
      }
      if (ar == 2) {
        for (Element z = 0; z < n; ++z) {
          Element u = a.binary(op, x, z);
          Element v = a.binary(op, y, z);
          if (uf.unite(u, v)) {
            work.emplace_back(u, v);
          }
          u = a.binary(op, z, x);
          v = a.binary(op, z, y);
          if (uf.unite(u, v)) {
            work.emplace_back(u, v);
          }
        }
        continue;
      }
      auto const k = static_cast<std::size_t>(ar);
      args.assign(k, 0);
      std::size_t const others = table_size(n, ar - 1);
      for (std::size_t pos = 0; pos < k; ++pos) {
        for (std::size_t idx = 0; idx < others; ++idx) {
          std::size_t rest = idx;
          for (std::size_t j = k; j-- > 0;) {
            if (j == pos) {
              continue;
            }
            args[j] = static_cast<Element>(rest % n);
            rest /= n;
          }
          args[pos] = x;
          Element u = a.apply(op, args);
          args[pos] = y;
          Element v = a.apply(op, args);
          if (uf.unite(u, v)) {
            work.emplace_back(u, v);
          }
        }
      }
    }
  }
  std::vector<Element> r = uf.reps();
  return Congruence::from_labels(r);
}

Congruence principal_congruence(FiniteAlgebra const& a, Element x, Element y) {
  std::pair<Element, Element> p{x, y};
  return generated_congruence(a, std::span(&p, 1));
}

std::vector<Congruence> congruence_lattice(FiniteAlgebra const& a) {
  std::size_t const n = a.size();
  std::set<Congruence> principals;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      principals.insert(principal_congruence(a, x, y));
    }
  }
  std::set<Congruence> all;
  std::vector<Congruence> frontier{Congruence::identity(n)};
  all.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (auto const& t : frontier) {
      for (auto const& p : principals) {
        Congruence j = t.join(p);
        if (all.insert(j).second) {
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(),
                   [](Congruence const& l, Congruence const& r) {
                     return l.block_count() > r.block_count();
                   });
  return out;
}

Quotient quotient(FiniteAlgebra const& a, Congruence const& theta,
                  std::string name) {
  if (theta.size() != a.size() || !is_compatible(a, theta)) {
    throw AlgebraError("quotient: partition is not a congruence of '" +
                       a.name() + "'");
  }
  std::size_t const n = a.size();
  std::vector<Element> idx = theta.block_index();
  std::vector<Element> reps;
  for (Element i = 0; i < n; ++i) {
    if (theta.rep(i) == i) {
      reps.push_back(i);
    }
  }
  std::size_t const m = reps.size();
  Signature const& sig = a.signature();
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    std::size_t const len = table_size(m, ar);
    std::vector<Element> table(len);
    std::vector<Element> args(static_cast<std::size_t>(ar));
    for (std::size_t t = 0; t < len; ++t) {
      std::size_t rest = t;
      for (int j = ar; j-- > 0;) {
        args[static_cast<std::size_t>(j)] = reps[rest % m];
        rest /= m;
      }
      table[t] = idx[a.apply(op, args)];
    }
    tables.push_back(std::move(table));
  }
  std::vector<std::string> labels;
  for (Element r : reps) {
    labels.push_back(a.label(r));
  }
  if (name.empty()) {
    name = a.name() + "/theta";
  }
  FiniteAlgebra q(std::move(name), sig, m, std::move(tables),
                  std::move(labels));
  return {q, Homomorphism{a, q, std::move(idx)}};
}

}  // namespace admit
