#include "admit/quasivariety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "admit/error.hpp"

namespace admit {

bool multiset_leq(MultisetOfSizes x, MultisetOfSizes y) {
  // For a total base order the multiset order is lexicographic comparison of
  // the descending sortings, a proper prefix being smaller.
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  return !std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

MultisetOfSizes size_multiset(GeneratorSet const& k) {
  MultisetOfSizes m;
  for (auto const& a : k) {
    m.push_back(a.size());
  }
  return m;
}

IspResult in_isp(FiniteAlgebra const& c, GeneratorSet const& gens) {
  std::size_t const n = c.size();
  IspResult r;
  // sep[x * n + y] for x < y
  std::vector<char> sep(n * n, 0);
  auto mark = [&](std::span<Element const> h) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (h[x] != h[y]) {
          sep[x * n + y] = 1;
        }
      }
    }
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (sep[x * n + y]) {
        continue;
      }
      bool found = false;
      for (std::size_t i = 0; i < gens.size() && !found; ++i) {
        for_each_homomorphism(c, gens[i], {}, [&](std::span<Element const> h) {
          if (h[x] == h[y]) {
            return true;
          }
          mark(h);
          r.family.push_back(
              {i, Homomorphism{c, gens[i], {h.begin(), h.end()}}});
          found = true;
          return false;
        });
      }
      if (!found) {
        r.unseparated = std::make_pair(x, y);
        return r;
      }
    }
  }
  r.member = true;
  return r;
}

std::vector<Congruence> q_congruences(FiniteAlgebra const& a,
                                      GeneratorSet const& gens) {
  std::vector<Congruence> out;
  for (auto const& t : congruence_lattice(a)) {
    if (in_isp(quotient(a, t).algebra, gens).member) {
      out.push_back(t);
    }
  }
  return out;
}

bool is_q_subdirectly_irreducible(FiniteAlgebra const& a,
                                  GeneratorSet const& gens) {
  auto const qc = q_congruences(a, gens);
  Congruence const delta = Congruence::identity(a.size());
  if (std::find(qc.begin(), qc.end(), delta) == qc.end()) {
    throw AlgebraError("'" + a.name() +
                       "' is not in the quasivariety generated by the set");
  }
  if (a.size() == 1) {
    return false;
  }
  Congruence m = Congruence::full(a.size());
  for (auto const& t : qc) {
    if (t != delta) {
      m = m.meet(t);
    }
  }
  return m != delta;
}

std::vector<Congruence> meet_irreducibles(
    std::vector<Congruence> const& lattice) {
  std::vector<Congruence> out;
  for (auto const& t : lattice) {
    std::optional<Congruence> m;
    for (auto const& u : lattice) {
      if (u != t && t.leq(u)) {
        m = m ? m->meet(u) : u;
      }
    }
    if (m && *m != t) {
      out.push_back(t);
    }
  }
  return out;
}

namespace {

// Drops members that embed into a larger member and isomorphic duplicates;
// the one-element algebra goes unless nothing else is left.
GeneratorSet final_sweep(GeneratorSet const& m, Signature const& sig) {
  GeneratorSet kept;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() == 1) {
      continue;
    }
    bool drop = false;
    for (std::size_t j = 0; j < m.size() && !drop; ++j) {
      drop = j != i && m[j].size() > m[i].size() && embeds(m[i], m[j]);
    }
    for (auto const& k : kept) {
      drop = drop || is_isomorphic(m[i], k);
    }
    if (!drop) {
      kept.push_back(m[i]);
    }
  }
  if (kept.empty()) {
    kept.push_back(trivial_algebra(sig));
  }
  return kept;
}

void require_shared_signature(GeneratorSet const& k) {
  if (k.empty()) {
    throw AlgebraError("generator set is empty");
  }
  for (auto const& a : k) {
    if (!(a.signature() == k[0].signature())) {
      throw AlgebraError("generator set mixes signatures");
    }
  }
}

}  // namespace

GeneratorSet min_gen_set_bfs(GeneratorSet const& k) {
  require_shared_signature(k);
  GeneratorSet m = k;
  std::size_t i = 0;
  while (i < m.size()) {
    FiniteAlgebra const a = m[i];
    std::size_t const n = a.size();
    Congruence meet = Congruence::full(n);
    std::vector<FiniteAlgebra> only_into_a;
    for (auto const& t : congruence_lattice(a)) {
      if (t.is_identity()) {
        continue;
      }
      FiniteAlgebra q = quotient(a, t).algebra;
      bool into_a = embeds(q, a);
      bool into_other = false;
      for (std::size_t j = 0; j < m.size() && !into_other; ++j) {
        into_other = j != i && embeds(q, m[j]);
      }
      if (into_a || into_other) {
        meet = meet.meet(t);
      }
      if (into_a && !into_other) {
        only_into_a.push_back(std::move(q));
      }
    }
    if (meet.is_identity()) {
      m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& q : only_into_a) {
        m.push_back(std::move(q));
      }
    } else {
      ++i;
    }
  }
  return final_sweep(m, k[0].signature());
}

GeneratorSet min_gen_set_dfs(GeneratorSet const& k) {
  require_shared_signature(k);
  GeneratorSet s;
  for (auto const& a : k) {
    auto const qc = q_congruences(a, k);
    auto const irr = meet_irreducibles(qc);
    for (auto const& t : irr) {
      bool minimal = true;
      for (auto const& u : irr) {
        minimal = minimal && !(u != t && u.leq(t));
      }
      if (!minimal) {
        continue;
      }
      FiniteAlgebra q = quotient(a, t).algebra;
      bool dup = false;
      for (auto const& e : s) {
        dup = dup || is_isomorphic(q, e);
      }
      if (!dup) {
        s.push_back(std::move(q));
      }
    }
  }
  return final_sweep(s, k[0].signature());
}

SubPreHom sub_pre_hom(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  if (!(a.signature() == b.signature())) {
    throw AlgebraError("sub_pre_hom: signature mismatch");
  }
  std::size_t const g = generator_count(b);
  std::size_t const n = a.size();
  // Distinct subuniverses generated by at most g elements, with the first
  // generating set (by size, then lexicographically) that produced each.
  std::map<std::vector<Element>, std::vector<Element>> found;
  std::vector<std::vector<Element>> order;
  for (std::size_t k = 0; k <= g && k <= n; ++k) {
    std::vector<Element> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
      pick[i] = static_cast<Element>(i);
    }
    while (true) {
      auto sub = subalgebra_closure(a, pick);
      if (sub.size() >= b.size() && !found.contains(sub)) {
        found.emplace(sub, pick);
        order.push_back(std::move(sub));
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](auto const& l, auto const& r) {
                     if (l.size() != r.size()) {
                       return l.size() < r.size();
                     }
                     auto const& gl = found.at(l);
                     auto const& gr = found.at(r);
                     if (gl.size() != gr.size()) {
                       return gl.size() < gr.size();
                     }
                     return gl < gr;
                   });
  for (auto const& sub : order) {
    Subalgebra s = induced_subalgebra(a, sub);
    auto h = find_homomorphism(s.algebra, b, {.surjective = true});
    if (h) {
      return {std::move(s), found.at(sub), std::move(*h)};
    }
  }
  throw SearchExhausted("sub_pre_hom: no subalgebra of '" + a.name() +
                            "' maps onto '" + b.name() + "'",
                        g);
}

}  // namespace admit
