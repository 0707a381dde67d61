#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "admit/congruence.hpp"
#include "admit/constructions.hpp"
#include "admit/corpus.hpp"
#include "admit/duality.hpp"
#include "admit/error.hpp"
#include "admit/homomorphism.hpp"
#include "admit/io.hpp"

namespace admit::testing {

namespace {

std::string set_text(FiniteStructure const& x, std::vector<Element> const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? " " : "") + x.label(s[i]);
  }
  return out + "}";
}

// Egos from the corpus whose base generates a quasivariety containing a.
std::optional<AlterEgo> ego_for(FiniteAlgebra const& a) {
  for (auto const& name : corpus::algebra_names()) {
    if (!corpus::has_alter_ego(name)) {
      continue;
    }
    AlterEgo ego = corpus::alter_ego(name);
    if (ego.base.signature() == a.signature() &&
        in_isp(a, {ego.base}).member) {
      return ego;
    }
  }
  return std::nullopt;
}

std::size_t ipow_size(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n;
  }
  return r;
}

std::vector<AlterEgo> corpus_egos() {
  std::vector<AlterEgo> out;
  for (auto const& name : corpus::algebra_names()) {
    if (corpus::has_alter_ego(name)) {
      out.push_back(corpus::alter_ego(name));
    }
  }
  return out;
}

}  // namespace

FiniteAlgebra random_algebra(std::mt19937_64& rng, std::size_t n,
                             Signature const& sig, std::string name) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<std::vector<Element>> tables;
  for (auto const& op : sig) {
    std::vector<Element> t(table_size(n, op.arity));
    for (auto& v : t) {
      v = pick(rng);
    }
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(std::move(name), sig, n, std::move(tables));
}

std::vector<FiniteAlgebra> small_members(AlterEgo const& ego,
                                         std::size_t max_size) {
  FiniteAlgebra const& m = ego.base;
  std::vector<FiniteAlgebra> out;
  auto add = [&](FiniteAlgebra a) {
    if (a.size() > max_size) {
      return;
    }
    for (auto const& b : out) {
      if (is_isomorphic(a, b)) {
        return;
      }
    }
    out.push_back(std::move(a));
  };
  std::size_t const n = m.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      std::vector<Element> gens{x, y};
      auto sub = subalgebra_closure(m, gens);
      add(induced_subalgebra(m, sub,
                             m.name() + "<" + m.label(x) + "," + m.label(y) +
                                 ">")
              .algebra);
    }
  }
  std::size_t const subs = out.size();
  for (std::size_t i = 0; i < subs; ++i) {
    for (std::size_t j = i; j < subs; ++j) {
      if (out[i].size() * out[j].size() <= max_size) {
        FiniteAlgebra f[] = {out[i], out[j]};
        add(product(f, out[i].name() + "x" + out[j].name()));
      }
    }
  }
  return out;
}

std::size_t naive_hom_count(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  std::size_t const n = a.size();
  std::size_t const m = b.size();
  std::vector<Element> map(n, 0);
  std::size_t count = 0;
  while (true) {
    if (preserves_operations(a, b, map)) {
      ++count;
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++map[i] < m) {
        break;
      }
      map[i] = 0;
      if (i == 0) {
        return count;
      }
    }
    if (n == 0) {
      return count;
    }
  }
}

bool multiset_leq_oracle(MultisetOfSizes x, MultisetOfSizes y) {
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  return !std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

Outcome galois_correspondence(FiniteAlgebra const& a, AlterEgo const& ego) {
  Outcome r;
  FiniteStructure const d = dual_space(a, ego);
  std::size_t const n = a.size();
  auto const qcs = q_congruences(a, {ego.base});
  if (d.size > 16) {
    r.fail(a.name() + ": dual space too large to enumerate subsets");
    return r;
  }
  auto z_of = [&](Congruence const& t) {
    std::vector<Element> z;
    for (Element p = 0; p < d.size; ++p) {
      bool ok = true;
      for (Element i = 0; i < n && ok; ++i) {
        ok = d.coords[p][i] == d.coords[p][t.rep(i)];
      }
      if (ok) {
        z.push_back(p);
      }
    }
    return z;
  };
  std::vector<std::vector<Element>> closed;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d.size); ++mask) {
    std::vector<Element> s;
    for (Element p = 0; p < d.size; ++p) {
      if (mask >> p & 1) {
        s.push_back(p);
      }
    }
    if (substructure_closure(d, s) == s) {
      closed.push_back(std::move(s));
    }
  }
  for (auto const& t : qcs) {
    ++r.checked;
    auto const z = z_of(t);
    if (substructure_closure(d, z) != z) {
      r.fail(a.name() + ": image of a Q-congruence is not closed: " +
             set_text(d, z));
    } else if (congruence_of_substructure(d, z, n) != t) {
      r.fail(a.name() + ": congruence -> substructure -> congruence differs");
    }
  }
  for (auto const& z : closed) {
    ++r.checked;
    auto const t = congruence_of_substructure(d, z, n);
    if (std::find(qcs.begin(), qcs.end(), t) == qcs.end()) {
      r.fail(a.name() + ": substructure " + set_text(d, z) +
             " gives a congruence that is not a Q-congruence");
    } else if (z_of(t) != z) {
      r.fail(a.name() + ": substructure " + set_text(d, z) +
             " does not round-trip");
    }
  }
  for (auto const& t1 : qcs) {
    for (auto const& t2 : qcs) {
      auto const z1 = z_of(t1);
      auto const z2 = z_of(t2);
      bool const sub = std::includes(z1.begin(), z1.end(), z2.begin(), z2.end());
      if (t1.leq(t2) != sub) {
        r.fail(a.name() + ": correspondence is not order-reversing");
      }
    }
  }
  if (qcs.size() != closed.size()) {
    r.fail(a.name() + ": " + std::to_string(qcs.size()) +
           " Q-congruences but " + std::to_string(closed.size()) +
           " substructures");
  }
  return r;
}

Outcome isp_three_way(FiniteAlgebra const& b, FiniteAlgebra const& c,
                      AlterEgo const& ego) {
  Outcome r;
  r.checked = 1;
  bool const one = in_isp(c, {b}).member;

  auto const homs = enumerate_homomorphisms(c, b);
  bool two = true;
  for (Element x = 0; x < c.size() && two; ++x) {
    for (Element y = x + 1; y < c.size() && two; ++y) {
      two = std::any_of(homs.begin(), homs.end(),
                        [&](Homomorphism const& h) { return h(x) != h(y); });
    }
  }

  FiniteStructure const db = dual_space(b, ego);
  FiniteStructure const dc = dual_space(c, ego);
  std::vector<char> hit(dc.size, 0);
  for_each_struct_morphism(db, dc, {}, [&](std::span<Element const> m) {
    for (Element p : m) {
      hit[p] = 1;
    }
    return true;
  });
  std::vector<Element> images;
  for (Element p = 0; p < dc.size; ++p) {
    if (hit[p]) {
      images.push_back(p);
    }
  }
  bool const three = substructure_closure(dc, images).size() == dc.size;

  if (one != two || two != three) {
    r.fail("in ISP(" + b.name() + ") for " + c.name() + ": membership " +
           std::to_string(one) + ", separation " + std::to_string(two) +
           ", dual generation " + std::to_string(three));
  }
  return r;
}

Outcome evaluation_is_isomorphism(AlterEgo const& ego) {
  Outcome r;
  r.checked = 1;
  auto const e = natural_evaluation(ego.base, ego);
  if (!e.map.injective() || !e.map.surjective()) {
    r.fail(ego.base.name() + ": e_M is not bijective (|E(D(M))| = " +
           std::to_string(e.second_dual.algebra.size()) + ")");
  } else if (!preserves_operations(ego.base, e.second_dual.algebra,
                                   e.map.map)) {
    r.fail(ego.base.name() + ": e_M is not a homomorphism");
  }
  return r;
}

Outcome dual_swaps_arrows(FiniteAlgebra const& a, FiniteAlgebra const& b,
                          AlterEgo const& ego) {
  Outcome r;
  FiniteStructure const da = dual_space(a, ego);
  FiniteStructure const db = dual_space(b, ego);
  for (auto const& u : enumerate_homomorphisms(a, b)) {
    ++r.checked;
    auto const d = dual_of_homomorphism(u, da, db);
    std::string const what = a.name() + " -> " + b.name();
    if (!is_struct_morphism(db, da, d.map)) {
      r.fail(what + ": dual is not a morphism");
    }
    if (u.injective() && !d.surjective()) {
      r.fail(what + ": dual of an embedding is not surjective");
    }
    if (u.surjective() && !is_embedding(db, da, d.map)) {
      r.fail(what + ": dual of a surjection is not an embedding");
    }
  }
  return r;
}

Outcome multiset_order_laws(std::uint64_t seed, std::size_t samples) {
  Outcome r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  std::uniform_int_distribution<std::size_t> val(1, 20);
  std::vector<MultisetOfSizes> ms(samples);
  for (auto& m : ms) {
    m.resize(len(rng));
    for (auto& v : m) {
      v = val(rng);
    }
  }
  auto text = [](MultisetOfSizes const& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      s += (i ? "," : "") + std::to_string(m[i]);
    }
    return s + "]";
  };
  auto sorted = [](MultisetOfSizes m) {
    std::sort(m.begin(), m.end());
    return m;
  };
  std::uniform_int_distribution<std::size_t> idx(0, samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    auto const& x = ms[i];
    auto const& y = ms[idx(rng)];
    auto const& z = ms[idx(rng)];
    ++r.checked;
    bool const xy = multiset_leq(x, y);
    bool const yx = multiset_leq(y, x);
    if (!multiset_leq(x, x)) {
      r.fail("not reflexive at " + text(x));
    }
    if (!xy && !yx) {
      r.fail("not total at " + text(x) + ", " + text(y));
    }
    if (xy && yx && sorted(x) != sorted(y)) {
      r.fail("not antisymmetric at " + text(x) + ", " + text(y));
    }
    if (xy && multiset_leq(y, z) && !multiset_leq(x, z)) {
      r.fail("not transitive at " + text(x) + ", " + text(y) + ", " + text(z));
    }
    if (xy != multiset_leq_oracle(x, y)) {
      r.fail("disagrees with the oracle at " + text(x) + ", " + text(y));
    }
  }
  return r;
}

Outcome min_gen_set_laws(GeneratorSet const& k) {
  Outcome r;
  r.checked = 1;
  std::string const what = "MinGenSet of " + k.front().name() +
                           (k.size() > 1 ? " and others" : "");
  GeneratorSet const bfs = min_gen_set_bfs(k);
  GeneratorSet const dfs = min_gen_set_dfs(k);
  bool agree = bfs.size() == dfs.size();
  std::vector<char> used(dfs.size(), 0);
  for (auto const& a : bfs) {
    bool found = false;
    for (std::size_t j = 0; j < dfs.size() && !found && agree; ++j) {
      if (!used[j] && is_isomorphic(a, dfs[j])) {
        used[j] = 1;
        found = true;
      }
    }
    agree = agree && found;
  }
  if (!agree) {
    r.fail(what + ": bfs and dfs disagree (" + std::to_string(bfs.size()) +
           " vs " + std::to_string(dfs.size()) + " algebras)");
    return r;
  }
  for (GeneratorSet const* out : {&bfs, &dfs}) {
    for (auto const& m : *out) {
      if (!is_q_subdirectly_irreducible(m, *out)) {
        r.fail(what + ": member " + m.name() + " is not Q-subdirectly irreducible");
      }
    }
    for (std::size_t i = 0; i < out->size(); ++i) {
      for (std::size_t j = 0; j < out->size(); ++j) {
        if (i != j && embeds((*out)[i], (*out)[j])) {
          r.fail(what + ": a member embeds in another");
        }
      }
    }
    for (auto const& a : k) {
      if (!in_isp(a, *out).member) {
        r.fail(what + ": input " + a.name() + " not in ISP(output)");
      }
    }
    for (auto const& m : *out) {
      if (!in_isp(m, k).member) {
        r.fail(what + ": output " + m.name() + " not in ISP(input)");
      }
    }
    if (!multiset_leq(size_multiset(*out), size_multiset(k))) {
      r.fail(what + ": output is larger in the multiset order");
    }
  }
  return r;
}

std::vector<std::vector<std::string>> member_labels(
    SubstructureLattice const& lat) {
  std::vector<std::vector<std::string>> out;
  for (auto const& m : lat.members) {
    std::vector<std::string> l;
    for (Element p : m) {
      l.push_back(lat.x.label(p));
    }
    std::sort(l.begin(), l.end());
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::pair<Element, Element>> strict_pairs(FiniteStructure const& x,
                                                      std::string_view rel) {
  std::vector<std::pair<Element, Element>> out;
  auto const r = x.find_relation(rel);
  if (!r) {
    return out;
  }
  for (Element p = 0; p < x.size; ++p) {
    for (Element q = 0; q < x.size; ++q) {
      Element args[] = {p, q};
      if (p != q && x.related(*r, args)) {
        out.emplace_back(p, q);
      }
    }
  }
  return out;
}

std::optional<Split> split_as_product(FiniteAlgebra const& a, std::size_t m,
                                      std::size_t n) {
  if (m * n != a.size()) {
    return std::nullopt;
  }
  auto const lat = congruence_lattice(a);
  for (auto const& t1 : lat) {
    if (t1.block_count() != m) {
      continue;
    }
    for (auto const& t2 : lat) {
      // Trivial meet makes a -> A/t1 x A/t2 injective, hence bijective.
      if (t2.block_count() == n && t1.meet(t2).is_identity()) {
        return Split{quotient(a, t1, "L").algebra, quotient(a, t2, "R").algebra};
      }
    }
  }
  return std::nullopt;
}

bool same_algebra(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  return a.name() == b.name() && a.labels() == b.labels() &&
         a.same_tables(b);
}

namespace {

std::vector<std::string> const kLabelPool{
    "0",  "1",    "a",     "b",    "x_1", "top", "z9",  "op",  "elements",
    "->", "a b",  "q\"t", "<",    "/",   "#c",  "uv",  "w.w", "p-q",
    "é",  "0,1",  "(",     "back\\slash"};

std::vector<std::string> random_labels(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> pool = kLabelPool;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  return pool;
}

}  // namespace

FiniteAlgebra random_document_algebra(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> ar(0, 3);
  std::uniform_int_distribution<std::size_t> nops(0, 3);
  std::size_t const n = size(rng);
  std::vector<OpSymbol> ops;
  std::size_t const k = nops(rng);
  for (std::size_t i = 0; i < k; ++i) {
    ops.push_back({"f" + std::to_string(i), ar(rng)});
  }
  Signature const sig(ops);
  FiniteAlgebra const r = random_algebra(rng, n, sig);
  std::vector<std::vector<Element>> tables;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    auto const t = r.table(i);
    tables.emplace_back(t.begin(), t.end());
  }
  std::uniform_int_distribution<int> coin(0, 1);
  std::string const name = coin(rng) ? "Fuzz" : "fuzz doc";
  return FiniteAlgebra(name, sig, n, tables, random_labels(rng, n));
}

FiniteStructure random_document_structure(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> ar(1, 2);
  std::uniform_int_distribution<int> pct(0, 99);
  FiniteStructure x;
  x.size = size(rng);
  x.name = pct(rng) < 50 ? "S" : "struct \"s\"";
  x.labels = random_labels(rng, x.size);
  std::uniform_int_distribution<Element> pick(
      0, static_cast<Element>(x.size - 1));
  int const nops = pct(rng) % 3;
  for (int i = 0; i < nops; ++i) {
    StructOp op{"g" + std::to_string(i), pct(rng) % 3, pct(rng) < 40, {}};
    op.table.resize(ipow_size(x.size, op.arity));
    for (auto& v : op.table) {
      v = op.partial && pct(rng) < 40 ? kUndefined : pick(rng);
    }
    x.ops.push_back(std::move(op));
  }
  int const nrels = pct(rng) % 3;
  for (int i = 0; i < nrels; ++i) {
    StructRelation r{"r" + std::to_string(i), ar(rng), {}};
    r.holds.resize(ipow_size(x.size, r.arity));
    for (auto& h : r.holds) {
      h = pct(rng) < 30;
    }
    x.relations.push_back(std::move(r));
  }
  x.validate();
  return x;
}

Outcome round_trip_corpus() {
  Outcome r;
  for (auto const& doc : corpus::documents()) {
    ++r.checked;
    try {
      if (doc.kind == "alg") {
        auto const a = parse_algebra(doc.text);
        auto const b = parse_algebra(print_algebra(a));
        if (!same_algebra(a, b)) {
          r.fail(doc.name + ": algebra changed in a round trip");
        }
      } else {
        auto const a = parse_structure(doc.text);
        auto const b = parse_structure(print_structure(a));
        if (!(a == b)) {
          r.fail(doc.name + ": structure changed in a round trip");
        }
      }
    } catch (Error const& e) {
      r.fail(doc.name + ": " + e.what());
    }
  }
  return r;
}

Outcome round_trip_fuzz(std::uint64_t seed, std::size_t count) {
  Outcome r;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    ++r.checked;
    std::string text;
    try {
      if (i % 2 == 0) {
        auto const a = random_document_algebra(rng);
        text = print_algebra(a);
        if (!same_algebra(a, parse_algebra(text))) {
          r.fail("algebra changed in a round trip:\n" + text);
        }
      } else {
        auto const x = random_document_structure(rng);
        text = print_structure(x);
        if (!(x == parse_structure(text))) {
          r.fail("structure changed in a round trip:\n" + text);
        }
      }
    } catch (Error const& e) {
      r.fail(std::string(e.what()) + " in\n" + text);
    }
  }
  return r;
}

Outcome suite_galois() {
  Outcome r;
  for (auto const& name : corpus::algebra_names()) {
    FiniteAlgebra const a = corpus::algebra(name);
    if (a.size() > 10) {
      continue;
    }
    auto const ego = ego_for(a);
    if (!ego) {
      r.fail(name + ": no corpus alter ego covers it");
      continue;
    }
    r.merge(galois_correspondence(a, *ego));
  }
  return r;
}

Outcome suite_isp(std::size_t pairs) {
  struct Pair {
    FiniteAlgebra b;
    FiniteAlgebra c;
    std::size_t ego;
  };
  auto const egos = corpus_egos();
  std::vector<Pair> pool;
  for (std::size_t e = 0; e < egos.size(); ++e) {
    auto const members = small_members(egos[e], 6);
    for (auto const& b : members) {
      for (auto const& c : members) {
        pool.push_back({b, c, e});
      }
    }
  }
  std::mt19937_64 rng(20240517);
  std::shuffle(pool.begin(), pool.end(), rng);
  Outcome r;
  std::size_t members = 0;
  for (std::size_t i = 0; i < pool.size() && i < pairs; ++i) {
    auto const o = isp_three_way(pool[i].b, pool[i].c, egos[pool[i].ego]);
    members += in_isp(pool[i].c, {pool[i].b}).member ? 1 : 0;
    r.merge(o);
  }
  if (r.checked < pairs) {
    r.fail("only " + std::to_string(r.checked) + " pairs available");
  }
  if (r.ok) {
    r.detail = std::to_string(members) + " members, " +
               std::to_string(r.checked - members) + " non-members";
  }
  return r;
}

Outcome suite_evaluation() {
  Outcome r;
  for (auto const& ego : corpus_egos()) {
    r.merge(evaluation_is_isomorphism(ego));
  }
  return r;
}

Outcome suite_arrows() {
  Outcome r;
  for (auto const& ego : corpus_egos()) {
    auto const members = small_members(ego, 6);
    for (auto const& a : members) {
      for (auto const& b : members) {
        r.merge(dual_swaps_arrows(a, b, ego));
      }
    }
  }
  return r;
}

Outcome suite_multiset() { return multiset_order_laws(0x5eed, 1000); }

Outcome suite_min_gen_set(std::size_t random_algebras) {
  Outcome r;
  for (auto const& name : corpus::algebra_names()) {
    r.merge(min_gen_set_laws({corpus::algebra(name)}));
  }
  std::mt19937_64 rng(42);
  Signature const unary({{"f", 1}});
  Signature const binary({{"m", 2}});
  for (std::size_t i = 0; i < random_algebras; ++i) {
    bool const u = i % 2 == 0;
    std::size_t const n = u ? 2 + (i / 2) % 5 : 2 + (i / 2) % 3;
    r.merge(min_gen_set_laws(
        {random_algebra(rng, n, u ? unary : binary, "R" + std::to_string(i))}));
  }
  return r;
}

}  // namespace admit::testing
