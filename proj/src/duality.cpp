#include "admit/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "admit/error.hpp"

namespace admit {

namespace {

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n;
  }
  return r;
}

std::string spell(FiniteStructure const& tilde, std::vector<Element> const& v) {
  bool compact = std::all_of(tilde.labels.begin(), tilde.labels.end(),
                             [](auto const& l) { return l.size() == 1; });
  std::string s = compact ? "" : "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!compact && i) {
      s += ",";
    }
    s += tilde.label(v[i]);
  }
  return compact ? s : s + ")";
}

// Structure on a set of maps I -> M (all of one length) with the alter
// ego's operations and relations applied pointwise.
FiniteStructure pointwise_structure(std::vector<std::vector<Element>> maps,
                                    FiniteStructure const& tilde,
                                    std::string name) {
  std::map<std::vector<Element>, Element> index;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    index.emplace(maps[i], static_cast<Element>(i));
  }
  std::size_t const p = maps.size();
  std::size_t const len = maps.empty() ? 0 : maps[0].size();
  std::size_t const n = tilde.size;
  FiniteStructure x;
  x.name = std::move(name);
  x.size = p;
  for (auto const& m : maps) {
    x.labels.push_back(spell(tilde, m));
  }
  for (auto const& op : tilde.ops) {
    StructOp r{op.name, op.arity, op.partial, {}};
    auto const k = static_cast<std::size_t>(op.arity);
    r.table.resize(ipow(p, op.arity));
    std::vector<Element> args(k);
    std::vector<Element> vals(k);
    std::vector<Element> out(len);
    for (std::size_t idx = 0; idx < r.table.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t j = k; j-- > 0;) {
        args[j] = static_cast<Element>(rest % p);
        rest /= p;
      }
      bool defined = true;
      for (std::size_t i = 0; i < len && defined; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          vals[j] = maps[args[j]][i];
        }
        out[i] = op.table[tuple_index(n, vals)];
        defined = out[i] != kUndefined;
      }
      if (!defined) {
        r.table[idx] = kUndefined;
        continue;
      }
      auto it = index.find(out);
      if (it == index.end()) {
        throw AlgebraError("'" + op.name +
                           "' does not preserve the set of morphisms; is the "
                           "alter ego compatible?");
      }
      r.table[idx] = it->second;
    }
    x.ops.push_back(std::move(r));
  }
  for (auto const& rel : tilde.relations) {
    StructRelation r{rel.name, rel.arity, {}};
    auto const k = static_cast<std::size_t>(rel.arity);
    r.holds.resize(ipow(p, rel.arity));
    std::vector<Element> args(k);
    std::vector<Element> vals(k);
    for (std::size_t idx = 0; idx < r.holds.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t j = k; j-- > 0;) {
        args[j] = static_cast<Element>(rest % p);
        rest /= p;
      }
      bool in = true;
      for (std::size_t i = 0; i < len && in; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          vals[j] = maps[args[j]][i];
        }
        in = rel.holds[tuple_index(n, vals)] != 0;
      }
      r.holds[idx] = in;
    }
    x.relations.push_back(std::move(r));
  }
  x.coords = std::move(maps);
  return x;
}

Element find_map(std::vector<std::vector<Element>> const& maps,
                 std::vector<Element> const& m, char const* what) {
  auto it = std::lower_bound(maps.begin(), maps.end(), m);
  if (it == maps.end() || *it != m) {
    throw AlgebraError(std::string(what) + ": composite is not a member");
  }
  return static_cast<Element>(it - maps.begin());
}

}  // namespace

FiniteStructure dual_space(FiniteAlgebra const& a, AlterEgo const& ego,
                           std::string name) {
  std::vector<std::vector<Element>> maps;
  for_each_homomorphism(a, ego.base, {}, [&](std::span<Element const> h) {
    maps.emplace_back(h.begin(), h.end());
    return true;
  });
  std::sort(maps.begin(), maps.end());
  if (name.empty()) {
    name = "D(" + a.name() + ")";
  }
  return pointwise_structure(std::move(maps), ego.tilde, std::move(name));
}

MorphismAlgebra eval_functor(FiniteStructure const& x, AlterEgo const& ego,
                             std::string name) {
  MorphismAlgebra out;
  for_each_struct_morphism(x, ego.tilde, {}, [&](std::span<Element const> h) {
    out.maps.emplace_back(h.begin(), h.end());
    return true;
  });
  std::sort(out.maps.begin(), out.maps.end());
  if (out.maps.empty()) {
    throw AlgebraError("eval_functor: no morphisms from '" + x.name +
                       "' to the alter ego");
  }
  FiniteAlgebra const& m = ego.base;
  std::size_t const p = out.maps.size();
  Signature const& sig = m.signature();
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    auto const k = static_cast<std::size_t>(ar);
    std::vector<Element> table(table_size(p, ar));
    std::vector<Element> args(k);
    std::vector<Element> vals(k);
    std::vector<Element> res(x.size);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t j = k; j-- > 0;) {
        args[j] = static_cast<Element>(rest % p);
        rest /= p;
      }
      for (std::size_t i = 0; i < x.size; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          vals[j] = out.maps[args[j]][i];
        }
        res[i] = m.apply(op, vals);
      }
      table[idx] = find_map(out.maps, res, "eval_functor");
    }
    tables.push_back(std::move(table));
  }
  std::vector<std::string> labels;
  for (auto const& mp : out.maps) {
    labels.push_back(spell(ego.tilde, mp));
  }
  if (name.empty()) {
    name = "E(" + x.name + ")";
  }
  out.algebra = FiniteAlgebra(std::move(name), sig, p, std::move(tables),
                              std::move(labels));
  return out;
}

StructMorphism dual_of_homomorphism(Homomorphism const& u,
                                    FiniteStructure const& dual_a,
                                    FiniteStructure const& dual_b) {
  std::vector<Element> map(dual_b.size);
  std::vector<Element> comp(u.source.size());
  for (std::size_t x = 0; x < dual_b.size; ++x) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      comp[i] = dual_b.coords[x][u.map[i]];
    }
    map[x] = find_map(dual_a.coords, comp, "dual_of_homomorphism");
  }
  return {dual_b, dual_a, std::move(map)};
}

Homomorphism eval_of_morphism(StructMorphism const& phi,
                              MorphismAlgebra const& eval_x,
                              MorphismAlgebra const& eval_y) {
  std::vector<Element> map(eval_y.maps.size());
  std::vector<Element> comp(phi.source.size);
  for (std::size_t a = 0; a < eval_y.maps.size(); ++a) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      comp[i] = eval_y.maps[a][phi.map[i]];
    }
    map[a] = find_map(eval_x.maps, comp, "eval_of_morphism");
  }
  return {eval_y.algebra, eval_x.algebra, std::move(map)};
}

NaturalEvaluation natural_evaluation(FiniteAlgebra const& a,
                                     AlterEgo const& ego) {
  FiniteStructure d = dual_space(a, ego);
  MorphismAlgebra e = eval_functor(d, ego);
  std::vector<Element> map(a.size());
  std::vector<Element> col(d.size);
  for (Element x = 0; x < a.size(); ++x) {
    for (std::size_t p = 0; p < d.size; ++p) {
      col[p] = d.coords[p][x];
    }
    map[x] = find_map(e.maps, col, "natural_evaluation");
  }
  Homomorphism h{a, e.algebra, std::move(map)};
  return {std::move(d), std::move(e), std::move(h)};
}

StructEvaluation structure_evaluation(FiniteStructure const& x,
                                      AlterEgo const& ego) {
  MorphismAlgebra e = eval_functor(x, ego);
  FiniteStructure d = dual_space(e.algebra, ego);
  std::vector<Element> map(x.size);
  std::vector<Element> col(e.maps.size());
  for (Element p = 0; p < x.size; ++p) {
    for (std::size_t i = 0; i < e.maps.size(); ++i) {
      col[i] = e.maps[i][p];
    }
    map[p] = find_map(d.coords, col, "structure_evaluation");
  }
  StructMorphism s{x, d, std::move(map)};
  return {std::move(e), std::move(d), std::move(s)};
}

std::optional<std::size_t> SubstructureLattice::index_of(
    std::vector<Element> const& set) const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == set) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> SubstructureLattice::maximal_join_irreducibles()
    const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!join_irreducible[i]) {
      continue;
    }
    bool maximal = true;
    for (std::size_t j = 0; j < members.size() && maximal; ++j) {
      if (j != i && join_irreducible[j] &&
          members[j].size() > members[i].size() &&
          std::includes(members[j].begin(), members[j].end(),
                        members[i].begin(), members[i].end())) {
        maximal = false;
      }
    }
    if (maximal) {
      out.push_back(i);
    }
  }
  return out;
}

SubstructureLattice y_substructure_lattice(FiniteStructure const& x,
                                           FiniteStructure const& y) {
  std::set<std::vector<Element>> family;
  for_each_struct_morphism(y, x, {}, [&](std::span<Element const> h) {
    std::vector<Element> img(h.begin(), h.end());
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    family.insert(substructure_closure(x, img));
    return true;
  });
  // Close under joins.
  std::vector<std::vector<Element>> all(family.begin(), family.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Element> u;
      std::set_union(all[i].begin(), all[i].end(), all[j].begin(),
                     all[j].end(), std::back_inserter(u));
      auto z = substructure_closure(x, u);
      if (family.insert(z).second) {
        all.push_back(std::move(z));
      }
    }
  }
  SubstructureLattice lat;
  lat.x = x;
  lat.members.assign(family.begin(), family.end());
  std::erase_if(lat.members, [](auto const& m) { return m.empty(); });
  std::stable_sort(lat.members.begin(), lat.members.end(),
                   [](auto const& l, auto const& r) {
                     return l.size() < r.size();
                   });
  for (auto const& z : lat.members) {
    std::vector<Element> below;
    for (auto const& w : lat.members) {
      if (w.size() < z.size() &&
          std::includes(z.begin(), z.end(), w.begin(), w.end())) {
        below.insert(below.end(), w.begin(), w.end());
      }
    }
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    lat.join_irreducible.push_back(substructure_closure(x, below) != z);
  }
  return lat;
}

std::vector<std::size_t> morphic_image_sweep(
    std::vector<FiniteStructure> const& v) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool image = false;
    for (std::size_t j = 0; j < v.size() && !image; ++j) {
      if (j == i || v[j].size < v[i].size ||
          (v[j].size == v[i].size && j > i)) {
        continue;
      }
      image = find_struct_morphism(v[j], v[i], {.surjective = true})
                  .has_value();
    }
    if (!image) {
      keep.push_back(i);
    }
  }
  return keep;
}

DualMinGenSet dual_min_gen_set(FiniteAlgebra const& b, AlterEgo const& ego) {
  DualMinGenSet out;
  out.dual = dual_space(b, ego);
  out.lattice = y_substructure_lattice(out.dual, out.dual);
  std::vector<FiniteStructure> cands;
  for (std::size_t i : out.lattice.maximal_join_irreducibles()) {
    cands.push_back(induced_substructure(out.dual, out.lattice.members[i],
                                         out.dual.name + "_" +
                                             std::to_string(i))
                        .structure);
  }
  for (std::size_t i : morphic_image_sweep(cands)) {
    out.survivors.push_back(cands[i]);
  }
  return out;
}

Congruence congruence_of_substructure(FiniteStructure const& dual,
                                      std::vector<Element> const& points,
                                      std::size_t algebra_size) {
  std::map<std::vector<Element>, Element> seen;
  std::vector<Element> labels(algebra_size);
  std::vector<Element> key(points.size());
  for (Element a = 0; a < algebra_size; ++a) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      key[i] = dual.coords[points[i]][a];
    }
    labels[a] = seen.emplace(key, static_cast<Element>(seen.size()))
                    .first->second;
  }
  return Congruence::from_labels(labels);
}

}  // namespace admit
