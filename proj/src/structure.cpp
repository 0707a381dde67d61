#include "admit/structure.hpp"

#include <algorithm>
#include <bit>

#include "admit/error.hpp"

namespace admit {

std::size_t tuple_index(std::size_t n, std::span<Element const> args) {
  std::size_t idx = 0;
  for (Element a : args) {
    idx = idx * n + a;
  }
  return idx;
}

namespace {

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n;
  }
  return r;
}

// Decodes idx into k digits base n.
void decode(std::size_t idx, std::size_t n, std::span<Element> out) {
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = static_cast<Element>(idx % n);
    idx /= n;
  }
}

std::string tuple_text(FiniteStructure const& x, std::span<Element const> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    s += (i ? "," : "") + x.label(t[i]);
  }
  return s + ")";
}

}  // namespace

std::optional<Element> FiniteStructure::find_label(std::string_view l) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == l) {
      return static_cast<Element>(i);
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteStructure::find_op(std::string_view n) const {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].name == n) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteStructure::find_relation(
    std::string_view n) const {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].name == n) {
      return i;
    }
  }
  return std::nullopt;
}

Element FiniteStructure::apply(std::size_t op,
                               std::span<Element const> args) const {
  return ops[op].table[tuple_index(size, args)];
}

bool FiniteStructure::related(std::size_t rel,
                              std::span<Element const> args) const {
  return relations[rel].holds[tuple_index(size, args)] != 0;
}

bool FiniteStructure::same_type(FiniteStructure const& o) const {
  if (ops.size() != o.ops.size() || relations.size() != o.relations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].name != o.ops[i].name || ops[i].arity != o.ops[i].arity ||
        ops[i].partial != o.ops[i].partial) {
      return false;
    }
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].name != o.relations[i].name ||
        relations[i].arity != o.relations[i].arity) {
      return false;
    }
  }
  return true;
}

void FiniteStructure::validate() const {
  if (labels.size() != size) {
    throw AlgebraError("structure '" + name + "': label count mismatch");
  }
  for (auto const& op : ops) {
    if (op.arity < 0 || op.table.size() != ipow(size, op.arity)) {
      throw AlgebraError("structure '" + name + "': bad table for '" +
                         op.name + "'");
    }
    for (Element v : op.table) {
      if (v == kUndefined ? !op.partial : v >= size) {
        throw AlgebraError("structure '" + name + "': entry out of range in '" +
                           op.name + "'");
      }
    }
  }
  for (auto const& r : relations) {
    if (r.arity < 1 || r.holds.size() != ipow(size, r.arity)) {
      throw AlgebraError("structure '" + name + "': bad relation '" + r.name +
                         "'");
    }
  }
}

bool StructMorphism::injective() const {
  std::vector<char> seen(target.size, 0);
  for (Element v : map) {
    if (seen[v]) {
      return false;
    }
    seen[v] = 1;
  }
  return true;
}

bool StructMorphism::surjective() const {
  std::vector<char> seen(target.size, 0);
  std::size_t hit = 0;
  for (Element v : map) {
    if (!seen[v]) {
      seen[v] = 1;
      ++hit;
    }
  }
  return hit == target.size;
}

CompatibilityReport check_compatibility(AlterEgo const& ego) {
  FiniteAlgebra const& m = ego.base;
  FiniteStructure const& t = ego.tilde;
  std::size_t const n = m.size();
  if (t.size != n) {
    return {false, "alter ego has " + std::to_string(t.size) +
                       " points but the algebra has " + std::to_string(n)};
  }
  struct Graph {
    std::string what;
    int width;
    std::vector<std::vector<Element>> rows;
    std::function<bool(std::span<Element const>)> contains;
  };
  std::vector<Graph> graphs;
  for (std::size_t o = 0; o < t.ops.size(); ++o) {
    auto const& op = t.ops[o];
    Graph g;
    g.what = (op.partial ? "partial operation '" : "operation '") + op.name +
             "'";
    g.width = op.arity + 1;
    std::vector<Element> args(static_cast<std::size_t>(op.arity));
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      if (op.table[idx] == kUndefined) {
        continue;
      }
      decode(idx, n, args);
      auto row = args;
      row.push_back(op.table[idx]);
      g.rows.push_back(std::move(row));
    }
    g.contains = [&t, o, n](std::span<Element const> row) {
      auto const& op = t.ops[o];
      Element v = op.table[tuple_index(n, row.first(row.size() - 1))];
      return v != kUndefined && v == row.back();
    };
    graphs.push_back(std::move(g));
  }
  for (std::size_t r = 0; r < t.relations.size(); ++r) {
    auto const& rel = t.relations[r];
    Graph g;
    g.what = "relation '" + rel.name + "'";
    g.width = rel.arity;
    std::vector<Element> args(static_cast<std::size_t>(rel.arity));
    for (std::size_t idx = 0; idx < rel.holds.size(); ++idx) {
      if (rel.holds[idx]) {
        decode(idx, n, args);
        g.rows.push_back(args);
      }
    }
    g.contains = [&t, r](std::span<Element const> row) {
      return t.related(r, row);
    };
    graphs.push_back(std::move(g));
  }

  Signature const& sig = m.signature();
  for (auto const& g : graphs) {
    for (std::size_t f = 0; f < sig.size(); ++f) {
      auto const a = static_cast<std::size_t>(sig[f].arity);
      std::size_t const combos = ipow(g.rows.size(), sig[f].arity);
      std::vector<Element> pick(a);
      std::vector<Element> vals(a);
      std::vector<Element> out(static_cast<std::size_t>(g.width));
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        for (std::size_t j = a; j-- > 0;) {
          pick[j] = static_cast<Element>(rest % g.rows.size());
          rest /= g.rows.size();
        }
        for (std::size_t col = 0; col < out.size(); ++col) {
          for (std::size_t j = 0; j < a; ++j) {
            vals[j] = g.rows[pick[j]][col];
          }
          out[col] = m.apply(f, vals);
        }
        if (!g.contains(out)) {
          std::string msg = g.what + " is not preserved by '" + sig[f].name +
                            "': ";
          for (std::size_t j = 0; j < a; ++j) {
            msg += tuple_text(t, g.rows[pick[j]]) + " ";
          }
          msg += "give " + tuple_text(t, out);
          return {false, msg};
        }
      }
    }
  }
  return {};
}

FiniteStructure power_structure(FiniteStructure const& tilde, std::size_t s,
                                std::string name) {
  if (s == 0) {
    throw AlgebraError("power_structure: exponent must be positive");
  }
  std::size_t const n = tilde.size;
  std::size_t const p = ipow(n, static_cast<int>(s));
  FiniteStructure x;
  x.name = name.empty() ? tilde.name + "^" + std::to_string(s) : name;
  x.size = p;
  bool compact = std::all_of(tilde.labels.begin(), tilde.labels.end(),
                             [](auto const& l) { return l.size() == 1; });
  x.coords.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    x.coords[i].resize(s);
    decode(i, n, x.coords[i]);
    std::string l = compact ? "" : "(";
    for (std::size_t j = 0; j < s; ++j) {
      if (!compact && j) {
        l += ",";
      }
      l += tilde.label(x.coords[i][j]);
    }
    x.labels.push_back(compact ? l : l + ")");
  }
  auto encode = [&](std::span<Element const> c) {
    return static_cast<Element>(tuple_index(n, c));
  };
  for (auto const& op : tilde.ops) {
    StructOp lifted{op.name, op.arity, op.partial, {}};
    auto const k = static_cast<std::size_t>(op.arity);
    lifted.table.resize(ipow(p, op.arity));
    std::vector<Element> args(k);
    std::vector<Element> cargs(k);
    std::vector<Element> out(s);
    for (std::size_t idx = 0; idx < lifted.table.size(); ++idx) {
      decode(idx, p, args);
      bool defined = true;
      for (std::size_t j = 0; j < s && defined; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
          cargs[i] = x.coords[args[i]][j];
        }
        out[j] = op.table[tuple_index(n, cargs)];
        defined = out[j] != kUndefined;
      }
      lifted.table[idx] = defined ? encode(out) : kUndefined;
    }
    x.ops.push_back(std::move(lifted));
  }
  for (auto const& r : tilde.relations) {
    StructRelation lifted{r.name, r.arity, {}};
    auto const k = static_cast<std::size_t>(r.arity);
    lifted.holds.resize(ipow(p, r.arity));
    std::vector<Element> args(k);
    std::vector<Element> cargs(k);
    for (std::size_t idx = 0; idx < lifted.holds.size(); ++idx) {
      decode(idx, p, args);
      bool in = true;
      for (std::size_t j = 0; j < s && in; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
          cargs[i] = x.coords[args[i]][j];
        }
        in = r.holds[tuple_index(n, cargs)] != 0;
      }
      lifted.holds[idx] = in;
    }
    x.relations.push_back(std::move(lifted));
  }
  return x;
}

std::vector<Element> substructure_closure(FiniteStructure const& x,
                                          std::span<Element const> gens) {
  std::vector<char> in(x.size, 0);
  for (Element g : gens) {
    if (g >= x.size) {
      throw AlgebraError("substructure_closure: point out of range");
    }
    in[g] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> members;
    for (Element i = 0; i < x.size; ++i) {
      if (in[i]) {
        members.push_back(i);
      }
    }
    for (auto const& op : x.ops) {
      auto const k = static_cast<std::size_t>(op.arity);
      std::size_t const combos = ipow(members.size(), op.arity);
      std::vector<Element> args(k);
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        for (std::size_t j = k; j-- > 0;) {
          args[j] = members[rest % members.size()];
          rest /= members.size();
        }
        Element v = op.table[tuple_index(x.size, args)];
        if (v != kUndefined && !in[v]) {
          in[v] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<Element> out;
  for (Element i = 0; i < x.size; ++i) {
    if (in[i]) {
      out.push_back(i);
    }
  }
  return out;
}

Substructure induced_substructure(FiniteStructure const& x,
                                  std::span<Element const> subset,
                                  std::string name) {
  std::vector<Element> inc(subset.begin(), subset.end());
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  std::vector<Element> index(x.size, kUndefined);
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (inc[i] >= x.size) {
      throw AlgebraError("induced_substructure: point out of range");
    }
    index[inc[i]] = static_cast<Element>(i);
  }
  std::size_t const m = inc.size();
  FiniteStructure y;
  y.name = name.empty() ? x.name + "_sub" : name;
  y.size = m;
  for (Element p : inc) {
    y.labels.push_back(x.label(p));
    if (!x.coords.empty()) {
      y.coords.push_back(x.coords[p]);
    }
  }
  for (auto const& op : x.ops) {
    StructOp r{op.name, op.arity, op.partial, {}};
    auto const k = static_cast<std::size_t>(op.arity);
    r.table.resize(ipow(m, op.arity));
    std::vector<Element> args(k);
    for (std::size_t idx = 0; idx < r.table.size(); ++idx) {
      decode(idx, m, args);
      for (auto& a : args) {
        a = inc[a];
      }
      Element v = x.apply(static_cast<std::size_t>(&op - x.ops.data()), args);
      if (v == kUndefined) {
        r.table[idx] = kUndefined;
      } else if (index[v] == kUndefined) {
        throw AlgebraError("induced_substructure: subset not closed under '" +
                           op.name + "'");
      } else {
        r.table[idx] = index[v];
      }
    }
    y.ops.push_back(std::move(r));
  }
  for (std::size_t ri = 0; ri < x.relations.size(); ++ri) {
    auto const& rel = x.relations[ri];
    StructRelation r{rel.name, rel.arity, {}};
    auto const k = static_cast<std::size_t>(rel.arity);
    r.holds.resize(ipow(m, rel.arity));
    std::vector<Element> args(k);
    for (std::size_t idx = 0; idx < r.holds.size(); ++idx) {
      decode(idx, m, args);
      for (auto& a : args) {
        a = inc[a];
      }
      r.holds[idx] = x.related(ri, args);
    }
    y.relations.push_back(std::move(r));
  }
  return {std::move(y), std::move(inc)};
}

bool is_struct_morphism(FiniteStructure const& x, FiniteStructure const& y,
                        std::span<Element const> map) {
  if (!x.same_type(y) || map.size() != x.size) {
    return false;
  }
  for (Element v : map) {
    if (v >= y.size) {
      return false;
    }
  }
  for (std::size_t o = 0; o < x.ops.size(); ++o) {
    auto const& op = x.ops[o];
    auto const k = static_cast<std::size_t>(op.arity);
    std::vector<Element> args(k);
    std::vector<Element> imgs(k);
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      Element v = op.table[idx];
      if (v == kUndefined) {
        continue;
      }
      decode(idx, x.size, args);
      for (std::size_t i = 0; i < k; ++i) {
        imgs[i] = map[args[i]];
      }
      Element w = y.apply(o, imgs);
      if (w == kUndefined || w != map[v]) {
        return false;
      }
    }
  }
  for (std::size_t r = 0; r < x.relations.size(); ++r) {
    auto const& rel = x.relations[r];
    auto const k = static_cast<std::size_t>(rel.arity);
    std::vector<Element> args(k);
    std::vector<Element> imgs(k);
    for (std::size_t idx = 0; idx < rel.holds.size(); ++idx) {
      if (!rel.holds[idx]) {
        continue;
      }
      decode(idx, x.size, args);
      for (std::size_t i = 0; i < k; ++i) {
        imgs[i] = map[args[i]];
      }
      if (!y.related(r, imgs)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Reflection half of the embedding test; assumes a morphism.
bool reflects(FiniteStructure const& x, FiniteStructure const& y,
              std::span<Element const> map) {
  for (std::size_t o = 0; o < x.ops.size(); ++o) {
    auto const& op = x.ops[o];
    if (!op.partial) {
      continue;
    }
    auto const k = static_cast<std::size_t>(op.arity);
    std::vector<Element> args(k);
    std::vector<Element> imgs(k);
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      if (op.table[idx] != kUndefined) {
        continue;
      }
      decode(idx, x.size, args);
      for (std::size_t i = 0; i < k; ++i) {
        imgs[i] = map[args[i]];
      }
      if (y.apply(o, imgs) != kUndefined) {
        return false;
      }
    }
  }
  for (std::size_t r = 0; r < x.relations.size(); ++r) {
    auto const& rel = x.relations[r];
    auto const k = static_cast<std::size_t>(rel.arity);
    std::vector<Element> args(k);
    std::vector<Element> imgs(k);
    for (std::size_t idx = 0; idx < rel.holds.size(); ++idx) {
      if (rel.holds[idx]) {
        continue;
      }
      decode(idx, x.size, args);
      for (std::size_t i = 0; i < k; ++i) {
        imgs[i] = map[args[i]];
      }
      if (y.related(r, imgs)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_embedding(FiniteStructure const& x, FiniteStructure const& y,
                  std::span<Element const> map) {
  if (!is_struct_morphism(x, y, map)) {
    return false;
  }
  std::vector<char> seen(y.size, 0);
  for (Element v : map) {
    if (seen[v]) {
      return false;
    }
    seen[v] = 1;
  }
  return reflects(x, y, map);
}

namespace {

constexpr Element kFree = static_cast<Element>(-1);

struct Constraint {
  bool is_op;
  std::uint32_t index;
  // Op instances: argument points then the result point.
  std::vector<Element> scope;
  // Distinct points of scope.
  std::vector<Element> vars;
};

class MorphSearcher {
 public:
  MorphSearcher(FiniteStructure const& x, FiniteStructure const& y,
                MorphSearch f,
                std::function<bool(std::span<Element const>)> const& visit)
      : x_(x), y_(y), filter_(f), visit_(visit) {
    n_ = x.size;
    m_ = y.size;
    all_ = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    build();
  }

  void run() {
    if (filter_.embedding && n_ > m_) {
      return;
    }
    if (filter_.surjective && m_ > n_) {
      return;
    }
    dom_.assign(n_, all_);
    val_.assign(n_, kFree);
    hits_.assign(m_, 0);
    // Node consistency for constraints on a single point.
    for (auto const& c : cons_) {
      if (c.vars.size() == 1 && !filter(c, c.vars[0])) {
        return;
      }
    }
    assigned_ = 0;
    descend();
  }

 private:
  void build() {
    cons_of_.resize(n_);
    std::vector<Element> args;
    for (std::size_t o = 0; o < x_.ops.size(); ++o) {
      auto const& op = x_.ops[o];
      auto const k = static_cast<std::size_t>(op.arity);
      args.resize(k);
      for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
        if (op.table[idx] == kUndefined) {
          continue;
        }
        decode(idx, n_, args);
        Constraint c{true, static_cast<std::uint32_t>(o), args, {}};
        c.scope.push_back(op.table[idx]);
        add(std::move(c));
      }
    }
    for (std::size_t r = 0; r < x_.relations.size(); ++r) {
      auto const& rel = x_.relations[r];
      auto const k = static_cast<std::size_t>(rel.arity);
      args.resize(k);
      for (std::size_t idx = 0; idx < rel.holds.size(); ++idx) {
        if (!rel.holds[idx]) {
          continue;
        }
        decode(idx, n_, args);
        add(Constraint{false, static_cast<std::uint32_t>(r), args, {}});
      }
    }
  }

  void add(Constraint c) {
    c.vars = c.scope;
    std::sort(c.vars.begin(), c.vars.end());
    c.vars.erase(std::unique(c.vars.begin(), c.vars.end()), c.vars.end());
    auto const id = static_cast<std::uint32_t>(cons_.size());
    for (Element v : c.vars) {
      cons_of_[v].push_back(id);
    }
    cons_.push_back(std::move(c));
  }

  bool check(Constraint const& c) {
    buf_.resize(c.scope.size());
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      buf_[i] = val_[c.scope[i]];
    }
    if (c.is_op) {
      std::span<Element const> args(buf_.data(), buf_.size() - 1);
      Element w = y_.apply(c.index, args);
      return w != kUndefined && w == buf_.back();
    }
    return y_.related(c.index, buf_);
  }

  void set_dom(Element u, std::uint64_t d) {
    if (dom_[u] != d) {
      trail_.emplace_back(u, dom_[u]);
      dom_[u] = d;
    }
  }

  // Restrict the single free point u of c.
  bool filter(Constraint const& c, Element u) {
    std::uint64_t keep = 0;
    std::uint64_t d = dom_[u];
    while (d) {
      auto const w = static_cast<Element>(std::countr_zero(d));
      d &= d - 1;
      val_[u] = w;
      if (check(c)) {
        keep |= std::uint64_t{1} << w;
      }
    }
    val_[u] = kFree;
    set_dom(u, keep);
    return keep != 0;
  }

  bool propagate(Element p) {
    for (std::uint32_t ci : cons_of_[p]) {
      Constraint const& c = cons_[ci];
      Element free_var = kFree;
      int free_count = 0;
      for (Element v : c.vars) {
        if (val_[v] == kFree) {
          free_var = v;
          if (++free_count > 1) {
            break;
          }
        }
      }
      if (free_count == 0) {
        if (!check(c)) {
          return false;
        }
      } else if (free_count == 1) {
        if (!filter(c, free_var)) {
          return false;
        }
      }
    }
    return true;
  }

  bool surjection_possible() const {
    std::uint64_t reach = 0;
    std::size_t free_points = 0;
    std::size_t unhit = 0;
    for (Element p = 0; p < n_; ++p) {
      if (val_[p] == kFree) {
        reach |= dom_[p];
        ++free_points;
      }
    }
    for (Element v = 0; v < m_; ++v) {
      if (!hits_[v]) {
        ++unhit;
        if (!(reach >> v & 1)) {
          return false;
        }
      }
    }
    return unhit <= free_points;
  }

  void descend() {
    if (stop_) {
      return;
    }
    if (assigned_ == n_) {
      if (filter_.surjective) {
        for (Element v = 0; v < m_; ++v) {
          if (!hits_[v]) {
            return;
          }
        }
      }
      if (filter_.embedding && !reflects(x_, y_, val_)) {
        return;
      }
      if (!visit_(val_)) {
        stop_ = true;
      }
      return;
    }
    Element pick = kFree;
    int best = 65;
    for (Element p = 0; p < n_; ++p) {
      if (val_[p] == kFree) {
        int c = std::popcount(dom_[p]);
        if (c < best) {
          best = c;
          pick = p;
        }
      }
    }
    std::uint64_t choices = dom_[pick];
    while (choices && !stop_) {
      auto const v = static_cast<Element>(std::countr_zero(choices));
      choices &= choices - 1;
      if (filter_.embedding && hits_[v]) {
        continue;
      }
      std::size_t const mark = trail_.size();
      val_[pick] = v;
      ++hits_[v];
      ++assigned_;
      set_dom(pick, std::uint64_t{1} << v);
      bool ok = propagate(pick);
      if (ok && filter_.embedding) {
        for (Element p = 0; p < n_ && ok; ++p) {
          if (val_[p] == kFree) {
            set_dom(p, dom_[p] & ~(std::uint64_t{1} << v));
            ok = dom_[p] != 0;
          }
        }
      }
      if (ok && filter_.surjective) {
        ok = surjection_possible();
      }
      if (ok) {
        descend();
      }
      while (trail_.size() > mark) {
        dom_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
      val_[pick] = kFree;
      --hits_[v];
      --assigned_;
    }
  }

  FiniteStructure const& x_;
  FiniteStructure const& y_;
  MorphSearch filter_;
  std::function<bool(std::span<Element const>)> const& visit_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::uint64_t all_ = 0;
  std::vector<Constraint> cons_;
  std::vector<std::vector<std::uint32_t>> cons_of_;
  std::vector<std::uint64_t> dom_;
  std::vector<Element> val_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::pair<Element, std::uint64_t>> trail_;
  std::vector<Element> buf_;
  std::size_t assigned_ = 0;
  bool stop_ = false;
};

}  // namespace

void for_each_struct_morphism(
    FiniteStructure const& x, FiniteStructure const& y, MorphSearch filter,
    std::function<bool(std::span<Element const>)> const& visit) {
  if (!x.same_type(y)) {
    throw AlgebraError("morphism search: '" + x.name + "' and '" + y.name +
                       "' are not of the same type");
  }
  if (y.size > 64) {
    throw AlgebraError("morphism search: target '" + y.name +
                       "' has more than 64 points");
  }
  if (y.size == 0) {
    if (x.size == 0) {
      visit({});
    }
    return;
  }
  MorphSearcher(x, y, filter, visit).run();
}

std::vector<StructMorphism> enumerate_struct_morphisms(
    FiniteStructure const& x, FiniteStructure const& y, MorphMode mode) {
  MorphSearch f;
  f.surjective = mode == MorphMode::surjective;
  f.embedding = mode == MorphMode::embedding;
  std::vector<std::vector<Element>> maps;
  for_each_struct_morphism(x, y, f, [&](std::span<Element const> h) {
    maps.emplace_back(h.begin(), h.end());
    return mode != MorphMode::first;
  });
  std::sort(maps.begin(), maps.end());
  std::vector<StructMorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    out.push_back({x, y, std::move(m)});
  }
  return out;
}

std::size_t count_struct_morphisms(FiniteStructure const& x,
                                   FiniteStructure const& y,
                                   MorphSearch filter) {
  std::size_t c = 0;
  for_each_struct_morphism(x, y, filter, [&](std::span<Element const>) {
    ++c;
    return true;
  });
  return c;
}

std::optional<StructMorphism> find_struct_morphism(FiniteStructure const& x,
                                                   FiniteStructure const& y,
                                                   MorphSearch filter) {
  std::optional<StructMorphism> out;
  for_each_struct_morphism(x, y, filter, [&](std::span<Element const> h) {
    out = StructMorphism{x, y, {h.begin(), h.end()}};
    return false;
  });
  return out;
}

bool structures_isomorphic(FiniteStructure const& x,
                           FiniteStructure const& y) {
  if (x.size != y.size || !x.same_type(y)) {
    return false;
  }
  return find_struct_morphism(x, y, {.embedding = true}).has_value();
}

}  // namespace admit
