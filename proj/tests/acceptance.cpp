// Acceptance run: one PASS/FAIL line per criterion, details indented above
// it. Exits 1 when any criterion fails. Pass --big to include the two large
// free algebras.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "admit/admissibility.hpp"
#include "admit/constructions.hpp"
#include "admit/corpus.hpp"
#include "admit/duality.hpp"
#include "admit/error.hpp"
#include "admit/free_algebra.hpp"
#include "admit/homomorphism.hpp"
#include "admit/io.hpp"
#include "admit/ts_config.hpp"

#include "support.hpp"

using namespace admit;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void note(std::string s) { notes.push_back(std::move(s)); }
  void expect(bool cond, std::string s) {
    notes.push_back((cond ? "ok    " : "FAIL  ") + s);
    ok = ok && cond;
  }
};

std::string fmt(char const* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

FiniteAlgebra bounds_of(FiniteAlgebra const& a) {
  auto const sub = subalgebra_closure(a, std::vector<Element>{});
  return induced_subalgebra(a, sub, "2").algebra;
}

TSMResult tsm(std::string const& name, bool with_hint) {
  auto const hint = corpus::hint(name);
  return test_spaces_method(corpus::alter_ego(name), 2,
                            with_hint && hint ? &*hint : nullptr);
}

std::size_t ex_size(TSMResult const& r) {
  std::size_t n = 0;
  for (auto const& a : r.algebras) {
    n += a.algebra.size();
  }
  return n;
}

std::string labels_text(std::vector<std::vector<std::string>> const& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += i ? ", {" : "{";
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      s += (j ? " " : "") + v[i][j];
    }
    s += "}";
  }
  return s + "}";
}

Criterion free_sizes(bool big) {
  Criterion c;
  struct Row {
    char const* name;
    std::size_t size;
  };
  for (Row r : {Row{"D4", 168}, Row{"K2", 414}, Row{"K3", 3059},
                Row{"dS", 7776}, Row{"MS", 8790}}) {
    auto const t = Clock::now();
    std::size_t const n = free_algebra(corpus::algebra(r.name), 2).size();
    double const s = since(t);
    c.expect(n == r.size && s < 10,
             fmt("|F_%s(2)| = %zu (expected %zu) in %.2fs", r.name, n, r.size,
                 s));
  }
  if (!big) {
    c.note("skip  stretch rows L5 and L6 (pass --big)");
    return c;
  }
  for (Row r : {Row{"L5", 1741824}, Row{"L6", 3483648}}) {
    auto const t = Clock::now();
    try {
      std::size_t const n =
          free_algebra_size_relational(corpus::algebra(r.name), 2);
      double const s = since(t);
      c.expect(n == r.size && s < 1800,
               fmt("|F_%s(2)| = %zu (expected %zu) in %.2fs, relational",
                   r.name, n, r.size, s));
    } catch (BudgetExceeded const& e) {
      c.expect(false, fmt("|F_%s(2)|: %s", r.name, e.what()));
    }
  }
  return c;
}

Criterion tsm_rows() {
  Criterion c;
  for (auto const& row : corpus::case_studies()) {
    for (bool hint : {true, false}) {
      auto const t = Clock::now();
      try {
        auto const r = tsm(row.algebra, hint);
        double const s = since(t);
        double const limit = hint ? 60 : 600;
        c.expect(r.config.x.size == row.x_size && ex_size(r) == row.ex_size &&
                     s < limit,
                 fmt("%-16s %-6s (|X|, |E(X)|) = (%zu, %zu), expected (%zu, "
                     "%zu), %.2fs",
                     row.row.c_str(), hint ? "hint" : "search",
                     r.config.x.size, ex_size(r), row.x_size, row.ex_size, s));
      } catch (Error const& e) {
        c.expect(false, row.row + ": " + e.what());
      }
    }
  }
  return c;
}

Criterion structure_checks() {
  Criterion c;
  using Labels = std::vector<std::vector<std::string>>;

  auto const dm = tsm("D4", true);
  auto const dm_sx = testing::member_labels(dm.lattice);
  c.expect(dm_sx == Labels{{"00"}, {"00", "aa", "bb"},
                           {"00", "aa", "ab", "ba", "bb"}},
           "S_X for DM = " + labels_text(dm_sx));
  c.expect(dm.algebras.size() == 1 &&
               is_isomorphic(dm.algebras[0].algebra, corpus::algebra("D42")),
           "E(X) for DM is isomorphic to the ten-element algebra D42");

  auto const ds = tsm("dS", true);
  auto const ds_sx = testing::member_labels(ds.lattice);
  c.expect(ds_sx == Labels{{"00"}, {"00", "aa", "bb"}, {"00", "aa", "ab", "bb"}},
           "S_X for dS = " + labels_text(ds_sx));
  FiniteAlgebra const dsa = corpus::algebra("dS");
  FiniteAlgebra const parts[] = {bounds_of(dsa), dsa};
  c.expect(ds.algebras.size() == 1 &&
               is_isomorphic(ds.algebras[0].algebra, product(parts, "2xdS")),
           "E(X) for dS is isomorphic to 2 x dS");

  auto const l6 = tsm("L6", true);
  bool split_ok = false;
  if (l6.algebras.size() == 1) {
    auto const& e = l6.algebras[0].algebra;
    if (auto const sp = testing::split_as_product(e, 2, 10)) {
      FiniteAlgebra const f[] = {sp->left, sp->right};
      split_ok = is_isomorphic(e, product(f, "P"));
    }
  }
  c.expect(split_ok, "E(X) for L6 is 2 x (a ten-element factor)");
  return c;
}

// Strict order on End(M) = D(M), with the identity's position.
Criterion endomorphisms() {
  Criterion c;
  struct Row {
    char const* name;
    std::size_t count;
  };
  for (Row r : {Row{"D4", 2}, Row{"MS", 3}, Row{"dS", 3}, Row{"L6", 4}}) {
    AlterEgo const ego = corpus::alter_ego(r.name);
    std::size_t const n = count_homomorphisms(ego.base, ego.base);
    FiniteStructure const d = dual_space(ego.base, ego);
    auto const lt = testing::strict_pairs(d, "le");
    Element id = 0;
    for (Element p = 0; p < d.size; ++p) {
      bool is_id = true;
      for (std::size_t i = 0; i < d.coords[p].size(); ++i) {
        is_id = is_id && d.coords[p][i] == i;
      }
      if (is_id) {
        id = p;
      }
    }
    auto has = [&](Element p, Element q) {
      return std::find(lt.begin(), lt.end(), std::pair{p, q}) != lt.end();
    };
    bool order_ok = false;
    std::string shape;
    std::string const name = r.name;
    if (name == "D4") {
      order_ok = lt.empty();
      shape = "antichain";
    } else if (name == "MS") {
      order_ok = lt.size() == 1 && lt[0].first == id;
      shape = "one strict pair, id below";
    } else if (name == "dS") {
      // e1 < id < e2.
      order_ok = lt.size() == 3;
      for (Element p = 0; p < d.size && order_ok; ++p) {
        if (p != id) {
          order_ok = has(p, id) != has(id, p);
        }
      }
      shape = "three-chain, id in the middle";
    } else {
      // e1 < id < e3 and e1 < e2 < e3, id and e2 incomparable.
      order_ok = lt.size() == 5;
      std::size_t below = 0;
      std::size_t above = 0;
      std::size_t apart = 0;
      for (Element p = 0; p < d.size; ++p) {
        if (p == id) {
          continue;
        }
        below += has(p, id);
        above += has(id, p);
        apart += !has(p, id) && !has(id, p);
      }
      order_ok = order_ok && below == 1 && above == 1 && apart == 1;
      shape = "diamond, id on a side";
    }
    c.expect(n == r.count && d.size == r.count && order_ok,
             fmt("|End(%s)| = %zu (expected %zu), order: %s", r.name, n,
                 r.count, shape.c_str()));
  }
  return c;
}

Criterion oracle_equivalence() {
  Criterion c;
  auto const t = Clock::now();
  struct Run {
    char const* name;
    std::size_t count;
    std::size_t max_vars;
    std::uint64_t seed;
  };
  for (Run run : {Run{"D4", 100, 3, 20240601}, Run{"dS", 25, 2, 20240602}}) {
    FiniteAlgebra const m = corpus::algebra(run.name);
    FreeAlgebra const f = free_algebra(m, 2);
    auto const r = tsm(run.name, true);
    GeneratorSet test;
    for (auto const& a : r.algebras) {
      test.push_back(a.algebra);
    }
    RandomQidGenerator gen(m.signature(), run.seed,
                           {.max_vars = run.max_vars, .max_premises = 2,
                            .max_depth = 3});
    std::size_t disagree = 0;
    std::size_t invalid = 0;
    for (std::size_t i = 0; i < run.count; ++i) {
      auto const q = gen.next();
      bool const a = check_validity_free(f, q, {.workers = 0}).valid;
      bool const b = check_validity(test, q, {.workers = 0}).valid;
      invalid += !a;
      if (a != b) {
        ++disagree;
        c.note("      disagreement on " + print_quasi_identity(q));
      }
    }
    c.expect(disagree == 0,
             fmt("%s: %zu quasi-identities (seed %llu), %zu invalid, %zu "
                 "disagreements between F(2) (%zu) and E(X) (%zu)",
                 run.name, run.count,
                 static_cast<unsigned long long>(run.seed), invalid, disagree,
                 f.size(), ex_size(r)));
  }
  double const s = since(t);
  c.expect(s < 300, fmt("total %.2fs", s));
  return c;
}

Criterion property_suites() {
  Criterion c;
  auto run = [&](char const* what, testing::Outcome const& o) {
    c.expect(o.ok, fmt("%s: %zu checks%s%s", what, o.checked,
                       o.detail.empty() ? "" : ", ", o.detail.c_str()));
  };
  run("Galois correspondence", testing::suite_galois());
  run("ISP three-way agreement (50 pairs)", testing::suite_isp(50));
  run("e_M isomorphism", testing::suite_evaluation());
  run("D swaps embeddings and surjections", testing::suite_arrows());
  run("multiset order laws (1000)", testing::suite_multiset());
  run("MinGenSet bfs/dfs (corpus + 20 random)", testing::suite_min_gen_set(20));
  return c;
}

Criterion round_trips() {
  Criterion c;
  auto const corp = testing::round_trip_corpus();
  c.expect(corp.ok, fmt("corpus documents: %zu%s%s", corp.checked,
                        corp.ok ? "" : ", ", corp.detail.c_str()));
  auto const fuzz = testing::round_trip_fuzz(0xf022, 200);
  c.expect(fuzz.ok && fuzz.checked == 200,
           fmt("fuzzed documents: %zu%s%s", fuzz.checked, fuzz.ok ? "" : ", ",
               fuzz.detail.c_str()));
  for (auto const& name : corpus::algebra_names()) {
    if (!corpus::has_alter_ego(name)) {
      continue;
    }
    auto const r = check_compatibility(corpus::alter_ego(name));
    c.expect(r.ok, name + "~ compatible" +
                       (r.ok ? std::string() : ": " + r.violation));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--big") == 0) {
      big = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--big]\n");
      return 2;
    }
  }
  struct Entry {
    char const* title;
    std::function<Criterion()> run;
  };
  std::vector<Entry> const entries{
      {"free-algebra cardinalities", [&] { return free_sizes(big); }},
      {"test-spaces method outputs", tsm_rows},
      {"structure-level checks", structure_checks},
      {"endomorphism counts and orders", endomorphisms},
      {"free algebra and E(X) agree on random quasi-identities",
       oracle_equivalence},
      {"property suites", property_suites},
      {"parser round trips and compatibility", round_trips}};
  bool all = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const t = Clock::now();
    Criterion c;
    try {
      c = entries[i].run();
    } catch (std::exception const& e) {
      c.expect(false, std::string("unexpected error: ") + e.what());
    }
    for (auto const& n : c.notes) {
      std::printf("    %s\n", n.c_str());
    }
    std::printf("%s %zu: %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", i + 1,
                entries[i].title, since(t));
    std::fflush(stdout);
    all = all && c.ok;
  }
  return all ? 0 : 1;
}
