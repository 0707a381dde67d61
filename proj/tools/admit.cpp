// Command-line driver. Exit status: 0 valid / all cells pass, 1 invalid /
// some cell fails, 2 error (diagnostic on stderr).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "admit/admissibility.hpp"
#include "admit/constructions.hpp"
#include "admit/corpus.hpp"
#include "admit/duality.hpp"
#include "admit/error.hpp"
#include "admit/free_algebra.hpp"
#include "admit/io.hpp"
#include "admit/kernels.hpp"
#include "admit/quasivariety.hpp"
#include "admit/ts_config.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace admit;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Input source shared by most subcommands: a corpus entry or files.
struct Source {
  std::string corpus;
  std::vector<std::string> alg_files;
  std::string ego_file;

  void attach(CLI::App* cmd, bool many_algebras = false) {
    auto* c = cmd->add_option("--corpus", corpus, "built-in algebra name");
    CLI::Option* a;
    if (many_algebras) {
      a = cmd->add_option("--alg", alg_files, ".alg file(s)");
    } else {
      a = cmd->add_option("--alg", alg_files, ".alg file")->expected(1);
    }
    c->excludes(a);
    a->excludes(c);
    cmd->add_option("--ego", ego_file, "alter ego .str file (with --alg)")
        ->excludes(c);
  }

  std::vector<FiniteAlgebra> algebras() const {
    if (!corpus.empty()) {
      return {corpus::algebra(corpus)};
    }
    if (alg_files.empty()) {
      throw Error("give --corpus NAME or --alg FILE");
    }
    std::vector<FiniteAlgebra> out;
    for (auto const& f : alg_files) {
      out.push_back(parse_algebra(read_file(f)));
    }
    return out;
  }

  FiniteAlgebra algebra() const { return algebras().front(); }

  AlterEgo ego() const {
    if (!corpus.empty()) {
      if (!corpus::has_alter_ego(corpus)) {
        throw Error("corpus entry '" + corpus + "' has no alter ego");
      }
      return corpus::alter_ego(corpus);
    }
    if (ego_file.empty()) {
      throw Error("give --ego FILE with --alg");
    }
    AlterEgo e{algebra(), parse_structure(read_file(ego_file))};
    if (e.tilde.size != e.base.size()) {
      throw Error("alter ego and algebra have different sizes");
    }
    return e;
  }
};

struct Common {
  std::string format = "text";
  unsigned workers = 0;
  std::size_t mem_mib = 2048;
  std::size_t size_cap = 0;

  bool machine() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

std::string labels_text(std::vector<std::string> const& labels,
                        std::vector<Element> const& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += (i ? ", " : "") + labels[pts[i]];
  }
  return s + "}";
}

std::string assignment_text(FiniteAlgebra const& a, Assignment const& asg) {
  std::string s;
  for (std::size_t i = 0; i < asg.values.size(); ++i) {
    s += (i ? ", " : "") + std::string("x") + std::to_string(i) + " = " +
         a.label(asg.values[i]);
  }
  return s.empty() ? "(no variables)" : s;
}

json assignment_json(FiniteAlgebra const& a, Assignment const& asg) {
  json j = json::object();
  for (std::size_t i = 0; i < asg.values.size(); ++i) {
    j["x" + std::to_string(i)] = a.label(asg.values[i]);
  }
  return j;
}

void require_signature(Signature const& sig,
                       std::vector<FiniteAlgebra> const& algs) {
  for (auto const& a : algs) {
    if (!(a.signature() == sig)) {
      throw Error("algebras '" + algs.front().name() + "' and '" + a.name() +
                  "' have different signatures");
    }
  }
}

// ---------------------------------------------------------------------------
// TSM with an on-disk cache keyed by a hash of (algebra, alter ego, s).

std::uint64_t fnv1a(std::string const& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

fs::path default_cache_dir() {
  if (char const* d = std::getenv("ADMIT_CACHE_DIR")) {
    return d;
  }
  if (char const* x = std::getenv("XDG_CACHE_HOME")) {
    return fs::path(x) / "admit";
  }
  if (char const* h = std::getenv("HOME")) {
    return fs::path(h) / ".cache" / "admit";
  }
  return ".admit-cache";
}

struct TestSet {
  std::vector<std::string> x_points;
  std::vector<FiniteAlgebra> algebras;
  bool cached = false;
};

std::string cache_key(AlterEgo const& ego, std::size_t s) {
  std::ostringstream k;
  k << std::hex << std::setw(16) << std::setfill('0')
    << fnv1a(print_algebra(ego.base) + "\n" + print_structure(ego.tilde) +
             "\ns=" + std::to_string(s));
  return k.str();
}

TestSet cached_test_set(AlterEgo const& ego, std::size_t s,
                        FiniteStructure const* hint, std::size_t size_cap,
                        std::optional<fs::path> const& dir) {
  std::string const key = cache_key(ego, s);
  if (dir) {
    fs::path const file = *dir / (key + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        json j = json::parse(in);
        if (j.at("key") == key) {
          TestSet t;
          t.x_points = j.at("x").get<std::vector<std::string>>();
          for (auto const& doc : j.at("algebras")) {
            t.algebras.push_back(parse_algebra(doc.get<std::string>()));
          }
          t.cached = true;
          return t;
        }
      } catch (std::exception const&) {
        // Unreadable entries are recomputed and overwritten.
      }
    }
  }
  TSMResult r = test_spaces_method(ego, s, hint, size_cap);
  TestSet t;
  t.x_points = r.config.x.labels;
  for (auto const& a : r.algebras) {
    t.algebras.push_back(a.algebra);
  }
  if (dir) {
    std::error_code ec;
    fs::create_directories(*dir, ec);
    json j;
    j["key"] = key;
    j["s"] = s;
    j["x"] = t.x_points;
    j["algebras"] = json::array();
    for (auto const& a : t.algebras) {
      j["algebras"].push_back(print_algebra(a));
    }
    std::ofstream out(*dir / (key + ".json"));
    out << j.dump(1) << "\n";
  }
  return t;
}

std::optional<FiniteStructure> load_hint(Source const& src,
                                         std::string const& hint_file,
                                         bool search) {
  if (!hint_file.empty()) {
    return parse_structure(read_file(hint_file));
  }
  if (!search && !src.corpus.empty()) {
    return corpus::hint(src.corpus);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

int cmd_check(Source const& src, std::string const& qid_file,
              Common const& c) {
  auto const algs = src.algebras();
  require_signature(algs.front().signature(), algs);
  auto const qs =
      parse_quasi_identities(read_file(qid_file), algs.front().signature());
  bool all_valid = true;
  json results = json::array();
  for (auto const& q : qs) {
    auto const r = check_validity(algs, q, {c.workers});
    all_valid = all_valid && r.valid;
    json j;
    j["qid"] = print_quasi_identity(q);
    j["valid"] = r.valid;
    j["evaluations"] = r.evaluations;
    if (r.witness) {
      auto const& a = algs[r.witness->algebra];
      j["algebra"] = a.name();
      j["assignment"] = assignment_json(a, r.witness->assignment);
    }
    if (!c.machine()) {
      std::cout << (r.valid ? "valid    " : "INVALID  ") << print_quasi_identity(q)
                << "\n";
      if (r.witness) {
        auto const& a = algs[r.witness->algebra];
        std::cout << "  fails in " << a.name() << " at "
                  << assignment_text(a, r.witness->assignment) << "\n";
      }
    }
    results.push_back(std::move(j));
  }
  if (c.machine()) {
    std::cout << json{{"command", "check"}, {"results", results}}.dump(1)
              << "\n";
  }
  return all_valid ? kOk : kNo;
}

struct AdmissibleOpts {
  std::string via = "test";
  std::size_t s = 2;
  std::string hint;
  bool search = false;
  std::string cache_dir;
  bool no_cache = false;
};

int cmd_admissible(Source const& src, std::string const& qid_file,
                   AdmissibleOpts const& o, Common const& c) {
  FiniteAlgebra const m = src.algebra();
  auto const qs = parse_quasi_identities(read_file(qid_file), m.signature());
  bool all = true;
  json results = json::array();
  json info;
  info["route"] = o.via;
  auto const t0 = Clock::now();

  std::optional<FreeAlgebra> f;
  TestSet ts;
  if (o.via == "free") {
    try {
      f = free_algebra(m, o.s, {c.mem_mib << 20});
    } catch (BudgetExceeded const& e) {
      throw Error(std::string(e.what()) + " (reached " +
                  std::to_string(e.reached()) +
                  " elements); raise --mem to allow more");
    }
    info["free_size"] = f->size();
  } else {
    AlterEgo const ego = src.ego();
    auto const hint = load_hint(src, o.hint, o.search);
    std::optional<fs::path> dir;
    if (!o.no_cache) {
      dir = o.cache_dir.empty() ? default_cache_dir() : fs::path(o.cache_dir);
    }
    ts = cached_test_set(ego, o.s, hint ? &*hint : nullptr, c.size_cap, dir);
    info["cache_hit"] = ts.cached;
    info["test_sizes"] = json::array();
    for (auto const& a : ts.algebras) {
      info["test_sizes"].push_back(a.size());
    }
  }
  info["setup_seconds"] = since(t0);

  if (!c.machine()) {
    std::cout << "route: " << o.via;
    if (f) {
      std::cout << " (free algebra on " << o.s << " generators, " << f->size()
                << " elements)";
    } else {
      std::cout << " (test algebras of sizes";
      for (auto const& a : ts.algebras) {
        std::cout << " " << a.size();
      }
      std::cout << (ts.cached ? ", cached" : ", computed") << ")";
    }
    std::cout << "\n";
  }
  for (auto const& q : qs) {
    CheckReport r = f ? check_validity_free(*f, q, {c.workers})
                      : check_validity(ts.algebras, q, {c.workers});
    all = all && r.valid;
    json j;
    j["qid"] = print_quasi_identity(q);
    j["admissible"] = r.valid;
    j["evaluations"] = r.evaluations;
    j["seconds"] = r.seconds;
    std::string detail;
    if (r.witness && f) {
      auto subst = counterexample_substitution(r, *f);
      json sj = json::object();
      for (std::size_t i = 0; i < subst.size(); ++i) {
        sj["x" + std::to_string(i)] = print_term(subst[i]);
        detail += (i ? ", " : "") + std::string("x") + std::to_string(i) +
                  " -> " + print_term(subst[i]);
      }
      j["substitution"] = sj;
      detail = "unifier of the premises not unifying the conclusion: " + detail;
    } else if (r.witness) {
      auto const& a = ts.algebras[r.witness->algebra];
      j["algebra"] = a.name();
      j["assignment"] = assignment_json(a, r.witness->assignment);
      detail = "fails in " + a.name() + " at " +
               assignment_text(a, r.witness->assignment);
    }
    if (!c.machine()) {
      std::cout << (r.valid ? "admissible      " : "NOT admissible  ")
                << print_quasi_identity(q) << "   [" << r.evaluations
                << " evaluations, " << std::fixed << std::setprecision(3)
                << r.seconds << "s]\n";
      std::cout.unsetf(std::ios::fixed);
      if (!detail.empty()) {
        std::cout << "  " << detail << "\n";
      }
    }
    results.push_back(std::move(j));
  }
  if (c.machine()) {
    std::cout << json{{"command", "admissible"}, {"info", info},
                      {"results", results}}
                     .dump(1)
              << "\n";
  }
  return all ? kOk : kNo;
}

struct TsmOpts {
  std::size_t s = 2;
  std::string hint;
  bool search = false;
  std::string out_dir;
};

int cmd_tsm(Source const& src, TsmOpts const& o, Common const& c) {
  AlterEgo const ego = src.ego();
  auto const hint = load_hint(src, o.hint, o.search);
  auto const t0 = Clock::now();
  TSMResult r;
  try {
    r = test_spaces_method(ego, o.s, hint ? &*hint : nullptr, c.size_cap);
  } catch (SearchExhausted const& e) {
    throw Error(std::string(e.what()) + "; raise --size-cap (reached " +
                std::to_string(e.cap()) + ")");
  }
  double const secs = since(t0);
  auto const& x = r.config.x;
  auto const& lat = r.lattice;

  json j;
  j["command"] = "tsm";
  j["algebra"] = ego.base.name();
  j["s"] = o.s;
  j["dual"] = {{"size", r.dual_m.size}, {"points", r.dual_m.labels}};
  j["x"] = {{"size", x.size}, {"points", x.labels},
            {"from_hint", r.from_hint},
            {"eta", labels_text(x.labels, r.config.eta.map)}};
  if (!r.from_hint) {
    j["search"] = {{"substructures", r.search.substructures},
                   {"iso_classes", r.search.iso_classes}};
  }
  j["lattice"] = json::array();
  for (std::size_t i = 0; i < lat.members.size(); ++i) {
    bool const maximal =
        std::find(r.maximal.begin(), r.maximal.end(), i) != r.maximal.end();
    std::vector<std::string> pts;
    for (Element p : lat.members[i]) {
      pts.push_back(x.labels[p]);
    }
    j["lattice"].push_back({{"points", pts},
                            {"join_irreducible", bool(lat.join_irreducible[i])},
                            {"maximal", maximal}});
  }
  j["sweep_skipped"] = r.sweep_skipped;
  j["algebras"] = json::array();
  for (auto const& a : r.algebras) {
    j["algebras"].push_back(
        {{"size", a.algebra.size()}, {"document", print_algebra(a.algebra)}});
  }
  j["seconds"] = secs;

  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    for (std::size_t i = 0; i < r.algebras.size(); ++i) {
      std::string const file =
          ego.base.name() + "-E" +
          (r.algebras.size() > 1 ? std::to_string(i) : std::string()) + ".alg";
      std::ofstream out(fs::path(o.out_dir) / file);
      out << print_algebra(r.algebras[i].algebra);
    }
  }

  if (c.machine()) {
    std::cout << j.dump(1) << "\n";
    return kOk;
  }
  std::cout << "algebra " << ego.base.name() << ", s = " << o.s << "\n";
  std::cout << "D(M): " << r.dual_m.size << " points "
            << labels_text(r.dual_m.labels, [&] {
                 std::vector<Element> v(r.dual_m.size);
                 std::iota(v.begin(), v.end(), 0);
                 return v;
               }())
            << "\n";
  std::cout << "X: " << x.size << " points "
            << labels_text(x.labels, [&] {
                 std::vector<Element> v(x.size);
                 std::iota(v.begin(), v.end(), 0);
                 return v;
               }())
            << (r.from_hint ? " (from hint)" : " (searched)") << "\n";
  if (!r.from_hint) {
    std::cout << "  " << r.search.substructures << " substructures visited, "
              << r.search.iso_classes << " isomorphism classes tested\n";
  }
  std::cout << "  D(M) embeds as " << labels_text(x.labels, r.config.eta.map)
            << "\n";
  std::cout << "X-substructures of X: " << lat.members.size() << "\n";
  for (std::size_t i = 0; i < lat.members.size(); ++i) {
    bool const maximal =
        std::find(r.maximal.begin(), r.maximal.end(), i) != r.maximal.end();
    std::cout << "  " << labels_text(x.labels, lat.members[i])
              << (lat.join_irreducible[i] ? "  join-irreducible" : "")
              << (maximal ? ", maximal" : "") << "\n";
  }
  std::cout << "survivors: " << r.survivors.size()
            << (r.sweep_skipped ? " (single maximal element, no sweep)" : "")
            << "\n";
  for (auto const& a : r.algebras) {
    std::cout << "\n" << print_algebra(a.algebra);
  }
  std::cout << "\n# " << std::fixed << std::setprecision(3) << secs << "s\n";
  return kOk;
}

int cmd_mingenset(std::vector<std::string> const& files,
                  std::string const& method, bool emit, Common const& c) {
  GeneratorSet k;
  for (auto const& f : files) {
    k.push_back(parse_algebra(read_file(f)));
  }
  require_signature(k.front().signature(), k);
  GeneratorSet const g = method == "dfs" ? min_gen_set_dfs(k)
                                         : min_gen_set_bfs(k);
  if (c.machine()) {
    json j;
    j["command"] = "mingenset";
    j["method"] = method;
    j["algebras"] = json::array();
    for (auto const& a : g) {
      j["algebras"].push_back({{"name", a.name()},
                               {"size", a.size()},
                               {"document", print_algebra(a)}});
    }
    std::cout << j.dump(1) << "\n";
    return kOk;
  }
  std::cout << "minimal generating set (" << method << "): " << g.size()
            << " algebra" << (g.size() == 1 ? "" : "s") << "\n";
  for (auto const& a : g) {
    std::cout << "  " << a.name() << "  |" << a.size() << "|\n";
  }
  if (emit) {
    for (auto const& a : g) {
      std::cout << "\n" << print_algebra(a);
    }
  }
  return kOk;
}

int cmd_subprehom(std::string const& fa, std::string const& fb, bool emit,
                  Common const& c) {
  FiniteAlgebra const a = parse_algebra(read_file(fa));
  FiniteAlgebra const b = parse_algebra(read_file(fb));
  SubPreHom const r = sub_pre_hom(a, b);
  std::vector<Element> universe = r.sub.inclusion;
  std::string surj;
  for (std::size_t i = 0; i < r.surjection.map.size(); ++i) {
    surj += (i ? ", " : "") + a.label(r.sub.inclusion[i]) + " -> " +
            b.label(r.surjection.map[i]);
  }
  if (c.machine()) {
    json j;
    j["command"] = "subprehom";
    j["size"] = r.sub.algebra.size();
    std::vector<std::string> gens, uni;
    for (Element g : r.generators) {
      gens.push_back(a.label(g));
    }
    for (Element u : universe) {
      uni.push_back(a.label(u));
    }
    j["generators"] = gens;
    j["universe"] = uni;
    j["surjection"] = surj;
    j["document"] = print_algebra(r.sub.algebra);
    std::cout << j.dump(1) << "\n";
    return kOk;
  }
  std::cout << "subalgebra of " << a.name() << " with " << r.sub.algebra.size()
            << " elements maps onto " << b.name() << "\n";
  std::cout << "  generators " << labels_text(a.labels(), r.generators) << "\n";
  std::cout << "  universe   " << labels_text(a.labels(), universe) << "\n";
  std::cout << "  surjection " << surj << "\n";
  if (emit) {
    std::cout << "\n" << print_algebra(r.sub.algebra);
  }
  return kOk;
}

int cmd_dual(Source const& src, std::string const& alg_file, Common const& c) {
  AlterEgo const ego = src.ego();
  FiniteAlgebra const a =
      alg_file.empty() ? ego.base : parse_algebra(read_file(alg_file));
  FiniteStructure const d = dual_space(a, ego, "D(" + a.name() + ")");
  if (c.machine()) {
    std::cout << json{{"command", "dual"},
                      {"size", d.size},
                      {"document", print_structure(d)}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << print_structure(d);
  }
  return kOk;
}

// A structure with no operations or relations, like the corpus hints, is
// read as a point set of the s-th power and given the induced structure.
FiniteStructure resolve_points(FiniteStructure x, AlterEgo const& ego,
                               std::size_t s) {
  if (!x.ops.empty() || !x.relations.empty()) {
    return x;
  }
  FiniteStructure const power = power_structure(ego.tilde, s);
  std::vector<Element> pts;
  for (auto const& l : x.labels) {
    auto p = power.find_label(l);
    if (!p) {
      throw Error("point '" + l + "' of '" + x.name + "' is not a point of the " +
                  std::to_string(s) + "-th power of the alter ego");
    }
    pts.push_back(*p);
  }
  std::sort(pts.begin(), pts.end());
  return induced_substructure(power, pts, x.name).structure;
}

int cmd_eval(Source const& src, std::string const& str_file, std::size_t s,
             Common const& c) {
  AlterEgo const ego = src.ego();
  FiniteStructure const x =
      resolve_points(parse_structure(read_file(str_file)), ego, s);
  MorphismAlgebra const e = eval_functor(x, ego, "E(" + x.name + ")");
  if (c.machine()) {
    std::cout << json{{"command", "eval"},
                      {"size", e.algebra.size()},
                      {"document", print_algebra(e.algebra)}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << print_algebra(e.algebra);
  }
  return kOk;
}

struct TableOpts {
  std::vector<std::string> rows;
  bool big = false;
};

int cmd_reproduce_table(TableOpts const& o, Common const& c) {
  for (auto const& r : o.rows) {
    if (!corpus::case_study(r)) {
      throw Error("unknown row '" + r + "'");
    }
  }
  bool all = true;
  json cells = json::array();
  auto report = [&](std::string const& row, std::string const& cell,
                    std::string const& expected, std::string const& got,
                    bool pass, double secs) {
    all = all && pass;
    cells.push_back({{"row", row},
                     {"cell", cell},
                     {"expected", expected},
                     {"got", got},
                     {"pass", pass},
                     {"seconds", secs}});
    if (!c.machine()) {
      std::cout << std::left << std::setw(18) << row << std::setw(8) << cell
                << std::right << std::setw(10) << expected << std::setw(10)
                << got << "  " << (pass ? "PASS" : "FAIL") << "  "
                << std::fixed << std::setprecision(2) << secs << "s\n"
                << std::flush;
      std::cout.unsetf(std::ios::fixed);
    }
  };
  if (!c.machine()) {
    std::cout << std::left << std::setw(18) << "row" << std::setw(8) << "cell"
              << std::right << std::setw(10) << "expected" << std::setw(10)
              << "got" << "\n";
  }
  for (auto const& cs : corpus::case_studies()) {
    if (!o.rows.empty() &&
        std::find(o.rows.begin(), o.rows.end(), cs.row) == o.rows.end()) {
      continue;
    }
    auto t = Clock::now();
    FiniteAlgebra const m = corpus::algebra(cs.algebra);
    report(cs.row, "|M|", std::to_string(cs.m_size), std::to_string(m.size()),
           m.size() == cs.m_size, since(t));

    if (cs.big && !o.big) {
      if (!c.machine()) {
        std::cout << std::left << std::setw(18) << cs.row << std::setw(8)
                  << "|F|" << std::right << std::setw(10) << cs.free_size
                  << std::setw(10) << "-" << "  skipped (needs --big)\n";
      }
    } else {
      t = Clock::now();
      std::string got;
      bool pass = false;
      try {
        std::size_t const n =
            cs.big ? free_algebra_size_relational(m, cs.s)
                   : free_algebra(m, cs.s, {c.mem_mib << 20}).size();
        got = std::to_string(n);
        pass = n == cs.free_size;
      } catch (BudgetExceeded const& e) {
        got = "budget";
        if (!c.machine()) {
          std::cerr << cs.row << ": " << e.what() << "; raise --mem\n";
        }
      }
      report(cs.row, "|F|", std::to_string(cs.free_size), got, pass, since(t));
    }

    t = Clock::now();
    if (!corpus::has_alter_ego(cs.algebra)) {
      report(cs.row, "|X|", std::to_string(cs.x_size), "no ego", false,
             since(t));
      continue;
    }
    std::string gx = "exhausted";
    std::string ge = "-";
    bool px = false;
    bool pe = false;
    try {
      TSMResult const r =
          test_spaces_method(corpus::alter_ego(cs.algebra), cs.s, nullptr,
                             c.size_cap);
      gx = std::to_string(r.config.x.size);
      px = r.config.x.size == cs.x_size;
      ge.clear();
      std::size_t total = 0;
      for (auto const& a : r.algebras) {
        ge += (ge.empty() ? "" : "+") + std::to_string(a.algebra.size());
        total += a.algebra.size();
      }
      pe = r.algebras.size() == 1 && total == cs.ex_size;
    } catch (SearchExhausted const&) {
    }
    double const secs = since(t);
    report(cs.row, "|X|", std::to_string(cs.x_size), gx, px, secs);
    report(cs.row, "|E(X)|", std::to_string(cs.ex_size), ge, pe, 0.0);
  }
  if (c.machine()) {
    std::cout << json{{"command", "reproduce-table"},
                      {"cells", cells},
                      {"all_pass", all}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << (all ? "all attempted cells pass\n"
                      : "some cells FAIL\n");
  }
  return all ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissibility of quasi-identities in finitely generated "
               "quasivarieties"};
  app.require_subcommand(1);
  Common common;
  std::string kernel_set;
  app.add_option("--kernels", kernel_set,
                 "auto, scalar or avx2 (default: ADMIT_KERNELS, else auto)")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", common.workers,
                    "worker threads, 0 = all cores; results do not depend on "
                    "it");
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--size-cap", common.size_cap,
                    "largest test space tried, 0 = no cap");
  };
  auto add_mem = [&](CLI::App* cmd) {
    cmd->add_option("--mem", common.mem_mib,
                    "memory budget for free algebras, MiB");
  };

  // check
  Source check_src;
  std::string check_qid;
  auto* check = app.add_subcommand("check", "validity of quasi-identities");
  check_src.attach(check, true);
  check->add_option("qid", check_qid, ".qid file")->required();
  add_workers(check);
  add_format(check, common);

  // admissible
  Source adm_src;
  std::string adm_qid;
  AdmissibleOpts adm;
  auto* admissible =
      app.add_subcommand("admissible", "admissibility via free algebra or TSM");
  adm_src.attach(admissible);
  admissible->add_option("qid", adm_qid, ".qid file")->required();
  admissible->add_option("--via", adm.via, "free or test")
      ->check(CLI::IsMember({"free", "test"}));
  admissible->add_option("-s", adm.s, "number of generators");
  admissible->add_option("--hint", adm.hint, "test space hint .str file");
  admissible->add_flag("--search", adm.search, "ignore the corpus hint");
  admissible->add_option("--cache-dir", adm.cache_dir, "TSM cache directory");
  admissible->add_flag("--no-cache", adm.no_cache, "do not use the TSM cache");
  add_workers(admissible);
  add_mem(admissible);
  add_cap(admissible);
  add_format(admissible, common);

  // tsm
  Source tsm_src;
  TsmOpts tsm;
  auto* tsmc = app.add_subcommand("tsm", "run the test spaces method");
  tsm_src.attach(tsmc);
  tsmc->add_option("-s", tsm.s, "number of generators");
  tsmc->add_option("--hint", tsm.hint, "test space hint .str file");
  tsmc->add_flag("--search", tsm.search, "ignore the corpus hint");
  tsmc->add_option("--out", tsm.out_dir, "write E(X) .alg files here");
  add_cap(tsmc);
  add_format(tsmc, common);

  // mingenset
  std::vector<std::string> mgs_files;
  std::string mgs_method = "bfs";
  bool mgs_emit = false;
  auto* mgs = app.add_subcommand("mingenset", "minimal generating set");
  mgs->add_option("algebras", mgs_files, ".alg files")->required();
  mgs->add_option("--method", mgs_method, "bfs or dfs")
      ->check(CLI::IsMember({"bfs", "dfs"}));
  mgs->add_flag("--emit", mgs_emit, "print the algebras");
  add_format(mgs, common);

  // subprehom
  std::string sph_a, sph_b;
  bool sph_emit = false;
  auto* sph = app.add_subcommand(
      "subprehom", "least subalgebra of A with B as a homomorphic image");
  sph->add_option("A", sph_a, ".alg file")->required();
  sph->add_option("B", sph_b, ".alg file")->required();
  sph->add_flag("--emit", sph_emit, "print the subalgebra");
  add_format(sph, common);

  // dual
  Source dual_src;
  std::string dual_alg;
  auto* dual = app.add_subcommand("dual", "dual space D(A) as a .str document");
  dual_src.attach(dual);
  dual->add_option("A", dual_alg, ".alg file (default: the algebra itself)");
  add_format(dual, common);

  // eval
  Source eval_src;
  std::string eval_str;
  auto* eval = app.add_subcommand("eval", "E(X) as an .alg document");
  eval_src.attach(eval);
  std::size_t eval_s = 2;
  eval->add_option("X", eval_str, ".str file, or bare point set of a power")
      ->required();
  eval->add_option("-s", eval_s, "power for bare point sets");
  add_format(eval, common);

  // reproduce-table
  TableOpts table;
  std::string row;
  auto* rt = app.add_subcommand("reproduce-table",
                                "recompute the case-study table");
  rt->add_option("--row", table.rows, "restrict to these rows");
  rt->add_flag("--big", table.big, "include the free algebras above 10^6");
  add_mem(rt);
  add_cap(rt);
  add_format(rt, common);

  // Remaining flags accepted everywhere for uniform scripting.
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomised runs");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (!kernel_set.empty() && !kernels::select(kernel_set)) {
      throw Error("kernel set '" + kernel_set + "' is not available here");
    }
    if (*check) {
      return cmd_check(check_src, check_qid, common);
    }
    if (*admissible) {
      return cmd_admissible(adm_src, adm_qid, adm, common);
    }
    if (*tsmc) {
      return cmd_tsm(tsm_src, tsm, common);
    }
    if (*mgs) {
      return cmd_mingenset(mgs_files, mgs_method, mgs_emit, common);
    }
    if (*sph) {
      return cmd_subprehom(sph_a, sph_b, sph_emit, common);
    }
    if (*dual) {
      return cmd_dual(dual_src, dual_alg, common);
    }
    if (*eval) {
      return cmd_eval(eval_src, eval_str, eval_s, common);
    }
    if (*rt) {
      return cmd_reproduce_table(table, common);
    }
  } catch (std::exception const& e) {
    std::cerr << "admit: error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
