#include <catch_amalgamated.hpp>

#include <random>

#include "admit/corpus.hpp"
#include "admit/error.hpp"
#include "admit/structure.hpp"
#include "admit/ts_config.hpp"

using namespace admit;

namespace {

std::size_t naive_morphism_count(FiniteStructure const& x,
                                 FiniteStructure const& y) {
  std::vector<Element> map(x.size, 0);
  std::size_t count = 0;
  while (true) {
    count += is_struct_morphism(x, y, map);
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == y.size) {
      map[i++] = 0;
    }
    if (i == map.size()) {
      return count;
    }
  }
}

std::vector<Element> points_of(FiniteStructure const& power,
                               FiniteStructure const& hint) {
  std::vector<Element> pts;
  for (auto const& l : hint.labels) {
    auto const p = power.find_label(l);
    REQUIRE(p);
    pts.push_back(*p);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

// A three-point structure with a partial binary operation defined only on
// (0, 1), sending it to 2.
FiniteStructure partial_example() {
  FiniteStructure x;
  x.name = "P";
  x.size = 3;
  x.labels = {"p", "q", "r"};
  StructOp op{"j", 2, true, std::vector<Element>(9, kUndefined)};
  op.table[0 * 3 + 1] = 2;
  x.ops.push_back(op);
  x.validate();
  return x;
}

}  // namespace

TEST_CASE("corpus alter egos are compatible") {
  for (auto const& name : corpus::algebra_names()) {
    if (!corpus::has_alter_ego(name)) {
      continue;
    }
    INFO(name);
    auto const r = check_compatibility(corpus::alter_ego(name));
    INFO(r.violation);
    CHECK(r.ok);
    CHECK(r.violation.empty());
  }
}

TEST_CASE("incompatible alter egos are reported") {
  AlterEgo ego = corpus::alter_ego("D4");
  SECTION("operation") {
    // g no longer fixes the bottom.
    ego.tilde.ops[0].table[0] = *ego.tilde.find_label("1");
    auto const r = check_compatibility(ego);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("'g'") != std::string::npos);
  }
  SECTION("relation") {
    StructRelation a{"just_a", 1, {0, 1, 0, 0}};
    ego.tilde.relations.push_back(a);
    auto const r = check_compatibility(ego);
    CHECK_FALSE(r.ok);
    CHECK(r.violation.find("'just_a'") != std::string::npos);
  }
}

TEST_CASE("the binary relation of the K2 alter ego") {
  FiniteStructure const k = corpus::structure("K2~");
  auto const r = k.find_relation("r");
  REQUIRE(r);
  auto const at = [&](char const* p, char const* q) {
    Element args[] = {*k.find_label(p), *k.find_label(q)};
    return k.related(*r, args);
  };
  CHECK(at("0", "a"));
  CHECK(at("1", "c"));
  CHECK_FALSE(at("a", "0"));
  CHECK_FALSE(at("a", "a"));
}

TEST_CASE("powers of an alter ego") {
  FiniteStructure const t = corpus::structure("D4~");
  FiniteStructure const p1 = power_structure(t, 1);
  CHECK(structures_isomorphic(p1, t));
  FiniteStructure const p2 = power_structure(t, 2, "sq");
  CHECK(p2.size == 16);
  CHECK(p2.name == "sq");
  REQUIRE(p2.coords.size() == 16);
  Element const ab = *p2.find_label("ab");
  CHECK(p2.coords[ab] == std::vector<Element>{1, 2});
  // g acts coordinatewise.
  Element args[] = {ab};
  CHECK(p2.label(p2.apply(0, args)) == "ba");
  // Projections are morphisms.
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<Element> proj(16);
    for (Element p = 0; p < 16; ++p) {
      proj[p] = p2.coords[p][j];
    }
    CHECK(is_struct_morphism(p2, t, proj));
  }
  CHECK(power_structure(t, 3).size == 64);
}

TEST_CASE("substructure closure in the square") {
  FiniteStructure const sq = power_structure(corpus::structure("D4~"), 2);
  auto const lab = [&](char const* l) { return *sq.find_label(l); };
  auto const labels = [&](std::vector<Element> const& v) {
    std::vector<std::string> out;
    for (Element p : v) {
      out.push_back(sq.label(p));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  Element g1[] = {lab("ab")};
  CHECK(labels(substructure_closure(sq, g1)) ==
        std::vector<std::string>{"ab", "ba"});
  Element g2[] = {lab("00")};
  CHECK(labels(substructure_closure(sq, g2)) == std::vector<std::string>{"00"});
  Element g3[] = {lab("aa"), lab("01")};
  CHECK(substructure_closure(sq, g3).size() == 3);
  CHECK(substructure_closure(sq, std::span<Element const>{}).empty());

  std::vector<Element> const open{lab("ab")};
  CHECK_THROWS_AS(induced_substructure(sq, open), AlgebraError);
  auto const sub = induced_substructure(sq, substructure_closure(sq, g1), "S");
  CHECK(sub.structure.size == 2);
  CHECK(is_embedding(sub.structure, sq, sub.inclusion));
}

TEST_CASE("morphism search agrees with naive enumeration") {
  std::vector<FiniteStructure> xs;
  for (char const* name : {"D4~", "dS~", "K2~", "L6~"}) {
    xs.push_back(corpus::structure(name));
  }
  // Substructures of squares, as sources.
  for (char const* name : {"D4", "dS"}) {
    auto const sq = power_structure(corpus::structure(std::string(name) + "~"), 2);
    auto const hint = corpus::hint(name);
    REQUIRE(hint);
    xs.push_back(induced_substructure(sq, points_of(sq, *hint)).structure);
  }
  int compared = 0;
  for (auto const& x : xs) {
    for (auto const& y : xs) {
      if (!x.same_type(y) || x.size > 6) {
        continue;
      }
      INFO(x.name << " -> " << y.name);
      auto const all = enumerate_struct_morphisms(x, y);
      CHECK(all.size() == naive_morphism_count(x, y));
      CHECK(count_struct_morphisms(x, y) == all.size());
      std::size_t sur = 0;
      std::size_t emb = 0;
      for (auto const& m : all) {
        CHECK(is_struct_morphism(x, y, m.map));
        sur += m.surjective();
        emb += is_embedding(x, y, m.map);
      }
      CHECK(count_struct_morphisms(x, y, {.surjective = true}) == sur);
      CHECK(count_struct_morphisms(x, y, {.embedding = true}) == emb);
      CHECK(enumerate_struct_morphisms(x, y, MorphMode::first).size() ==
            std::min<std::size_t>(1, all.size()));
      ++compared;
    }
  }
  CHECK(compared >= 8);
}

TEST_CASE("partial operations") {
  FiniteStructure const x = partial_example();
  Element args[] = {0, 1};
  CHECK(x.apply(0, args) == 2);
  Element other[] = {1, 0};
  CHECK(x.apply(0, other) == kUndefined);

  Element g[] = {0, 1};
  CHECK(substructure_closure(x, g) == std::vector<Element>{0, 1, 2});
  Element g2[] = {1, 2};
  CHECK(substructure_closure(x, g2) == std::vector<Element>{1, 2});
  auto const sub = induced_substructure(x, std::vector<Element>{1, 2});
  CHECK(sub.structure.ops[0].table ==
        std::vector<Element>(4, kUndefined));

  // The identity is a morphism; a map that leaves the domain is not.
  CHECK(is_struct_morphism(x, x, std::vector<Element>{0, 1, 2}));
  CHECK_FALSE(is_struct_morphism(x, x, std::vector<Element>{1, 0, 2}));
  CHECK(is_struct_morphism(x, x, std::vector<Element>{2, 2, 2}) == false);
  // Collapsing onto the substructure is a morphism from it, not an
  // embedding of x.
  CHECK(is_struct_morphism(sub.structure, x, sub.inclusion));
  CHECK_FALSE(is_embedding(sub.structure, x, std::vector<Element>{0, 1}));
  CHECK(count_struct_morphisms(x, x) == naive_morphism_count(x, x));
}

TEST_CASE("malformed structures are rejected") {
  FiniteStructure x = partial_example();
  x.ops[0].partial = false;
  CHECK_THROWS_AS(x.validate(), AlgebraError);
  x = partial_example();
  x.ops[0].table.pop_back();
  CHECK_THROWS_AS(x.validate(), AlgebraError);
  x = partial_example();
  x.labels.pop_back();
  CHECK_THROWS_AS(x.validate(), AlgebraError);
}

TEST_CASE("test-space configurations") {
  AlterEgo const ego = corpus::alter_ego("D4");
  FiniteStructure const sq = power_structure(ego.tilde, 2);
  auto const pts = points_of(sq, *corpus::hint("D4"));

  auto const cfg = configuration_on(ego, 2, pts);
  REQUIRE(cfg);
  CHECK(cfg->x.size == 5);
  auto const v = verify_ts_configuration(*cfg, ego);
  INFO(v.violation);
  CHECK(v.ok);
  CHECK(cfg->gamma.surjective());
  CHECK(cfg->eta.injective());

  SECTION("without the fixed point nothing maps the square onto X") {
    auto less = pts;
    less.erase(std::find(less.begin(), less.end(), *sq.find_label("00")));
    CHECK_FALSE(configuration_on(ego, 2, less));
  }
  SECTION("a broken gamma fails verification") {
    auto bad = *cfg;
    std::fill(bad.gamma.map.begin(), bad.gamma.map.end(), bad.gamma.map[0]);
    CHECK_FALSE(verify_ts_configuration(bad, ego).ok);
  }
  SECTION("a non-injective eta fails verification") {
    auto bad = *cfg;
    std::fill(bad.eta.map.begin(), bad.eta.map.end(), bad.eta.map[0]);
    CHECK_FALSE(verify_ts_configuration(bad, ego).ok);
  }
  SECTION("search finds the same size") {
    TSSearchStats stats;
    auto const found = search_ts_configuration(ego, 2, 0, &stats);
    CHECK(found.x.size == 5);
    CHECK(verify_ts_configuration(found, ego).ok);
    CHECK(stats.substructures > 0);
    CHECK(structures_isomorphic(found.x, cfg->x));
  }
  SECTION("a tight size cap exhausts the search") {
    CHECK_THROWS_AS(search_ts_configuration(ego, 2, 4), SearchExhausted);
  }
}
