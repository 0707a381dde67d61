#include <catch_amalgamated.hpp>

#include "admit/constructions.hpp"
#include "admit/corpus.hpp"
#include "admit/error.hpp"
#include "admit/homomorphism.hpp"
#include "admit/io.hpp"

using namespace admit;

namespace {

Element el(FiniteAlgebra const& a, std::string_view label) {
  auto e = a.find_label(label);
  REQUIRE(e.has_value());
  return *e;
}

Term x(std::size_t i) { return Term::variable(i); }
Term ap(std::string op, std::vector<Term> args = {}) {
  return Term::apply(std::move(op), std::move(args));
}

}  // namespace

TEST_CASE("signature lookup") {
  Signature const sig({{"meet", 2}, {"neg", 1}, {"bot", 0}});
  CHECK(sig.size() == 3);
  CHECK(sig.find("neg") == 1u);
  CHECK_FALSE(sig.find("join"));
  CHECK(sig.max_arity() == 2);
  CHECK_THROWS_AS(sig.index_of("join"), AlgebraError);
  CHECK_THROWS_AS(Signature({{"f", 1}, {"f", 2}}), AlgebraError);
  CHECK_THROWS_AS(Signature({{"f", -1}}), AlgebraError);
}

TEST_CASE("algebra construction validates tables") {
  Signature const sig({{"f", 1}});
  CHECK_NOTHROW(FiniteAlgebra("A", sig, 2, {{1, 0}}));
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 2, {{1, 2}}), AlgebraError);
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 2, {{1}}), AlgebraError);
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 2, {}), AlgebraError);
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 0, {{}}), AlgebraError);
  FiniteAlgebra const a("A", sig, 3, {{1, 2, 0}});
  CHECK(a.labels() == std::vector<std::string>{"0", "1", "2"});
  CHECK(a.unary(0, 2) == 0);
}

TEST_CASE("term evaluation") {
  FiniteAlgebra const d4 = corpus::algebra("D4");
  Element const a = el(d4, "a");

  SECTION("a variable evaluates to its value") {
    FiniteAlgebra const big("B", Signature{}, 5, {});
    CHECK(eval_term(x(0), big, {{3}}) == 3);
  }
  SECTION("double negation is the identity in D4") {
    CHECK(eval_term(ap("neg", {ap("neg", {x(0)})}), d4, {{a}}) == a);
    for (Element e = 0; e < d4.size(); ++e) {
      CHECK(eval_term(ap("neg", {ap("neg", {x(0)})}), d4, {{e}}) == e);
    }
  }
  SECTION("x meet neg x at a is a, since neg fixes a") {
    CHECK(eval_term(ap("meet", {x(0), ap("neg", {x(0)})}), d4, {{a}}) == a);
  }
  SECTION("constants") {
    CHECK(eval_term(ap("top"), d4, {}) == el(d4, "1"));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(eval_term(ap("join", {x(0)}), d4, {{a}}), AlgebraError);
    CHECK_THROWS_AS(eval_term(ap("impl", {x(0), x(0)}), d4, {{a}}),
                    AlgebraError);
    CHECK_THROWS_AS(eval_term(x(1), d4, {{a}}), AlgebraError);
  }
  SECTION("compiled terms agree with the recursive evaluator") {
    Term const t = ap("join", {ap("meet", {x(0), ap("neg", {x(1)})}),
                               ap("neg", {ap("meet", {x(1), ap("bot")})})});
    CompiledTerm const c(t, d4.signature());
    for (Element p = 0; p < 4; ++p) {
      for (Element q = 0; q < 4; ++q) {
        Element v[] = {p, q};
        CHECK(c.eval(d4, v) == eval_term(t, d4, {{p, q}}));
      }
    }
  }
}

TEST_CASE("term utilities") {
  Term const t = ap("meet", {x(2), ap("neg", {x(0)})});
  CHECK(t.var_count() == 3);
  CHECK(t.depth() == 2);
  CHECK(t.node_count() == 4);
  std::vector<std::size_t> vars;
  t.collect_variables(vars);
  CHECK(vars == std::vector<std::size_t>{2, 0});
  Term const s = t.substitute({ap("bot"), x(0), x(1)});
  CHECK(s == ap("meet", {x(1), ap("neg", {ap("bot")})}));

  QuasiIdentity q;
  q.premises.push_back({x(3), x(1)});
  q.conclusion = {x(1), x(0)};
  CHECK(q.var_count() == 4);
  CHECK(q.variables_by_occurrence() == std::vector<std::size_t>{3, 1, 0});
}

TEST_CASE("products") {
  FiniteAlgebra const d4 = corpus::algebra("D4");
  FiniteAlgebra const ds = corpus::algebra("dS");
  CHECK(power(d4, 2).size() == 16);
  CHECK(power(ds, 2).size() == 16);
  FiniteAlgebra const one[] = {d4};
  CHECK(is_isomorphic(product(one), d4));
  FiniteAlgebra const mixed[] = {d4, ds};
  CHECK_THROWS_AS(product(mixed), AlgebraError);

  SECTION("componentwise operations and lexicographic indexing") {
    FiniteAlgebra const sq = power(d4, 2);
    Element const ab = el(sq, "ab");
    CHECK(ab == el(d4, "a") * 4 + el(d4, "b"));
    std::size_t const neg = d4.signature().index_of("neg");
    CHECK(sq.unary(neg, ab) == ab);
    CHECK(sq.unary(neg, el(sq, "0a")) == el(sq, "1a"));
  }
}

TEST_CASE("subalgebra closure") {
  FiniteAlgebra const d4 = corpus::algebra("D4");
  FiniteAlgebra const ds = corpus::algebra("dS");
  std::vector<Element> const all{0, 1, 2, 3};

  std::vector<Element> ab{el(d4, "a"), el(d4, "b")};
  CHECK(subalgebra_closure(d4, ab) == all);
  CHECK(subalgebra_closure(d4, all) == all);
  // Constants seed the closure.
  CHECK(subalgebra_closure(d4, std::vector<Element>{}) ==
        std::vector<Element>{el(d4, "0"), el(d4, "1")});
  // a* = 0 and a+ = 1 in dS, and nothing reaches b.
  std::vector<Element> a{el(ds, "a")};
  CHECK(subalgebra_closure(ds, a) ==
        std::vector<Element>{el(ds, "0"), el(ds, "a"), el(ds, "1")});
  std::vector<Element> bad{7};
  CHECK_THROWS_AS(subalgebra_closure(d4, bad), AlgebraError);

  CHECK(generator_count(d4) == 2);
  CHECK(generator_count(ds) == 2);
  CHECK(generating_set_of_size(d4, 2) ==
        std::optional<std::vector<Element>>({el(d4, "a"), el(d4, "b")}));
  CHECK_FALSE(generating_set_of_size(d4, 1));

  auto sub = induced_subalgebra(ds, subalgebra_closure(ds, a));
  CHECK(sub.algebra.size() == 3);
  CHECK(sub.algebra.labels() == std::vector<std::string>{"0", "a", "1"});
  std::vector<Element> open{el(ds, "a")};
  CHECK_THROWS_AS(induced_subalgebra(ds, open), AlgebraError);
}

TEST_CASE("trivial algebra and commutativity") {
  FiniteAlgebra const d4 = corpus::algebra("D4");
  FiniteAlgebra const t = trivial_algebra(d4.signature());
  CHECK(t.size() == 1);
  CHECK(is_commutative(d4, d4.signature().index_of("meet")));
  FiniteAlgebra const left("L", Signature({{"m", 2}}), 2, {{0, 0, 1, 1}});
  CHECK_FALSE(is_commutative(left, 0));
}
