#include <doctest.h>

#include "testers.hpp"
#include "verity/errors.hpp"
#include "verity/model.hpp"

using namespace verity;

TEST_CASE("default model levels have the right size") {
  CHECK(default_model(1).size() == 1);
  CHECK(default_model(2).size() == 2);
  CHECK(default_model(3).size() == 4);
  CHECK(default_model(4).size() == 16);
  CHECK(default_model(5).size() == 65536);
  CHECK_THROWS_AS(default_model(0), LoadError);
  CHECK_THROWS_AS(default_model(6), LoadError);
}

TEST_CASE("rank 2 is exactly the empty set and its singleton") {
  BaseModel m = default_model(2);
  REQUIRE(m.size() == 2);
  CHECK(m.member(0, 1));
  CHECK_FALSE(m.member(1, 0));
  CHECK_FALSE(m.member(0, 0));
  CHECK_FALSE(m.member(1, 1));
  CHECK(m.const_element("e") == 0);
  CHECK(m.const_element("n0") == 0);
  CHECK(m.const_element("n1") == 1);
  CHECK_FALSE(m.const_element("n2").has_value());
}

TEST_CASE("numerals denote von Neumann ordinals") {
  BaseModel m = default_model(4);
  auto n0 = *m.const_element("n0");
  auto n1 = *m.const_element("n1");
  auto n2 = *m.const_element("n2");
  CHECK(m.member(n0, n1));
  CHECK(m.member(n0, n2));
  CHECK(m.member(n1, n2));
  CHECK_FALSE(m.member(n2, n1));
}

TEST_CASE("documented evaluations over V_4") {
  BaseModel m = default_model(4);
  CHECK(eval_in_model(m, parse("exists x . forall y . not (y in x)")));
  // Rank-3 elements have no container inside V_4.
  CHECK_FALSE(eval_in_model(m, parse("forall x . exists y . x in y")));
  CHECK(eval_in_model(m, parse("e = e")));
}

TEST_CASE("the base evaluator rejects truth talk and unknown constants") {
  BaseModel m = default_model(2);
  CHECK_THROWS_AS(eval_in_model(m, Sentence::t_atom(Term::code_literal(0))),
                  EvalError);
  CHECK_THROWS_AS(eval_in_model(m, parse("exists x . T(x)")), EvalError);
  CHECK_THROWS_AS(eval_in_model(m, parse("nope in e")), EvalError);
}

TEST_CASE("bivalence, connective homomorphism, quantifier duality") {
  BaseModel m = default_model(4);
  testers::Rng rng(99);
  auto consts = testers::model_const_names(m);
  for (int i = 0; i < 300; ++i) {
    Sentence a = testers::random_base_sentence(rng, consts, 3);
    Sentence b = testers::random_base_sentence(rng, consts, 3);
    bool va = eval_in_model(m, a);
    bool vb = eval_in_model(m, b);
    CHECK(eval_in_model(m, Sentence::negation(a)) == !va);
    CHECK(eval_in_model(m, Sentence::disjunction(a, b)) == (va || vb));
    CHECK(eval_in_model(m, Sentence::conjunction(a, b)) == (va && vb));
    CHECK(eval_in_model(m, Sentence::implication(a, b)) == (!va || vb));
    CHECK(eval_in_model(m, Sentence::biconditional(a, b)) == (va == vb));
  }
  // forall x . phi  ==  not exists x . not phi
  for (int i = 0; i < 100; ++i) {
    std::vector<std::string> bound{"x"};
    Sentence body = testers::random_base_sentence(rng, consts, 2, 1, &bound);
    Sentence all = Sentence::forall("x", body);
    Sentence dual = Sentence::negation(
        Sentence::exists("x", Sentence::negation(body)));
    CHECK(eval_in_model(m, all) == eval_in_model(m, dual));
  }
}

TEST_CASE("agreement with the substitution oracle") {
  BaseModel m = default_model(4);
  testers::Rng rng(4242);
  auto consts = testers::model_const_names(m);
  for (int i = 0; i < 200; ++i) {
    Sentence s = testers::random_base_sentence(rng, consts, 3);
    CAPTURE(print(s));
    CHECK(eval_in_model(m, s) == testers::oracle_eval(m, s));
  }
}

TEST_CASE("model files, including non-well-founded ones") {
  BaseModel m = parse_model_text(
      "# quine atom\n"
      "element q\n"
      "element empty\n"
      "member q q\n"
      "const q q\n"
      "const e empty\n",
      "<test>");
  CHECK(m.size() == 2);
  CHECK(eval_in_model(m, parse("q in q")));
  CHECK_FALSE(eval_in_model(m, parse("e in e")));
  CHECK(eval_in_model(m, parse("exists x . x in x")));

  CHECK_THROWS_AS(parse_model_text("element a\nelement a\n", "<t>"),
                  LoadError);
  CHECK_THROWS_AS(parse_model_text("member a b\n", "<t>"), LoadError);
  CHECK_THROWS_AS(parse_model_text("element a\nconst in a\n", "<t>"),
                  LoadError);
  CHECK_THROWS_AS(parse_model_text("widget a\n", "<t>"), LoadError);
  try {
    parse_model_text("element a\nmember a\n", "<t>");
    FAIL("expected a load error");
  } catch (const LoadError& e) {
    CHECK(std::string(e.what()).find("<t>:2") != std::string::npos);
  }
}
