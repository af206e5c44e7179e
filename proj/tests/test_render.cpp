#include <doctest.h>

#include "testers.hpp"
#include "verity/render.hpp"

using namespace verity;

TEST_CASE("pretty output stays inside the grammar") {
  testers::Rng rng(121212);
  for (int i = 0; i < 40; ++i) {
    auto ws = testers::random_workspace(rng, 6);
    for (const Sentence& s : ws.universe.sentences) {
      std::string shown = pretty(ws.reg, s);
      CAPTURE(shown);
      // Reparsing the display form and resolving its aliases gives back
      // the canonical sentence.
      CHECK(ws.reg.resolve_aliases(parse(shown)) == s);
    }
  }
}

TEST_CASE("pretty substitutes alias names only where they exist") {
  CodeRegistry reg;
  Code liar = reg.declare_alias("liar");
  reg.define_alias("liar", parse("not T(\"liar\")"));
  Code anon = reg.register_sentence(parse("T(\"liar\") or n0 in e"));
  CHECK(pretty(reg, reg.sentence_of(liar)) == "not T(\"liar\")");
  CHECK(pretty(reg, reg.sentence_of(anon)) == "T(\"liar\") or n0 in e");
  // print() keeps the raw code form.
  CHECK(print(reg.sentence_of(liar)) == "not T(#0)");
}

TEST_CASE("set and stage rendering") {
  CodeRegistry reg;
  Code a = reg.register_sentence(parse("n0 in e"));
  CHECK(render_set(reg, TruthSet{}) == "{}");
  CHECK(render_set(reg, TruthSet{{a}}) == "{#0 n0 in e}");

  IterationTrace t;
  t.kind = IterationTrace::Kind::Increasing;
  t.stages = {TruthSet{}, TruthSet{{a}}};
  t.converged_at = 1;
  std::string text = render_stages_text(reg, t);
  CHECK(text.find("stage 0: {}") != std::string::npos);
  CHECK(text.find("stage 1: {#0 n0 in e}   (fixed)") != std::string::npos);

  Json j = stages_json(t);
  CHECK(j["kind"] == "increasing");
  CHECK(j["converged_at"] == 1);
  CHECK(j["stages"].size() == 2);
}

TEST_CASE("trace rendering carries the rule ids verbatim") {
  BaseModel m = default_model(4);
  CodeRegistry reg;
  Code liar = reg.declare_alias("liar");
  reg.define_alias("liar", parse("not T(\"liar\")"));
  Trace t = explain(m, reg, TruthSet{}, reg.sentence_of(liar));
  std::string text = render_trace_text(reg, t);
  CHECK(text.find("[r3]") != std::string::npos);
  CHECK(text.find("[r2]") != std::string::npos);
  Json j = trace_json(reg, t);
  CHECK(j["rule"] == "r3");
  CHECK(j["children"][0]["rule"] == "r2");
  CHECK(j["children"][0]["sign"] == "Neither");
}
