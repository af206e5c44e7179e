// Acceptance suite: each case checks one exit criterion end to end and
// prints a one-line verdict. Oracles are brute force throughout:
// exhaustive subset enumeration for the fixed-point claims and an
// independent substitution evaluator for the base language.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "testers.hpp"
#include "verity/fixpoint.hpp"
#include "verity/norms.hpp"
#include "verity/workspace.hpp"

using namespace verity;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void verdict(int criterion, bool ok, const char* what) {
  std::printf("[criterion %d] %s - %s\n", criterion, ok ? "PASS" : "FAIL",
              what);
  std::fflush(stdout);
}

struct Fixture {
  std::string name;
  Workspace ws;
  Universe universe;
};

std::vector<Fixture> load_fixtures() {
  std::vector<Fixture> out;
  for (const char* defs :
       {"liar.defs", "truthteller.defs", "nested.defs", "mixed.defs"}) {
    Fixture f;
    f.name = defs;
    WorkspaceOptions opts;
    opts.defs_path = std::string(FIXTURES_DIR) + "/" + defs;
    opts.defs_path_explicit = true;
    opts.model_path = "/nonexistent-use-default-model";
    f.ws = load_workspace(opts);
    f.universe =
        referenced_closure(f.ws.registry, f.ws.defined_sentences());
    out.push_back(std::move(f));
  }
  return out;
}

bool is_sound(const BaseModel& m, const CodeRegistry& reg, const Universe& u,
              const TruthSet& v) {
  return check_consistent(reg, v).consistent &&
         v.subset_of(restricted_g(m, reg, v, u));
}

// All consistent subsets of the universe's codes.
std::vector<TruthSet> consistent_subsets(const CodeRegistry& reg,
                                         const Universe& u) {
  std::vector<Code> codes(u.codes.codes.begin(), u.codes.codes.end());
  std::vector<TruthSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << codes.size()); ++mask) {
    TruthSet s;
    for (std::size_t i = 0; i < codes.size(); ++i)
      if (mask & (1ull << i)) s.insert(codes[i]);
    if (check_consistent(reg, s).consistent) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("criterion 1: disjointness of G and F on a randomized corpus") {
  auto t0 = std::chrono::steady_clock::now();
  testers::Rng rng(0xC0FFEE);
  int workspaces = 0;
  long violations = 0;
  while (workspaces < 1000) {
    auto ws = testers::random_workspace(rng, 3);
    if (ws.universe.sentences.size() > 10) continue;
    ++workspaces;
    TruthSet u =
        testers::random_consistent_subset(rng, ws.reg, ws.universe.codes);
    REQUIRE(check_consistent(ws.reg, u).consistent);
    for (const Sentence& s : ws.universe.sentences)
      if (sign(ws.model, ws.reg, u, s) == Sign::Both) ++violations;
  }
  double elapsed = seconds_since(t0);
  bool ok = violations == 0 && elapsed < 10.0;
  verdict(1, ok, "sign never returns Both for consistent u (1000 workspaces)");
  CHECK(violations == 0);
  CHECK(elapsed < 10.0);
}

TEST_CASE("criterion 2: G and F preserve consistency on the same corpus") {
  testers::Rng rng(0xC0FFEE);  // same stream as criterion 1
  int workspaces = 0;
  long violations = 0;
  while (workspaces < 1000) {
    auto ws = testers::random_workspace(rng, 3);
    if (ws.universe.sentences.size() > 10) continue;
    ++workspaces;
    TruthSet u =
        testers::random_consistent_subset(rng, ws.reg, ws.universe.codes);
    if (!check_consistent(ws.reg,
                          restricted_g(ws.model, ws.reg, u, ws.universe))
             .consistent)
      ++violations;
    if (!check_consistent(ws.reg,
                          restricted_f(ws.model, ws.reg, u, ws.universe))
             .consistent)
      ++violations;
  }
  bool ok = violations == 0;
  verdict(2, ok, "restricted G(u) and F(u) pass the consistency check");
  CHECK(violations == 0);
}

TEST_CASE("criterion 3: verdicts persist and G is order preserving") {
  testers::Rng rng(0xBEEF);
  long violations = 0;
  for (int i = 0; i < 500; ++i) {
    auto ws = testers::random_workspace(rng, 4);
    TruthSet v =
        testers::random_consistent_subset(rng, ws.reg, ws.universe.codes);
    TruthSet u = testers::random_subset(rng, v);
    for (const Sentence& s : ws.universe.sentences) {
      Sign at_u = sign(ws.model, ws.reg, u, s);
      Sign at_v = sign(ws.model, ws.reg, v, s);
      if (at_u == Sign::InG && at_v != Sign::InG) ++violations;
      if (at_u == Sign::InF && at_v != Sign::InF) ++violations;
    }
    if (!restricted_g(ws.model, ws.reg, u, ws.universe)
             .subset_of(restricted_g(ws.model, ws.reg, v, ws.universe)))
      ++violations;
  }
  bool ok = violations == 0;
  verdict(3, ok, "InG/InF persist from u to v and G(u) is a subset of G(v)");
  CHECK(violations == 0);
}

TEST_CASE("criterion 4: least and seeded fixed points match the oracle") {
  long violations = 0;
  bool in_time = true;
  for (Fixture& f : load_fixtures()) {
    auto t0 = std::chrono::steady_clock::now();
    REQUIRE(f.universe.sentences.size() <= 12);
    auto points = enumerate_fixed_points(f.ws.model, f.ws.registry,
                                         f.universe, 12);
    REQUIRE(!points.empty());

    FixedPointReport least = lfp(f.ws.model, f.ws.registry, f.universe);
    for (const TruthSet& p : points)
      if (!least.fixed_point.subset_of(p)) ++violations;
    if (std::find(points.begin(), points.end(), least.fixed_point) ==
        points.end())
      ++violations;

    for (const TruthSet& seed : consistent_subsets(f.ws.registry, f.universe)) {
      if (!is_sound(f.ws.model, f.ws.registry, f.universe, seed)) continue;
      FixedPointReport ext =
          extend_from_sound(f.ws.model, f.ws.registry, f.universe, seed);
      if (!seed.subset_of(ext.fixed_point)) ++violations;
      if (std::find(points.begin(), points.end(), ext.fixed_point) ==
          points.end())
        ++violations;
      for (const TruthSet& p : points)
        if (seed.subset_of(p) && !ext.fixed_point.subset_of(p)) ++violations;
    }
    in_time = in_time && seconds_since(t0) < 30.0;
  }
  bool ok = violations == 0 && in_time;
  verdict(4, ok,
          "lfp and every sound extension equal the enumeration minimum");
  CHECK(violations == 0);
  CHECK(in_time);
}

TEST_CASE("criterion 5: greatest sound subset matches exhaustive search") {
  long violations = 0;
  for (Fixture& f : load_fixtures()) {
    REQUIRE(f.universe.sentences.size() <= 12);
    for (const TruthSet& w : consistent_subsets(f.ws.registry, f.universe)) {
      GreatestSoundReport got =
          greatest_sound_subset(f.ws.model, f.ws.registry, f.universe, w);
      if (!is_sound(f.ws.model, f.ws.registry, f.universe, got.result))
        ++violations;
      if (!got.result.subset_of(w)) ++violations;
      if (got.result !=
          set_intersection(w, restricted_g(f.ws.model, f.ws.registry,
                                           got.result, f.universe)))
        ++violations;
      // Exhaustive maximality: every sound subset of w sits inside.
      std::vector<Code> pool(w.codes.begin(), w.codes.end());
      for (std::uint64_t mask = 0; mask < (1ull << pool.size()); ++mask) {
        TruthSet u;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (mask & (1ull << i)) u.insert(pool[i]);
        if (!is_sound(f.ws.model, f.ws.registry, f.universe, u)) continue;
        if (!u.subset_of(got.result)) ++violations;
      }
    }
  }
  bool ok = violations == 0;
  verdict(5, ok, "the descending algorithm finds the greatest sound subset");
  CHECK(violations == 0);
}

namespace {

// Stage-wise consistency, consistency of running unions (increasing) or
// intersections (decreasing), consistency of random nonempty stage
// subfamilies' meets, and strictness of the recorded chain.
long trace_violations(const CodeRegistry& reg, const IterationTrace& t,
                      testers::Rng& pick) {
  long violations = 0;
  TruthSet junction;
  bool first = true;
  for (const TruthSet& stage : t.stages) {
    if (!check_consistent(reg, stage).consistent) ++violations;
    if (t.kind == IterationTrace::Kind::Increasing)
      junction = set_union(junction, stage);
    else
      junction = first ? stage : set_intersection(junction, stage);
    first = false;
    if (!check_consistent(reg, junction).consistent) ++violations;
  }
  for (int k = 0; k < 5; ++k) {
    TruthSet meet;
    bool started = false;
    for (const TruthSet& stage : t.stages)
      if (pick() % 2) {
        meet = started ? set_intersection(meet, stage) : stage;
        started = true;
      }
    if (started && !check_consistent(reg, meet).consistent) ++violations;
  }
  for (std::size_t k = 0; k + 1 < t.stages.size(); ++k) {
    bool inc = t.stages[k].subset_of(t.stages[k + 1]) &&
               t.stages[k] != t.stages[k + 1];
    bool dec = t.stages[k + 1].subset_of(t.stages[k]) &&
               t.stages[k] != t.stages[k + 1];
    if (t.kind == IterationTrace::Kind::Increasing ? !inc : !dec)
      ++violations;
  }
  return violations;
}

}  // namespace

TEST_CASE("criterion 6: stages, their unions and intersections stay consistent") {
  long violations = 0;
  testers::Rng pick(0x5eed);

  for (Fixture& f : load_fixtures()) {
    violations += trace_violations(
        f.ws.registry, lfp(f.ws.model, f.ws.registry, f.universe).trace,
        pick);
    for (const TruthSet& w : consistent_subsets(f.ws.registry, f.universe)) {
      GreatestSoundReport g =
          greatest_sound_subset(f.ws.model, f.ws.registry, f.universe, w);
      violations += trace_violations(f.ws.registry, g.trace, pick);
      violations += trace_violations(
          f.ws.registry,
          extend_from_sound(f.ws.model, f.ws.registry, f.universe, g.result)
              .trace,
          pick);
    }
  }

  testers::Rng rng(0xDA7A);
  for (int i = 0; i < 200; ++i) {
    auto ws = testers::random_workspace(rng, 5);
    violations +=
        trace_violations(ws.reg, lfp(ws.model, ws.reg, ws.universe).trace,
                         pick);
    TruthSet w =
        testers::random_consistent_subset(rng, ws.reg, ws.universe.codes);
    GreatestSoundReport g =
        greatest_sound_subset(ws.model, ws.reg, ws.universe, w);
    violations += trace_violations(ws.reg, g.trace, pick);
    violations += trace_violations(
        ws.reg,
        extend_from_sound(ws.model, ws.reg, ws.universe, g.result).trace,
        pick);
  }
  bool ok = violations == 0;
  verdict(6, ok, "iteration stages, unions and intersections are consistent");
  CHECK(violations == 0);
}

TEST_CASE("criterion 7: norms (b), (d), (i) and 10k compositionality samples") {
  long violations = 0;
  for (Fixture& f : load_fixtures()) {
    auto points = enumerate_fixed_points(f.ws.model, f.ws.registry,
                                         f.universe, 12);
    for (const TruthSet& p : points) {
      FixedPointReport report;
      report.fixed_point = p;
      report.universe = f.universe;
      report.trace.stages.push_back(p);
      report.classification =
          classify_universe(f.ws.model, f.ws.registry, p, f.universe);
      violations +=
          static_cast<long>(check_norm_b(f.ws.model, f.ws.registry, report)
                                .violations.size());
      violations +=
          static_cast<long>(check_norm_d(f.ws.model, f.ws.registry, report)
                                .violations.size());
      violations +=
          static_cast<long>(check_norm_i(f.ws.model, f.ws.registry, report)
                                .violations.size());
      violations += static_cast<long>(
          check_norm_e(f.ws.model, f.ws.registry, report, 10000)
              .violations.size());
    }
  }
  bool ok = violations == 0;
  verdict(7, ok, "zero norm violations on every enumerated fixed point");
  CHECK(violations == 0);
}

TEST_CASE("criterion 8: canonical classifications") {
  long violations = 0;

  // The liar is ungrounded at every fixed point of its universe.
  {
    CodeRegistry reg;
    BaseModel m = default_model(4);
    Code liar = reg.declare_alias("liar");
    reg.define_alias("liar", parse("not T(\"liar\")"));
    Universe u = referenced_closure(reg, {reg.sentence_of(liar)});
    for (const TruthSet& p : enumerate_fixed_points(m, reg, u))
      if (sign(m, reg, p, reg.sentence_of(liar)) != Sign::Neither)
        ++violations;
  }

  // The truth-teller: ungrounded at the least point, true at the seeded
  // extension, and its universe is multistable.
  {
    CodeRegistry reg;
    BaseModel m = default_model(4);
    Code tau = reg.declare_alias("tau");
    reg.define_alias("tau", parse("T(\"tau\")"));
    Universe u = referenced_closure(reg, {reg.sentence_of(tau)});
    if (lfp(m, reg, u).classification.at(tau) != Classification::Ungrounded)
      ++violations;
    FixedPointReport ext = extend_from_sound(m, reg, u, TruthSet{{tau}});
    if (ext.classification.at(tau) != Classification::True) ++violations;
    if (enumerate_fixed_points(m, reg, u).size() < 2) ++violations;
  }

  // Truth ascriptions to T-free sentences agree with the model at every
  // fixed point, wherever the universe tracks the ascription's support.
  for (Fixture& f : load_fixtures()) {
    auto points =
        enumerate_fixed_points(f.ws.model, f.ws.registry, f.universe, 12);
    for (const TruthSet& p : points)
      for (const Sentence& s : f.universe.sentences) {
        if (s.kind() != SentenceKind::TAtom) continue;
        const Sentence& referenced =
            f.ws.registry.sentence_of(s.t_arg().code);
        if (!referenced.is_base()) continue;
        Classification want = eval_in_model(f.ws.model, referenced)
                                  ? Classification::True
                                  : Classification::False;
        if (classify(sign(f.ws.model, f.ws.registry, p, s)) != want)
          ++violations;
      }
  }

  bool ok = violations == 0;
  verdict(8, ok, "liar, truth-teller, and T-ascription verdicts as expected");
  CHECK(violations == 0);
}

TEST_CASE("criterion 9: base evaluator against the substitution oracle") {
  BaseModel m = default_model(4);
  testers::Rng rng(0x0DDBA11);
  auto consts = testers::model_const_names(m);
  long violations = 0;
  for (int i = 0; i < 1000; ++i) {
    Sentence a = testers::random_base_sentence(rng, consts, 3);
    bool va = eval_in_model(m, a);
    if (va != testers::oracle_eval(m, a)) ++violations;
    // Bivalence.
    if (eval_in_model(m, Sentence::negation(a)) != !va) ++violations;
    // Connective homomorphism.
    Sentence b = testers::random_base_sentence(rng, consts, 3);
    bool vb = eval_in_model(m, b);
    if (eval_in_model(m, Sentence::disjunction(a, b)) != (va || vb))
      ++violations;
    if (eval_in_model(m, Sentence::conjunction(a, b)) != (va && vb))
      ++violations;
    if (eval_in_model(m, Sentence::implication(a, b)) != (!va || vb))
      ++violations;
    if (eval_in_model(m, Sentence::biconditional(a, b)) != (va == vb))
      ++violations;
  }
  // Quantifier duality.
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> bound{"x"};
    Sentence body = testers::random_base_sentence(rng, consts, 2, 1, &bound);
    Sentence all = Sentence::forall("x", body);
    Sentence dual =
        Sentence::negation(Sentence::exists("x", Sentence::negation(body)));
    if (eval_in_model(m, all) != eval_in_model(m, dual)) ++violations;
  }
  bool ok = violations == 0;
  verdict(9, ok,
          "bivalence, homomorphism, duality, and oracle agreement on V_4");
  CHECK(violations == 0);
}
