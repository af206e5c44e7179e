#include "verity/norms.hpp"

#include <random>
#include <sstream>

namespace verity {

namespace {

Sentence t_atom_for(Code c) {
  return Sentence::t_atom(Term::code_literal(c));
}

std::string verdict_name(Classification c) {
  switch (c) {
    case Classification::True: return "true";
    case Classification::False: return "false";
    case Classification::Ungrounded: return "ungrounded";
    case Classification::Conflicted: return "conflicted";
  }
  return "?";
}

}  // namespace

NormCheckResult check_norm_b(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             const EvalOptions& opts) {
  NormCheckResult r;
  r.norm = "b";
  r.title = "added truth proves the base theory true";
  r.executable = true;
  for (const Sentence& s : report.universe.sentences) {
    if (!s.is_base()) continue;
    Code c = reg.code_of(s);
    auto t_code = reg.try_code(t_atom_for(c));
    if (!t_code || !report.universe.tracks(*t_code)) continue;
    ++r.checked;
    bool truth = eval_in_model(m, s);
    Classification got =
        classify(sign(m, reg, report.fixed_point, t_atom_for(c), opts));
    Classification want =
        truth ? Classification::True : Classification::False;
    if (got != want) {
      std::ostringstream detail;
      detail << print(s) << " is " << (truth ? "true" : "false")
             << " in the model but T(#" << c << ") is " << verdict_name(got);
      r.violations.push_back({c, detail.str()});
    }
  }
  r.pass = r.violations.empty();
  return r;
}

NormCheckResult check_norm_d(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             const EvalOptions& opts) {
  NormCheckResult r;
  r.norm = "d";
  r.title = "T-biconditionals hold for every classified sentence";
  r.executable = true;
  for (const Sentence& s : report.universe.sentences) {
    Code c = reg.code_of(s);
    Classification cls = report.classification.at(c);
    if (cls == Classification::Ungrounded) {
      r.exemptions.push_back({c, "ungrounded: outside the fixed point's "
                                 "sublanguage"});
      continue;
    }
    Sign t_sign = sign(m, reg, report.fixed_point, t_atom_for(c), opts);
    if (t_sign == Sign::Neither) {
      // Only reachable when the member is false and its negation was
      // never tracked, so u cannot witness the T-atom's F side.
      r.exemptions.push_back({c, "negation untracked: T(#" +
                                     std::to_string(c) +
                                     ") has no witness in the finite u"});
      continue;
    }
    ++r.checked;
    Sign b = sign(m, reg, report.fixed_point,
                  Sentence::biconditional(s, t_atom_for(c)), opts);
    if (b != Sign::InG) {
      std::ostringstream detail;
      detail << print(s) << " is " << verdict_name(cls) << " but " << print(s)
             << " <-> T(#" << c << ") is not InG";
      r.violations.push_back({c, detail.str()});
    }
  }
  r.pass = r.violations.empty();
  return r;
}

namespace {

Classification table(SentenceKind kind, Classification a, Classification b) {
  const bool at = a == Classification::True, af = a == Classification::False;
  const bool bt = b == Classification::True, bf = b == Classification::False;
  bool g = false, f = false;
  switch (kind) {
    case SentenceKind::Or:      g = at || bt; f = af && bf; break;
    case SentenceKind::And:     g = at && bt; f = af || bf; break;
    case SentenceKind::Implies: g = af || bt; f = at && bf; break;
    case SentenceKind::Iff:
      g = (at && bt) || (af && bf);
      f = (at && bf) || (af && bt);
      break;
    default: break;
  }
  if (g) return Classification::True;
  if (f) return Classification::False;
  return Classification::Ungrounded;
}

Sentence build(SentenceKind kind, const Sentence& a, const Sentence& b) {
  switch (kind) {
    case SentenceKind::Or: return Sentence::disjunction(a, b);
    case SentenceKind::And: return Sentence::conjunction(a, b);
    case SentenceKind::Implies: return Sentence::implication(a, b);
    default: return Sentence::biconditional(a, b);
  }
}

}  // namespace

NormCheckResult check_norm_e(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             std::size_t samples, std::uint64_t rng_seed,
                             const EvalOptions& opts) {
  NormCheckResult r;
  r.norm = "e";
  r.title = "truth is compositional";
  r.executable = true;
  const auto& members = report.universe.sentences;
  if (members.empty()) {
    r.note = "empty universe: vacuous";
    return r;
  }
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  static const SentenceKind kConnectives[] = {
      SentenceKind::Or, SentenceKind::And, SentenceKind::Implies,
      SentenceKind::Iff};
  std::uniform_int_distribution<int> pick_conn(0, 4);  // 4 = negation
  auto verdict_of = [&](const Sentence& s) {
    return classify(sign(m, reg, report.fixed_point, s, opts));
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Sentence& a = members[pick(rng)];
    const Sentence& b = members[pick(rng)];
    int which = pick_conn(rng);
    Sentence compound;
    Classification want;
    if (which == 4) {
      compound = Sentence::negation(a);
      switch (verdict_of(a)) {
        case Classification::True: want = Classification::False; break;
        case Classification::False: want = Classification::True; break;
        default: want = Classification::Ungrounded; break;
      }
    } else {
      SentenceKind kind = kConnectives[which];
      compound = build(kind, a, b);
      want = table(kind, verdict_of(a), verdict_of(b));
    }
    ++r.checked;
    Classification got = verdict_of(compound);
    if (got != want) {
      std::ostringstream detail;
      detail << print(compound) << " classified " << verdict_name(got)
             << ", truth table expects " << verdict_name(want);
      r.violations.push_back({std::nullopt, detail.str()});
      if (r.violations.size() >= 10) break;  // enough to diagnose
    }
  }
  r.pass = r.violations.empty();
  return r;
}

NormCheckResult check_norm_i(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             const EvalOptions& opts) {
  NormCheckResult r;
  r.norm = "i";
  r.title = "free from paradoxes";
  r.executable = true;
  auto consistency = check_consistent(reg, report.fixed_point);
  if (!consistency.consistent) {
    const auto& [a, na] = *consistency.witness;
    r.violations.push_back(
        {a, "fixed point contains both #" + std::to_string(a) + " and #" +
                std::to_string(na)});
  }
  std::size_t ungrounded = 0;
  for (const Sentence& s : report.universe.sentences) {
    ++r.checked;
    Code c = reg.code_of(s);
    Sign v = sign(m, reg, report.fixed_point, s, opts);
    if (v == Sign::Both)
      r.violations.push_back(
          {c, print(s) + " is classified both true and false"});
    if (v == Sign::Neither) ++ungrounded;
  }
  std::ostringstream note;
  note << ungrounded << " tracked sentence(s) fall outside the sublanguage "
       << "(ungrounded, not contradictory)";
  r.note = note.str();
  r.pass = r.violations.empty();
  return r;
}

namespace {

NormCheckResult by_construction(const char* norm, const char* title,
                                const char* note) {
  NormCheckResult r;
  r.norm = norm;
  r.title = title;
  r.executable = false;
  r.pass = true;
  r.note = note;
  return r;
}

}  // namespace

std::vector<NormCheckResult> norm_report_card(const BaseModel& m,
                                              const CodeRegistry& reg,
                                              const FixedPointReport& report,
                                              std::size_t e_samples,
                                              const EvalOptions& opts) {
  std::vector<NormCheckResult> card;
  card.push_back(by_construction(
      "a", "truth is expressed by a predicate, with syntax available",
      "T is a monadic predicate over sentence codes; the code registry "
      "supplies the syntax theory"));
  card.push_back(check_norm_b(m, reg, report, opts));
  card.push_back(by_construction(
      "c", "no type restrictions on the truth predicate",
      "T applies to the code of any registered sentence, including "
      "sentences that mention T"));
  card.push_back(check_norm_d(m, reg, report, opts));
  card.push_back(check_norm_e(m, reg, report, e_samples, 0x5eed, opts));
  card.push_back(by_construction(
      "f", "standard interpretations are allowed",
      "quantifiers range over the actual elements of the membership "
      "structure; nothing is reinterpreted"));
  card.push_back(by_construction(
      "g", "inner and outer logic coincide",
      "one classical evaluation relation serves both levels: asserting A "
      "and asserting T(#A) get the same verdict at a fixed point"));
  card.push_back(by_construction(
      "h", "the outer logic is classical",
      "every sentence inside the fixed point's sublanguage is exactly one "
      "of true or false"));
  card.push_back(check_norm_i(m, reg, report, opts));
  card.push_back(by_construction(
      "j", "truth is defined within the language itself",
      "T belongs to the object language; the sublanguage at a fixed point "
      "contains T-sentences about its own members"));
  return card;
}

}  // namespace verity
