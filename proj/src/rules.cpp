#include "verity/rules.hpp"

#include <sstream>

#include "verity/errors.hpp"

namespace verity {

Classification classify(Sign s) {
  switch (s) {
    case Sign::InG: return Classification::True;
    case Sign::InF: return Classification::False;
    case Sign::Neither: return Classification::Ungrounded;
    case Sign::Both: return Classification::Conflicted;
  }
  return Classification::Ungrounded;
}

namespace {

// G/F membership as independent bits; the rules define each side by its
// own iff condition, and an inconsistent u can set both.
struct Bits {
  bool g = false;
  bool f = false;
};

Sign to_sign(Bits b) {
  if (b.g && b.f) return Sign::Both;
  if (b.g) return Sign::InG;
  if (b.f) return Sign::InF;
  return Sign::Neither;
}

Bits of_sign(Sign s) {
  return {s == Sign::InG || s == Sign::Both, s == Sign::InF || s == Sign::Both};
}

Bits combine(SentenceKind kind, Bits a, Bits b) {
  switch (kind) {
    case SentenceKind::Not:     return {a.f, a.g};
    case SentenceKind::Or:      return {a.g || b.g, a.f && b.f};
    case SentenceKind::And:     return {a.g && b.g, a.f || b.f};
    case SentenceKind::Implies: return {a.f || b.g, a.g && b.f};
    case SentenceKind::Iff:
      return {(a.g && b.g) || (a.f && b.f), (a.g && b.f) || (a.f && b.g)};
    default:
      throw EvalError("combine: not a connective");
  }
}

const char* rule_of(const Sentence& s) {
  if (s.is_base()) return "r1";
  switch (s.kind()) {
    case SentenceKind::TAtom: return "r2";
    case SentenceKind::Not: return "r3";
    case SentenceKind::Or: return "r4";
    case SentenceKind::And: return "r5";
    case SentenceKind::Implies: return "r6";
    case SentenceKind::Iff: return "r7";
    case SentenceKind::ExistsT: return "r8";
    case SentenceKind::ForallT: return "r9";
    default: return "r1";
  }
}

// (r2) lookups. The F side asks for the code of the negation of the
// referenced sentence; if that negation was never registered it cannot
// be a member of u.
Bits t_atom_bits(const CodeRegistry& reg, const TruthSet& u, Code n) {
  const Sentence& referenced = reg.sentence_of(n);
  Bits b;
  b.g = u.contains(n);
  if (auto neg = reg.try_code(Sentence::negation(referenced)))
    b.f = u.contains(*neg);
  return b;
}

std::optional<Code> negation_witness(const CodeRegistry& reg,
                                     const TruthSet& u) {
  for (Code c : u.codes)
    if (reg.sentence_of(c).kind() == SentenceKind::Not) return c;
  return std::nullopt;
}

Bits quantified_bits(const CodeRegistry& reg, const TruthSet& u,
                     SentenceKind which, const EvalOptions& opts) {
  if (which == SentenceKind::ExistsT) {
    if (opts.full_quantified_t) return {true, false};
    return {!u.empty(), false};
  }
  if (opts.full_quantified_t) return {false, true};
  return {false, negation_witness(reg, u).has_value()};
}

Bits sign_bits(const BaseModel& m, const CodeRegistry& reg, const TruthSet& u,
               const Sentence& a, const EvalOptions& opts) {
  if (a.is_base()) {
    bool g = eval_in_model(m, a);
    return {g, !g};
  }
  switch (a.kind()) {
    case SentenceKind::TAtom:
      return t_atom_bits(reg, u, a.t_arg().code);
    case SentenceKind::Not:
      return combine(SentenceKind::Not, sign_bits(m, reg, u, a.left(), opts),
                     {});
    case SentenceKind::Or:
    case SentenceKind::And:
    case SentenceKind::Implies:
    case SentenceKind::Iff:
      return combine(a.kind(), sign_bits(m, reg, u, a.left(), opts),
                     sign_bits(m, reg, u, a.right(), opts));
    case SentenceKind::ExistsT:
    case SentenceKind::ForallT:
      return quantified_bits(reg, u, a.kind(), opts);
    default:
      // A non-base Exists/Forall never survives validation.
      throw EvalError("unsupported quantified sentence: " + print(a));
  }
}

}  // namespace

Sign sign(const BaseModel& m, const CodeRegistry& reg, const TruthSet& u,
          const Sentence& a, const EvalOptions& opts) {
  return to_sign(sign_bits(m, reg, u, a, opts));
}

Sign quantified_t_sign(const CodeRegistry& reg, const TruthSet& u,
                       SentenceKind which, const EvalOptions& opts) {
  if (which != SentenceKind::ExistsT && which != SentenceKind::ForallT)
    throw EvalError("quantified_t_sign expects a quantified-T form");
  return to_sign(quantified_bits(reg, u, which, opts));
}

namespace {

Trace explain_rec(const BaseModel& m, const CodeRegistry& reg,
                  const TruthSet& u, const Sentence& a,
                  const EvalOptions& opts) {
  Trace t;
  t.sentence = a;
  t.rule = rule_of(a);
  std::ostringstream note;
  if (a.is_base()) {
    bool g = eval_in_model(m, a);
    t.verdict = g ? Sign::InG : Sign::InF;
    note << (g ? "true" : "false") << " in the base model";
  } else {
    switch (a.kind()) {
      case SentenceKind::TAtom: {
        Code n = a.t_arg().code;
        const Sentence& referenced = reg.sentence_of(n);
        Bits b = t_atom_bits(reg, u, n);
        t.verdict = to_sign(b);
        note << '#' << n << (b.g ? " in u" : " not in u");
        if (auto neg = reg.try_code(Sentence::negation(referenced)))
          note << "; #[not " << '#' << n << "] = #" << *neg
               << (b.f ? " in u" : " not in u");
        else
          note << "; negation of #" << n << " unregistered, so not in u";
        break;
      }
      case SentenceKind::Not: {
        Trace child = explain_rec(m, reg, u, a.left(), opts);
        t.verdict = to_sign(combine(SentenceKind::Not, of_sign(child.verdict),
                                    {}));
        note << "flips the child verdict";
        t.children.push_back(std::move(child));
        break;
      }
      case SentenceKind::Or:
      case SentenceKind::And:
      case SentenceKind::Implies:
      case SentenceKind::Iff: {
        Trace l = explain_rec(m, reg, u, a.left(), opts);
        Trace r = explain_rec(m, reg, u, a.right(), opts);
        t.verdict = to_sign(
            combine(a.kind(), of_sign(l.verdict), of_sign(r.verdict)));
        note << "combines child verdicts";
        t.children.push_back(std::move(l));
        t.children.push_back(std::move(r));
        break;
      }
      case SentenceKind::ExistsT: {
        Bits b = quantified_bits(reg, u, a.kind(), opts);
        t.verdict = to_sign(b);
        if (opts.full_quantified_t)
          note << "full semantics: the extension is nonempty";
        else if (!u.empty())
          note << "witness #" << *u.codes.begin() << " in u";
        else
          note << "u is empty: no witness, and InF would need every "
                  "negation in u";
        break;
      }
      case SentenceKind::ForallT: {
        Bits b = quantified_bits(reg, u, a.kind(), opts);
        t.verdict = to_sign(b);
        if (opts.full_quantified_t)
          note << "full semantics: some sentence is false";
        else if (auto w = negation_witness(reg, u))
          note << "counter-witness #" << *w << " in u (negation-rooted)";
        else
          note << "InG would need every code in u; no negation-rooted "
                  "member for InF";
        break;
      }
      default:
        throw EvalError("unsupported quantified sentence: " + print(a));
    }
  }
  t.note = note.str();
  return t;
}

}  // namespace

Trace explain(const BaseModel& m, const CodeRegistry& reg, const TruthSet& u,
              const Sentence& a, const EvalOptions& opts) {
  return explain_rec(m, reg, u, a, opts);
}

TruthSet restricted_g(const BaseModel& m, const CodeRegistry& reg,
                      const TruthSet& u, const Universe& universe,
                      const EvalOptions& opts) {
  TruthSet out;
  for (const Sentence& s : universe.sentences) {
    Sign v = sign(m, reg, u, s, opts);
    if (v == Sign::InG || v == Sign::Both) out.insert(reg.code_of(s));
  }
  return out;
}

TruthSet restricted_f(const BaseModel& m, const CodeRegistry& reg,
                      const TruthSet& u, const Universe& universe,
                      const EvalOptions& opts) {
  TruthSet out;
  for (const Sentence& s : universe.sentences) {
    Sign v = sign(m, reg, u, s, opts);
    if (v == Sign::InF || v == Sign::Both) out.insert(reg.code_of(s));
  }
  return out;
}

}  // namespace verity
