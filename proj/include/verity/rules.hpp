#ifndef VERITY_RULES_HPP
#define VERITY_RULES_HPP

#include <string>
#include <vector>

#include "verity/coding.hpp"
#include "verity/model.hpp"
#include "verity/syntax.hpp"

namespace verity {

// Membership verdict of a sentence's code relative to the signed sets
// G(u) and F(u). Both is reachable only from an inconsistent u and is
// surfaced (rather than raised) so tests can witness it.
enum class Sign { InG, InF, Neither, Both };

enum class Classification { True, False, Ungrounded, Conflicted };

Classification classify(Sign s);

struct EvalOptions {
  // When set, the quantified-T forms get the verdicts they carry at a
  // fixed point of the unrestricted operator over all sentences: the
  // extension is nonempty and contains negated sentences, so
  // 'exists x . T(x)' is InG and 'forall x . T(x)' is InF. The default
  // evaluates them literally against the finite u, where missing
  // witnesses yield Neither.
  bool full_quantified_t = false;
};

// Decides #a in G(u) / F(u) by structural recursion on rules (r1)-(r9):
//   (r1) T-free sentences are decided by the base model;
//   (r2) T(#n) is InG iff n is in u, InF iff the code of the negation of
//        the sentence coded n is in u (a code never registered cannot be
//        in u); the referenced sentence itself is never evaluated;
//   (r3)-(r7) not/or/and/->/<-> combine child verdicts;
//   (r8)/(r9) quantified-T forms use the closed forms below.
Sign sign(const BaseModel& m, const CodeRegistry& reg, const TruthSet& u,
          const Sentence& a, const EvalOptions& opts = {});

// Closed forms for the quantified-T forms against a finite u. For
// 'exists x . T(x)': InG iff u is nonempty (any member witnesses (r8));
// never InF, which would need the negation of every sentence in u. For
// 'forall x . T(x)': never InG, since u cannot contain every code; InF
// iff u contains the code of a negation-rooted sentence (its T-atom is
// InF by (r2), witnessing (r9)).
Sign quantified_t_sign(const CodeRegistry& reg, const TruthSet& u,
                       SentenceKind which, const EvalOptions& opts = {});

// Derivation tree; each node cites the one rule that decided it.
struct Trace {
  Sentence sentence;
  std::string rule;  // "r1" .. "r9"
  Sign verdict = Sign::Neither;
  std::string note;
  std::vector<Trace> children;
};

// Same recursion as sign, with the reasoning recorded. The root verdict
// equals sign(m, reg, u, a).
Trace explain(const BaseModel& m, const CodeRegistry& reg, const TruthSet& u,
              const Sentence& a, const EvalOptions& opts = {});

// G(u) and F(u) cut down to the codes a universe tracks.
TruthSet restricted_g(const BaseModel& m, const CodeRegistry& reg,
                      const TruthSet& u, const Universe& universe,
                      const EvalOptions& opts = {});
TruthSet restricted_f(const BaseModel& m, const CodeRegistry& reg,
                      const TruthSet& u, const Universe& universe,
                      const EvalOptions& opts = {});

}  // namespace verity

#endif
