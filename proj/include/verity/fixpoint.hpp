#ifndef VERITY_FIXPOINT_HPP
#define VERITY_FIXPOINT_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "verity/coding.hpp"
#include "verity/errors.hpp"
#include "verity/rules.hpp"

namespace verity {

// Stages of a run of the restricted operator. Increasing runs grow
// strictly until the last stage; decreasing runs shrink strictly.
struct IterationTrace {
  enum class Kind { Increasing, Decreasing };
  Kind kind = Kind::Increasing;
  std::vector<TruthSet> stages;
  std::size_t converged_at = 0;  // index of the stabilized stage
};

struct FixedPointReport {
  TruthSet fixed_point;
  Universe universe;
  IterationTrace trace;
  // Verdict per tracked code at the fixed point: true iff InG, false iff
  // InF, ungrounded iff Neither.
  std::map<Code, Classification> classification;
};

// Seed passed to extend_from_sound is not self-supporting. Carries one
// offending member and the derivation showing it drops out.
struct SoundnessError : Error {
  SoundnessError(const std::string& msg, Code offender, Trace why)
      : Error(msg), offender(offender), why(std::move(why)) {}
  Code offender;
  Trace why;
};

struct InconsistentSetError : Error {
  InconsistentSetError(const std::string& msg, std::pair<Code, Code> witness)
      : Error(msg), witness(witness) {}
  std::pair<Code, Code> witness;  // (#A, #[not A])
};

// Least fixed point of the restricted operator: iterate from the empty
// set until stable. Monotonicity makes the chain increasing and caps it
// at |universe| stages.
FixedPointReport lfp(const BaseModel& m, const CodeRegistry& reg,
                     const Universe& universe, const EvalOptions& opts = {});

// Smallest tracked fixed point containing a sound seed (seed must be
// consistent and a subset of its own image). Throws SoundnessError /
// InconsistentSetError otherwise.
FixedPointReport extend_from_sound(const BaseModel& m, const CodeRegistry& reg,
                                   const Universe& universe,
                                   const TruthSet& seed,
                                   const EvalOptions& opts = {});

struct GreatestSoundReport {
  TruthSet result;  // greatest V with V = w ∩ G(V); sound, inside w
  IterationTrace trace;
  std::map<Code, Classification> classification;  // verdicts at `result`
};

// The finite descending algorithm: V0 = w, V_{n+1} = w ∩ G(V_n) until
// stable. Returns the greatest sound subset of w.
GreatestSoundReport greatest_sound_subset(const BaseModel& m,
                                          const CodeRegistry& reg,
                                          const Universe& universe,
                                          const TruthSet& w,
                                          const EvalOptions& opts = {});

// Every consistent u over the universe's codes with u = G(u) restricted,
// by brute force over all subsets; sorted by size, then lexicographically.
// Intended as the verification oracle for the constructions above.
// Throws Error when the universe exceeds max_universe sentences.
std::vector<TruthSet> enumerate_fixed_points(const BaseModel& m,
                                             const CodeRegistry& reg,
                                             const Universe& universe,
                                             std::size_t max_universe = 16,
                                             const EvalOptions& opts = {});

std::map<Code, Classification> classify_universe(const BaseModel& m,
                                                 const CodeRegistry& reg,
                                                 const TruthSet& at,
                                                 const Universe& universe,
                                                 const EvalOptions& opts = {});

}  // namespace verity

#endif
