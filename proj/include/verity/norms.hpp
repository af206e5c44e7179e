#ifndef VERITY_NORMS_HPP
#define VERITY_NORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "verity/fixpoint.hpp"

namespace verity {

struct NormViolation {
  std::optional<Code> code;
  std::string detail;
};

struct NormExemption {
  Code code;
  std::string reason;
};

struct NormCheckResult {
  std::string norm;   // "a" .. "j"
  std::string title;
  bool executable = false;  // ran against the report vs. holds by design
  bool pass = true;
  std::size_t checked = 0;
  std::vector<NormViolation> violations;
  std::vector<NormExemption> exemptions;
  std::string note;
};

// (b) Added truth proves the base theory true: a tracked T-free sentence
// A with tracked T(#A) is true in the model iff T(#A) is classified true,
// and false in the model iff T(#A) is classified false.
NormCheckResult check_norm_b(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             const EvalOptions& opts = {});

// (d) T-biconditionals: for every tracked A classified true or false,
// A <-> T(#A) is InG at the fixed point. Ungrounded members are outside
// the fixed point's sublanguage and exempt; members whose negation is
// untracked leave T(#A) without a witness and are exempt as a
// finitization artifact (with the negation tracked, the check is forced).
NormCheckResult check_norm_d(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             const EvalOptions& opts = {});

// (e) Compositionality: for sampled tracked pairs and every connective,
// the compound's classification equals the truth-table combination of
// the parts' classifications (with ungroundedness propagating whenever a
// rule's condition fails on both sides).
NormCheckResult check_norm_e(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             std::size_t samples,
                             std::uint64_t rng_seed = 0x5eed,
                             const EvalOptions& opts = {});

// (i) Paradox freedom: the fixed point is consistent, no tracked
// sentence is classified both ways, and Liar-like members come out
// ungrounded rather than contradictory.
NormCheckResult check_norm_i(const BaseModel& m, const CodeRegistry& reg,
                             const FixedPointReport& report,
                             const EvalOptions& opts = {});

// All ten norms: (b), (d), (e), (i) run against the report; the rest are
// design properties of the language and semantics and are reported as
// holding by construction.
std::vector<NormCheckResult> norm_report_card(const BaseModel& m,
                                              const CodeRegistry& reg,
                                              const FixedPointReport& report,
                                              std::size_t e_samples = 1000,
                                              const EvalOptions& opts = {});

}  // namespace verity

#endif
