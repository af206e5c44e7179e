#include "verity/fixpoint.hpp"

#include <algorithm>
#include <sstream>

namespace verity {

std::map<Code, Classification> classify_universe(const BaseModel& m,
                                                 const CodeRegistry& reg,
                                                 const TruthSet& at,
                                                 const Universe& universe,
                                                 const EvalOptions& opts) {
  std::map<Code, Classification> out;
  for (const Sentence& s : universe.sentences)
    out[reg.code_of(s)] = classify(sign(m, reg, at, s, opts));
  return out;
}

namespace {

FixedPointReport iterate_up(const BaseModel& m, const CodeRegistry& reg,
                            const Universe& universe, TruthSet start,
                            const EvalOptions& opts) {
  FixedPointReport report;
  report.universe = universe;
  report.trace.kind = IterationTrace::Kind::Increasing;
  report.trace.stages.push_back(start);
  TruthSet current = std::move(start);
  for (;;) {
    TruthSet next = restricted_g(m, reg, current, universe, opts);
    if (next == current) break;
    report.trace.stages.push_back(next);
    current = std::move(next);
  }
  report.trace.converged_at = report.trace.stages.size() - 1;
  report.fixed_point = current;
  report.classification = classify_universe(m, reg, current, universe, opts);
  return report;
}

void require_consistent(const CodeRegistry& reg, const TruthSet& u,
                        const char* what) {
  auto check = check_consistent(reg, u);
  if (check.consistent) return;
  const auto& [a, na] = *check.witness;
  std::ostringstream msg;
  msg << what << " contains both #" << a << " (" << print(reg.sentence_of(a))
      << ") and its negation #" << na;
  throw InconsistentSetError(msg.str(), *check.witness);
}

}  // namespace

FixedPointReport lfp(const BaseModel& m, const CodeRegistry& reg,
                     const Universe& universe, const EvalOptions& opts) {
  return iterate_up(m, reg, universe, TruthSet{}, opts);
}

FixedPointReport extend_from_sound(const BaseModel& m, const CodeRegistry& reg,
                                   const Universe& universe,
                                   const TruthSet& seed,
                                   const EvalOptions& opts) {
  require_consistent(reg, seed, "seed");
  TruthSet image = restricted_g(m, reg, seed, universe, opts);
  if (!seed.subset_of(image)) {
    for (Code c : seed.codes) {
      if (image.contains(c)) continue;
      const Sentence& s = reg.sentence_of(c);
      std::ostringstream msg;
      msg << "seed is not sound: #" << c << " (" << print(s)
          << ") is not in G(seed)";
      throw SoundnessError(msg.str(), c, explain(m, reg, seed, s, opts));
    }
  }
  return iterate_up(m, reg, universe, seed, opts);
}

GreatestSoundReport greatest_sound_subset(const BaseModel& m,
                                          const CodeRegistry& reg,
                                          const Universe& universe,
                                          const TruthSet& w,
                                          const EvalOptions& opts) {
  require_consistent(reg, w, "target set");
  GreatestSoundReport report;
  report.trace.kind = IterationTrace::Kind::Decreasing;
  report.trace.stages.push_back(w);
  TruthSet current = w;
  for (;;) {
    TruthSet next =
        set_intersection(w, restricted_g(m, reg, current, universe, opts));
    if (next == current) break;
    report.trace.stages.push_back(next);
    current = std::move(next);
  }
  report.trace.converged_at = report.trace.stages.size() - 1;
  report.result = current;
  report.classification = classify_universe(m, reg, current, universe, opts);
  return report;
}

std::vector<TruthSet> enumerate_fixed_points(const BaseModel& m,
                                             const CodeRegistry& reg,
                                             const Universe& universe,
                                             std::size_t max_universe,
                                             const EvalOptions& opts) {
  const std::size_t n = universe.sentences.size();
  if (n > max_universe)
    throw Error("universe of " + std::to_string(n) +
                " sentences exceeds the enumeration bound of " +
                std::to_string(max_universe));
  if (n > 30)
    throw Error("enumeration over 2^" + std::to_string(n) +
                " subsets is not tractable");
  std::vector<Code> codes(universe.codes.codes.begin(),
                          universe.codes.codes.end());
  std::vector<TruthSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    TruthSet u;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) u.insert(codes[i]);
    if (!check_consistent(reg, u).consistent) continue;
    if (restricted_g(m, reg, u, universe, opts) == u) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), [](const TruthSet& a, const TruthSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.codes < b.codes;
  });
  return out;
}

}  // namespace verity
