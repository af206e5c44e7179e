#ifndef VERITY_RENDER_HPP
#define VERITY_RENDER_HPP

#include <string>

#include <json.hpp>

#include "verity/fixpoint.hpp"
#include "verity/norms.hpp"

namespace verity {

using Json = nlohmann::ordered_json;

// Like print(), but shows registered alias names: a T-atom whose code
// carries an alias renders as T("name") instead of T(#n).
std::string pretty(const CodeRegistry& reg, const Sentence& s);

std::string sign_name(Sign s);
std::string classification_name(Classification c);

std::string render_trace_text(const CodeRegistry& reg, const Trace& t);
Json trace_json(const CodeRegistry& reg, const Trace& t);

std::string render_set(const CodeRegistry& reg, const TruthSet& u);
std::string render_stages_text(const CodeRegistry& reg,
                               const IterationTrace& t);

Json universe_json(const CodeRegistry& reg, const Universe& u);
Json set_json(const TruthSet& u);
Json stages_json(const IterationTrace& t);
Json classification_json(const CodeRegistry& reg,
                         const std::map<Code, Classification>& c);
Json norm_card_json(const std::vector<NormCheckResult>& card);
std::string render_norm_card_text(const std::vector<NormCheckResult>& card);

}  // namespace verity

#endif
