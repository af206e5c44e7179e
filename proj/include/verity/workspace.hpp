#ifndef VERITY_WORKSPACE_HPP
#define VERITY_WORKSPACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "verity/coding.hpp"
#include "verity/model.hpp"

namespace verity {

struct WorkspaceOptions {
  std::string model_path = "model.txt";
  bool model_path_explicit = false;  // fall back to default_model otherwise
  std::string defs_path = "defs.txt";
  bool defs_path_explicit = false;   // fall back to no definitions otherwise
  unsigned rank = 4;
};

// One model plus one definitions file. When the model file is absent and
// was not explicitly requested, a default hereditarily-finite model of
// the configured rank is synthesized; an absent non-explicit definitions
// file yields an empty registry.
struct Workspace {
  BaseModel model;
  CodeRegistry registry;
  std::vector<std::pair<std::string, Code>> definitions;

  std::vector<Sentence> defined_sentences() const;
};

Workspace load_workspace(const WorkspaceOptions& opts);

// Interprets `text` as a defined alias name when one matches, otherwise
// parses it as a sentence. Registers the result.
Sentence query_sentence(Workspace& ws, const std::string& text);

// Codes of the named aliases (for seed/target sets on the command line).
TruthSet alias_set(const Workspace& ws, const std::vector<std::string>& names);

}  // namespace verity

#endif
