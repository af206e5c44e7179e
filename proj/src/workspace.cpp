#include "verity/workspace.hpp"

#include <filesystem>

#include "verity/errors.hpp"

namespace verity {

std::vector<Sentence> Workspace::defined_sentences() const {
  std::vector<Sentence> out;
  out.reserve(definitions.size());
  for (const auto& [name, code] : definitions)
    out.push_back(registry.sentence_of(code));
  return out;
}

Workspace load_workspace(const WorkspaceOptions& opts) {
  Workspace ws;
  const bool model_exists = std::filesystem::exists(opts.model_path);
  if (opts.model_path_explicit && !model_exists)
    throw LoadError("model file '" + opts.model_path + "' does not exist");
  ws.model = model_exists ? load_model_file(opts.model_path)
                          : default_model(opts.rank);
  const bool defs_exists = std::filesystem::exists(opts.defs_path);
  if (opts.defs_path_explicit && !defs_exists)
    throw LoadError("definitions file '" + opts.defs_path +
                    "' does not exist");
  if (defs_exists)
    ws.definitions = load_definitions_file(ws.registry, opts.defs_path);
  return ws;
}

Sentence query_sentence(Workspace& ws, const std::string& text) {
  if (auto code = ws.registry.alias_code(text))
    return ws.registry.sentence_of(*code);
  Sentence s = ws.registry.resolve_aliases(parse(text));
  ws.registry.register_sentence(s);
  return s;
}

TruthSet alias_set(const Workspace& ws,
                   const std::vector<std::string>& names) {
  TruthSet out;
  for (const std::string& name : names) {
    auto code = ws.registry.alias_code(name);
    if (!code) throw LoadError("unknown alias '" + name + "'");
    out.insert(*code);
  }
  return out;
}

}  // namespace verity
