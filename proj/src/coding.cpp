#include "verity/coding.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "verity/errors.hpp"
#include "verity/model.hpp"

namespace verity {

Code CodeRegistry::declare_alias(const std::string& name) {
  if (aliases_.count(name))
    throw CodingError("alias '" + name + "' is already declared");
  Code c = next_code();
  by_code_.emplace_back();
  alias_of_.emplace_back(name);
  aliases_.emplace(name, c);
  return c;
}

Code CodeRegistry::define_alias(const std::string& name,
                                const Sentence& body) {
  auto it = aliases_.find(name);
  if (it == aliases_.end())
    throw CodingError("alias '" + name + "' was never declared");
  Code c = it->second;
  if (by_code_[c])
    throw CodingError("alias '" + name + "' is already defined");
  Sentence canonical = resolve_aliases(body);
  validate(canonical);
  if (auto existing = try_code(canonical)) {
    std::string other = alias_of_[*existing] ? *alias_of_[*existing]
                                             : "#" + std::to_string(*existing);
    throw CodingError("'" + name + "' duplicates the sentence already coded " +
                      std::to_string(*existing) + " (" + other + ")");
  }
  by_code_[c] = canonical;
  by_sentence_.emplace(canonical, c);
  return c;
}

Code CodeRegistry::register_sentence(const Sentence& s) {
  Sentence canonical = resolve_aliases(s);
  validate(canonical);
  if (auto existing = try_code(canonical)) return *existing;
  Code c = next_code();
  by_code_.emplace_back(canonical);
  alias_of_.emplace_back();
  by_sentence_.emplace(canonical, c);
  return c;
}

Sentence CodeRegistry::resolve_aliases(const Sentence& s) const {
  switch (s.kind()) {
    case SentenceKind::TAtom: {
      const Term& t = s.t_arg();
      if (t.kind != TermKind::AliasRef) return s;
      auto it = aliases_.find(t.name);
      if (it == aliases_.end())
        throw CodingError("unresolvable alias '" + t.name + "'");
      return Sentence::t_atom(Term::code_literal(it->second));
    }
    case SentenceKind::Not: {
      Sentence inner = resolve_aliases(s.left());
      return inner == s.left() ? s : Sentence::negation(inner);
    }
    case SentenceKind::Or:
    case SentenceKind::And:
    case SentenceKind::Implies:
    case SentenceKind::Iff: {
      Sentence l = resolve_aliases(s.left());
      Sentence r = resolve_aliases(s.right());
      if (l == s.left() && r == s.right()) return s;
      switch (s.kind()) {
        case SentenceKind::Or: return Sentence::disjunction(l, r);
        case SentenceKind::And: return Sentence::conjunction(l, r);
        case SentenceKind::Implies: return Sentence::implication(l, r);
        default: return Sentence::biconditional(l, r);
      }
    }
    default:
      return s;  // base sentences and quantified-T forms carry no aliases
  }
}

std::optional<Code> CodeRegistry::try_code(const Sentence& s) const {
  auto it = by_sentence_.find(s);
  if (it == by_sentence_.end()) return std::nullopt;
  return it->second;
}

Code CodeRegistry::code_of(const Sentence& s) const {
  if (auto c = try_code(s)) return *c;
  throw CodingError("sentence is not registered: " + print(s));
}

const Sentence& CodeRegistry::sentence_of(Code c) const {
  if (c >= by_code_.size() || !by_code_[c])
    throw CodingError("code " + std::to_string(c) +
                      " is not bound to a sentence");
  return *by_code_[c];
}

bool CodeRegistry::is_bound(Code c) const {
  return c < by_code_.size() && by_code_[c].has_value();
}

std::optional<Code> CodeRegistry::alias_code(const std::string& name) const {
  auto it = aliases_.find(name);
  if (it == aliases_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> CodeRegistry::alias_name(Code c) const {
  if (c >= alias_of_.size()) return std::nullopt;
  return alias_of_[c];
}

void CodeRegistry::check_complete() const {
  for (const auto& [name, code] : aliases_)
    if (!by_code_[code])
      throw LoadError("alias '" + name + "' was declared but never defined");
}

bool TruthSet::subset_of(const TruthSet& o) const {
  return std::includes(o.codes.begin(), o.codes.end(), codes.begin(),
                       codes.end());
}

TruthSet set_union(const TruthSet& a, const TruthSet& b) {
  TruthSet out = a;
  out.codes.insert(b.codes.begin(), b.codes.end());
  return out;
}

TruthSet set_intersection(const TruthSet& a, const TruthSet& b) {
  TruthSet out;
  std::set_intersection(a.codes.begin(), a.codes.end(), b.codes.begin(),
                        b.codes.end(),
                        std::inserter(out.codes, out.codes.begin()));
  return out;
}

ConsistencyCheck check_consistent(const CodeRegistry& reg, const TruthSet& u) {
  for (Code c : u.codes) {
    const Sentence& s = reg.sentence_of(c);
    if (s.kind() != SentenceKind::Not) continue;
    if (auto inner = reg.try_code(s.left()); inner && u.contains(*inner))
      return {false, std::make_pair(*inner, c)};
  }
  return {true, std::nullopt};
}

Universe referenced_closure(CodeRegistry& reg,
                            const std::vector<Sentence>& seeds) {
  std::vector<Sentence> work;
  std::unordered_set<Sentence, SentenceHash> seen;
  auto add = [&](const Sentence& s) {
    Sentence canonical = reg.resolve_aliases(s);
    reg.register_sentence(canonical);
    if (seen.insert(canonical).second) work.push_back(canonical);
  };
  for (const Sentence& s : seeds) add(s);
  for (std::size_t i = 0; i < work.size(); ++i) {
    Sentence cur = work[i];  // copy: the loop body grows `work`
    for (const Sentence& sub : subformulas(cur)) {
      add(sub);
      if (sub.kind() == SentenceKind::TAtom) {
        Code n = sub.t_arg().code;
        const Sentence& referenced = reg.sentence_of(n);
        add(referenced);
        add(Sentence::negation(referenced));
      }
    }
  }
  Universe out;
  out.sentences.assign(seen.begin(), seen.end());
  std::sort(out.sentences.begin(), out.sentences.end(),
            [&](const Sentence& a, const Sentence& b) {
              return reg.code_of(a) < reg.code_of(b);
            });
  for (const Sentence& s : out.sentences) out.codes.insert(reg.code_of(s));
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::pair<std::string, Code>> load_definitions_text(
    CodeRegistry& reg, std::string_view text, const std::string& origin) {
  struct Line {
    std::size_t lineno;
    std::string name;
    std::string body;
  };
  std::vector<Line> defs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(strip_comment(line));
    if (t.empty()) continue;
    auto sep = t.find(":=");
    if (sep == std::string::npos)
      throw LoadError(origin + ":" + std::to_string(lineno) +
                      ": expected 'name := <sentence>'");
    defs.push_back({lineno, trim(t.substr(0, sep)), trim(t.substr(sep + 2))});
  }
  std::vector<std::pair<std::string, Code>> out;
  // Declare every name first so definitions may reference each other
  // (and themselves) in any order.
  for (const Line& d : defs) {
    try {
      if (!is_identifier(d.name))
        throw LoadError("'" + d.name + "' cannot be used as an alias name");
      out.emplace_back(d.name, reg.declare_alias(d.name));
    } catch (const Error& e) {
      throw LoadError(origin + ":" + std::to_string(d.lineno) + ": " +
                      e.what());
    }
  }
  for (const Line& d : defs) {
    try {
      reg.define_alias(d.name, parse(d.body));
    } catch (const Error& e) {
      throw LoadError(origin + ":" + std::to_string(d.lineno) + ": " +
                      e.what());
    }
  }
  reg.check_complete();
  return out;
}

std::vector<std::pair<std::string, Code>> load_definitions_file(
    CodeRegistry& reg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoadError("cannot open definitions file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return load_definitions_text(reg, buf.str(), path);
}

}  // namespace verity
