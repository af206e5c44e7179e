#ifndef VERITY_CODING_HPP
#define VERITY_CODING_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "verity/syntax.hpp"

namespace verity {

// Bijection between registered sentences and natural-number codes.
// Codes are handed out in declaration order, so reloading the same
// workspace text reproduces the same numbering. Aliases make
// self-reference constructible: an alias reserves a code first, and the
// sentence bound to it may embed that very code under T.
//
// Mutable while a workspace loads and universes are closed; evaluation
// only ever sees it through const references.
class CodeRegistry {
 public:
  // Reserves a fresh code for `name`; the sentence comes later via
  // define_alias. Throws CodingError on duplicates.
  Code declare_alias(const std::string& name);

  // Binds a declared alias to its sentence (aliases inside `body` are
  // resolved to code literals first). Throws CodingError if the resolved
  // sentence is already registered under a different code.
  Code define_alias(const std::string& name, const Sentence& body);

  // Registers a sentence (idempotent): the existing code if known,
  // otherwise the next fresh one.
  Code register_sentence(const Sentence& s);

  // Replaces every AliasRef with the code literal it denotes.
  Sentence resolve_aliases(const Sentence& s) const;

  std::optional<Code> try_code(const Sentence& s) const;
  Code code_of(const Sentence& s) const;       // throws if unregistered
  const Sentence& sentence_of(Code c) const;   // throws if unbound
  bool is_bound(Code c) const;
  std::optional<Code> alias_code(const std::string& name) const;
  std::optional<std::string> alias_name(Code c) const;
  Code next_code() const { return static_cast<Code>(by_code_.size()); }

  // Call after loading: every declared alias must have been defined.
  void check_complete() const;

 private:
  std::vector<std::optional<Sentence>> by_code_;
  std::vector<std::optional<std::string>> alias_of_;
  std::unordered_map<Sentence, Code, SentenceHash> by_sentence_;
  std::map<std::string, Code> aliases_;
};

// Finite set of registered codes. Kept ordered so every traversal is
// deterministic.
struct TruthSet {
  std::set<Code> codes;

  TruthSet() = default;
  explicit TruthSet(std::set<Code> c) : codes(std::move(c)) {}

  bool contains(Code c) const { return codes.count(c) != 0; }
  bool empty() const { return codes.empty(); }
  std::size_t size() const { return codes.size(); }
  void insert(Code c) { codes.insert(c); }
  bool subset_of(const TruthSet& o) const;

  bool operator==(const TruthSet& o) const { return codes == o.codes; }
  bool operator!=(const TruthSet& o) const { return codes != o.codes; }
};

TruthSet set_union(const TruthSet& a, const TruthSet& b);
TruthSet set_intersection(const TruthSet& a, const TruthSet& b);

struct ConsistencyCheck {
  bool consistent = true;
  // Codes of some offending pair (A, not A) when inconsistent.
  std::optional<std::pair<Code, Code>> witness;
};

// A set is consistent iff it contains no pair {#A, #[not A]}.
ConsistencyCheck check_consistent(const CodeRegistry& reg, const TruthSet& u);

// Closed sentence universe: every member's subformulas are members, and
// every code referenced under T is tracked together with its negation.
struct Universe {
  std::vector<Sentence> sentences;  // sorted by code
  TruthSet codes;

  bool tracks(Code c) const { return codes.contains(c); }
};

// Smallest universe containing `seeds`, closed under subformulas and,
// for every T(#n) occurring in a member, containing both the sentence
// coded n and its negation. Registers whatever it adds. Terminates
// because references stay inside the (finite) registry.
Universe referenced_closure(CodeRegistry& reg,
                            const std::vector<Sentence>& seeds);

// Definitions file: lines of the form `name := <sentence>`, '#' comments,
// forward references between names allowed. Returns (name, code) pairs in
// declaration order.
std::vector<std::pair<std::string, Code>> load_definitions_text(
    CodeRegistry& reg, std::string_view text, const std::string& origin);
std::vector<std::pair<std::string, Code>> load_definitions_file(
    CodeRegistry& reg, const std::string& path);

}  // namespace verity

#endif
