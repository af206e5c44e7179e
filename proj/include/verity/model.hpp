#ifndef VERITY_MODEL_HPP
#define VERITY_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "verity/syntax.hpp"

namespace verity {

// Finite membership structure. Elements are opaque ids; the membership
// relation is an arbitrary finite digraph (no well-foundedness imposed),
// so non-well-founded toy models load fine from files.
class BaseModel {
 public:
  std::uint32_t add_element(std::string id);  // throws LoadError on dup
  void add_membership(std::uint32_t member, std::uint32_t container);
  void add_const(std::string name, std::uint32_t element);

  std::size_t size() const { return ids_.size(); }
  const std::string& element_id(std::uint32_t i) const { return ids_[i]; }
  std::optional<std::uint32_t> element_index(const std::string& id) const;
  bool member(std::uint32_t a, std::uint32_t b) const;  // a in b
  const std::vector<std::uint32_t>& members_of(std::uint32_t b) const {
    return members_[b];
  }
  const std::map<std::string, std::uint32_t>& consts() const { return consts_; }
  std::optional<std::uint32_t> const_element(const std::string& name) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<std::uint32_t>> members_;  // sorted member lists
  std::unordered_map<std::string, std::uint32_t> index_;
  std::map<std::string, std::uint32_t> consts_;
};

// Hereditarily-finite stand-in universe V_rank (1 <= rank <= 5) with true
// set membership. Ships consts "e" -> {} and von Neumann numerals
// "n0","n1","n2" where the rank admits them. Element ids are "v<k>" in a
// canonical order (k is the Ackermann code of the set).
BaseModel default_model(unsigned rank);

// Text format: one directive per line, '#' comments.
//   element <id>
//   member <id> <id>       (lhs is a member of rhs)
//   const <name> <id>      (name must be sentence-legal: an identifier)
BaseModel parse_model_text(std::string_view text, const std::string& origin);
BaseModel load_model_file(const std::string& path);

// Drops a trailing '#' comment. A '#' that is not at the start of the
// line and is followed by a digit is a code literal (T(#3)), not a
// comment marker.
std::string strip_comment(const std::string& line);

// Classical Tarskian truth of a closed T-free sentence, quantifiers
// ranging over the model's elements. Throws EvalError if the sentence
// mentions T or names an unknown constant.
bool eval_in_model(const BaseModel& m, const Sentence& s);

}  // namespace verity

#endif
