#include "verity/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "verity/errors.hpp"

namespace verity {

std::uint32_t BaseModel::add_element(std::string id) {
  if (index_.count(id))
    throw LoadError("duplicate element id '" + id + "'");
  std::uint32_t i = static_cast<std::uint32_t>(ids_.size());
  index_.emplace(id, i);
  ids_.push_back(std::move(id));
  members_.emplace_back();
  return i;
}

void BaseModel::add_membership(std::uint32_t member, std::uint32_t container) {
  auto& v = members_[container];
  auto it = std::lower_bound(v.begin(), v.end(), member);
  if (it == v.end() || *it != member) v.insert(it, member);
}

void BaseModel::add_const(std::string name, std::uint32_t element) {
  consts_[std::move(name)] = element;
}

std::optional<std::uint32_t> BaseModel::element_index(
    const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool BaseModel::member(std::uint32_t a, std::uint32_t b) const {
  const auto& v = members_[b];
  return std::binary_search(v.begin(), v.end(), a);
}

std::optional<std::uint32_t> BaseModel::const_element(
    const std::string& name) const {
  auto it = consts_.find(name);
  if (it == consts_.end()) return std::nullopt;
  return it->second;
}

BaseModel default_model(unsigned rank) {
  if (rank < 1 || rank > 5)
    throw LoadError("default model rank must be between 1 and 5");
  // Level sizes 1, 2, 4, 16, 65536. An element is identified with its
  // Ackermann code (sum of 2^code over members), and codes below each
  // level size enumerate exactly that level, so the universe of V_rank is
  // the codes 0 .. size-1 and membership is a bit test.
  static const std::uint32_t kLevelSize[6] = {0, 1, 2, 4, 16, 65536};
  const std::uint32_t n = kLevelSize[rank];
  BaseModel m;
  for (std::uint32_t c = 0; c < n; ++c) m.add_element("v" + std::to_string(c));
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::uint32_t bit = 0; bit < 16; ++bit)
      if (c & (1u << bit)) m.add_membership(bit, c);
  m.add_const("e", 0);
  m.add_const("n0", 0);
  if (n > 1) m.add_const("n1", 1);   // {0}
  if (n > 3) m.add_const("n2", 3);   // {0, {0}}
  return m;
}

std::string strip_comment(const std::string& line) {
  std::size_t content = line.find_first_not_of(" \t");
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '#') continue;
    if (i == content || i + 1 >= line.size() ||
        !std::isdigit(static_cast<unsigned char>(line[i + 1])))
      return line.substr(0, i);
  }
  return line;
}

BaseModel parse_model_text(std::string_view text, const std::string& origin) {
  BaseModel m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw LoadError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto need_element = [&](const std::string& id) {
    auto i = m.element_index(id);
    if (!i) fail("unknown element '" + id + "'");
    return *i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "element") {
      std::string id;
      if (!(ls >> id)) fail("element needs an id");
      m.add_element(id);
    } else if (kw == "member") {
      std::string a, b;
      if (!(ls >> a >> b)) fail("member needs two element ids");
      m.add_membership(need_element(a), need_element(b));
    } else if (kw == "const") {
      std::string name, id;
      if (!(ls >> name >> id)) fail("const needs a name and an element id");
      if (!is_identifier(name))
        fail("const name '" + name + "' is not usable in sentences");
      m.add_const(name, need_element(id));
    } else {
      fail("unknown directive '" + kw + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing input '" + rest + "'");
  }
  return m;
}

BaseModel load_model_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoadError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_model_text(buf.str(), path);
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const BaseModel& m) : m_(m) {}

  bool eval(const Sentence& s) {
    switch (s.kind()) {
      case SentenceKind::Membership:
        return m_.member(resolve(s.lhs()), resolve(s.rhs()));
      case SentenceKind::Equality:
        return resolve(s.lhs()) == resolve(s.rhs());
      case SentenceKind::Not:
        return !eval(s.left());
      case SentenceKind::Or:
        return eval(s.left()) || eval(s.right());
      case SentenceKind::And:
        return eval(s.left()) && eval(s.right());
      case SentenceKind::Implies:
        return !eval(s.left()) || eval(s.right());
      case SentenceKind::Iff:
        return eval(s.left()) == eval(s.right());
      case SentenceKind::Exists:
        return quantify(s, /*existential=*/true);
      case SentenceKind::Forall:
        return quantify(s, /*existential=*/false);
      case SentenceKind::TAtom:
      case SentenceKind::ExistsT:
      case SentenceKind::ForallT:
        throw EvalError("the base evaluator cannot decide sentences "
                        "mentioning T: " +
                        print(s));
    }
    throw EvalError("unreachable");
  }

 private:
  bool quantify(const Sentence& s, bool existential) {
    env_.emplace_back(s.bound_var(), 0);
    for (std::uint32_t i = 0; i < m_.size(); ++i) {
      env_.back().second = i;
      if (eval(s.left()) == existential) {
        env_.pop_back();
        return existential;
      }
    }
    env_.pop_back();
    return !existential;
  }

  std::uint32_t resolve(const Term& t) {
    if (t.kind == TermKind::Var) {
      for (auto it = env_.rbegin(); it != env_.rend(); ++it)
        if (it->first == t.name) return it->second;
      throw EvalError("unbound variable '" + t.name + "'");
    }
    if (t.kind == TermKind::ModelConst) {
      auto e = m_.const_element(t.name);
      if (!e) throw EvalError("unknown constant '" + t.name + "'");
      return *e;
    }
    throw EvalError("code terms have no denotation in the base model");
  }

  const BaseModel& m_;
  std::vector<std::pair<std::string, std::uint32_t>> env_;
};

}  // namespace

bool eval_in_model(const BaseModel& m, const Sentence& s) {
  return Evaluator(m).eval(s);
}

}  // namespace verity
