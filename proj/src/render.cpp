#include "verity/render.hpp"

#include <algorithm>
#include <sstream>

namespace verity {

namespace {

Sentence aliasify(const CodeRegistry& reg, const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::TAtom: {
      const Term& t = s.t_arg();
      if (t.kind != TermKind::CodeLiteral) return s;
      if (auto name = reg.alias_name(t.code))
        return Sentence::t_atom(Term::alias(*name));
      return s;
    }
    case SentenceKind::Not:
      return Sentence::negation(aliasify(reg, s.left()));
    case SentenceKind::Or:
      return Sentence::disjunction(aliasify(reg, s.left()),
                                   aliasify(reg, s.right()));
    case SentenceKind::And:
      return Sentence::conjunction(aliasify(reg, s.left()),
                                   aliasify(reg, s.right()));
    case SentenceKind::Implies:
      return Sentence::implication(aliasify(reg, s.left()),
                                   aliasify(reg, s.right()));
    case SentenceKind::Iff:
      return Sentence::biconditional(aliasify(reg, s.left()),
                                     aliasify(reg, s.right()));
    default:
      return s;
  }
}

}  // namespace

std::string pretty(const CodeRegistry& reg, const Sentence& s) {
  return print(aliasify(reg, s));
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::InG: return "InG";
    case Sign::InF: return "InF";
    case Sign::Neither: return "Neither";
    case Sign::Both: return "Both";
  }
  return "?";
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::True: return "true";
    case Classification::False: return "false";
    case Classification::Ungrounded: return "ungrounded";
    case Classification::Conflicted: return "conflicted";
  }
  return "?";
}

namespace {

void render_trace_rec(const CodeRegistry& reg, const Trace& t, int depth,
                      std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << '[' << t.rule << "] " << pretty(reg, t.sentence) << "  =>  "
      << sign_name(t.verdict);
  if (!t.note.empty()) out << "   (" << t.note << ')';
  out << '\n';
  for (const Trace& c : t.children) render_trace_rec(reg, c, depth + 1, out);
}

}  // namespace

std::string render_trace_text(const CodeRegistry& reg, const Trace& t) {
  std::ostringstream out;
  render_trace_rec(reg, t, 0, out);
  return out.str();
}

Json trace_json(const CodeRegistry& reg, const Trace& t) {
  Json j;
  j["sentence"] = pretty(reg, t.sentence);
  j["rule"] = t.rule;
  j["sign"] = sign_name(t.verdict);
  j["note"] = t.note;
  Json children = Json::array();
  for (const Trace& c : t.children) children.push_back(trace_json(reg, c));
  j["children"] = std::move(children);
  return j;
}

std::string render_set(const CodeRegistry& reg, const TruthSet& u) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Code c : u.codes) {
    if (!first) out << ", ";
    first = false;
    out << '#' << c << ' ' << pretty(reg, reg.sentence_of(c));
  }
  out << '}';
  return out.str();
}

std::string render_stages_text(const CodeRegistry& reg,
                               const IterationTrace& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    out << "  stage " << i << ": " << render_set(reg, t.stages[i]);
    if (i == t.converged_at) out << "   (fixed)";
    out << '\n';
  }
  return out.str();
}

Json universe_json(const CodeRegistry& reg, const Universe& u) {
  Json j = Json::array();
  for (const Sentence& s : u.sentences) {
    Json e;
    e["code"] = reg.code_of(s);
    e["text"] = pretty(reg, s);
    j.push_back(std::move(e));
  }
  return j;
}

Json set_json(const TruthSet& u) {
  Json j = Json::array();
  for (Code c : u.codes) j.push_back(c);
  return j;
}

Json stages_json(const IterationTrace& t) {
  Json j;
  j["kind"] = t.kind == IterationTrace::Kind::Increasing ? "increasing"
                                                         : "decreasing";
  j["converged_at"] = t.converged_at;
  Json stages = Json::array();
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    Json s;
    s["index"] = i;
    s["codes"] = set_json(t.stages[i]);
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  return j;
}

Json classification_json(const CodeRegistry& reg,
                         const std::map<Code, Classification>& c) {
  Json j = Json::array();
  for (const auto& [code, verdict] : c) {
    Json e;
    e["code"] = code;
    e["text"] = pretty(reg, reg.sentence_of(code));
    e["verdict"] = classification_name(verdict);
    j.push_back(std::move(e));
  }
  return j;
}

Json norm_card_json(const std::vector<NormCheckResult>& card) {
  Json j = Json::array();
  for (const NormCheckResult& r : card) {
    Json e;
    e["norm"] = r.norm;
    e["title"] = r.title;
    e["mode"] = r.executable ? "checked" : "by-construction";
    e["pass"] = r.pass;
    e["checked"] = r.checked;
    Json violations = Json::array();
    for (const NormViolation& v : r.violations) {
      Json vj;
      if (v.code) vj["code"] = *v.code;
      vj["detail"] = v.detail;
      violations.push_back(std::move(vj));
    }
    e["violations"] = std::move(violations);
    Json exemptions = Json::array();
    for (const NormExemption& x : r.exemptions) {
      Json xj;
      xj["code"] = x.code;
      xj["reason"] = x.reason;
      exemptions.push_back(std::move(xj));
    }
    e["exemptions"] = std::move(exemptions);
    e["note"] = r.note;
    j.push_back(std::move(e));
  }
  return j;
}

std::string render_norm_card_text(const std::vector<NormCheckResult>& card) {
  std::ostringstream out;
  for (const NormCheckResult& r : card) {
    out << "  (" << r.norm << ") " << (r.pass ? "PASS" : "FAIL") << "  "
        << r.title;
    if (r.executable) {
      out << "  [" << r.checked << " checked";
      if (!r.exemptions.empty()) out << ", " << r.exemptions.size()
                                     << " exempt";
      out << ']';
    } else {
      out << "  [by construction]";
    }
    out << '\n';
    if (!r.note.empty()) out << "      " << r.note << '\n';
    for (const NormViolation& v : r.violations)
      out << "      violation: " << v.detail << '\n';
  }
  return out.str();
}

}  // namespace verity
