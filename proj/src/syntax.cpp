#include "verity/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "verity/errors.hpp"

namespace verity {

Term Term::model_const(std::string n) {
  Term t;
  t.kind = TermKind::ModelConst;
  t.name = std::move(n);
  return t;
}

Term Term::var(std::string n) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(n);
  return t;
}

Term Term::code_literal(Code c) {
  Term t;
  t.kind = TermKind::CodeLiteral;
  t.code = c;
  return t;
}

Term Term::alias(std::string n) {
  Term t;
  t.kind = TermKind::AliasRef;
  t.name = std::move(n);
  return t;
}

struct Sentence::Node {
  SentenceKind kind;
  Term a, b;        // atom payload; a doubles as the T argument
  std::string var;  // Exists / Forall binder
  Sentence l, r;
  bool base = true;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t term_hash(const Term& t) {
  std::size_t h = static_cast<std::size_t>(t.kind) * 0x9e3779b1u;
  h = mix(h, std::hash<std::string>{}(t.name));
  h = mix(h, t.code);
  return h;
}

}  // namespace

Sentence make_node(SentenceKind kind, Term a, Term b, std::string var,
                   Sentence l, Sentence r) {
  auto n = std::make_shared<Sentence::Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  n->var = std::move(var);
  n->l = std::move(l);
  n->r = std::move(r);
  n->base = kind != SentenceKind::TAtom && kind != SentenceKind::ExistsT &&
            kind != SentenceKind::ForallT && (!n->l || n->l.is_base()) &&
            (!n->r || n->r.is_base());
  std::size_t h = static_cast<std::size_t>(kind) * 0x85ebca77u;
  h = mix(h, term_hash(n->a));
  h = mix(h, term_hash(n->b));
  h = mix(h, std::hash<std::string>{}(n->var));
  if (n->l) h = mix(h, n->l.hash());
  if (n->r) h = mix(h, n->r.hash());
  n->hash = h;
  return Sentence(std::move(n));
}

Sentence Sentence::membership(Term lhs, Term rhs) {
  return make_node(SentenceKind::Membership, std::move(lhs), std::move(rhs),
                   {}, {}, {});
}
Sentence Sentence::equality(Term lhs, Term rhs) {
  return make_node(SentenceKind::Equality, std::move(lhs), std::move(rhs), {},
                   {}, {});
}
Sentence Sentence::t_atom(Term arg) {
  return make_node(SentenceKind::TAtom, std::move(arg), {}, {}, {}, {});
}
Sentence Sentence::negation(Sentence a) {
  return make_node(SentenceKind::Not, {}, {}, {}, std::move(a), {});
}
Sentence Sentence::disjunction(Sentence a, Sentence b) {
  return make_node(SentenceKind::Or, {}, {}, {}, std::move(a), std::move(b));
}
Sentence Sentence::conjunction(Sentence a, Sentence b) {
  return make_node(SentenceKind::And, {}, {}, {}, std::move(a), std::move(b));
}
Sentence Sentence::implication(Sentence a, Sentence b) {
  return make_node(SentenceKind::Implies, {}, {}, {}, std::move(a),
                   std::move(b));
}
Sentence Sentence::biconditional(Sentence a, Sentence b) {
  return make_node(SentenceKind::Iff, {}, {}, {}, std::move(a), std::move(b));
}
Sentence Sentence::exists(std::string v, Sentence body) {
  return make_node(SentenceKind::Exists, {}, {}, std::move(v), std::move(body),
                   {});
}
Sentence Sentence::forall(std::string v, Sentence body) {
  return make_node(SentenceKind::Forall, {}, {}, std::move(v), std::move(body),
                   {});
}
Sentence Sentence::exists_t() {
  return make_node(SentenceKind::ExistsT, {}, {}, {}, {}, {});
}
Sentence Sentence::forall_t() {
  return make_node(SentenceKind::ForallT, {}, {}, {}, {}, {});
}

SentenceKind Sentence::kind() const { return node_->kind; }
const Term& Sentence::lhs() const { return node_->a; }
const Term& Sentence::rhs() const { return node_->b; }
const Term& Sentence::t_arg() const { return node_->a; }
const std::string& Sentence::bound_var() const { return node_->var; }
const Sentence& Sentence::left() const { return node_->l; }
const Sentence& Sentence::right() const { return node_->r; }
bool Sentence::is_base() const { return node_->base; }
std::size_t Sentence::hash() const { return node_ ? node_->hash : 0; }

bool Sentence::operator==(const Sentence& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind)
    return false;
  return node_->a == o.node_->a && node_->b == o.node_->b &&
         node_->var == o.node_->var && node_->l == o.node_->l &&
         node_->r == o.node_->r;
}

// {{{ Lexer.

namespace {

enum class Tok {
  Ident,
  Nat,
  QuotedIdent,
  Hash,
  LParen,
  RParen,
  Dot,
  In,
  Eq,
  Not,
  Or,
  And,
  Arrow,
  DArrow,
  Exists,
  Forall,
  Truth,  // the predicate symbol T
  End
};

struct Token {
  Tok tok;
  std::string text;
  Code value = 0;
  std::size_t pos = 0;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::QuotedIdent: return "quoted alias";
    case Tok::Hash: return "'#'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Dot: return "'.'";
    case Tok::In: return "'in'";
    case Tok::Eq: return "'='";
    case Tok::Not: return "'not'";
    case Tok::Or: return "'or'";
    case Tok::And: return "'and'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::Exists: return "'exists'";
    case Tok::Forall: return "'forall'";
    case Tok::Truth: return "'T'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (c == '(') { out.push_back({Tok::LParen, "(", 0, pos}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, ")", 0, pos}); ++i; continue; }
    if (c == '.') { out.push_back({Tok::Dot, ".", 0, pos}); ++i; continue; }
    if (c == '#') { out.push_back({Tok::Hash, "#", 0, pos}); ++i; continue; }
    if (c == '=') { out.push_back({Tok::Eq, "=", 0, pos}); ++i; continue; }
    if (c == '-') {
      if (i + 1 < n && text[i + 1] == '>') {
        out.push_back({Tok::Arrow, "->", 0, pos});
        i += 2;
        continue;
      }
      throw ParseError("stray '-', expected '->'", pos);
    }
    if (c == '<') {
      if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>') {
        out.push_back({Tok::DArrow, "<->", 0, pos});
        i += 3;
        continue;
      }
      throw ParseError("stray '<', expected '<->'", pos);
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && text[j] != '"') ++j;
      if (j >= n) throw ParseError("unterminated quoted alias", pos);
      std::string name(text.substr(i + 1, j - i - 1));
      if (name.empty() || !ident_start(name[0]) ||
          !std::all_of(name.begin(), name.end(), ident_char))
        throw ParseError("alias name must be an identifier: \"" + name + "\"",
                         pos);
      out.push_back({Tok::QuotedIdent, std::move(name), 0, pos});
      i = j + 1;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      unsigned long long v = 0;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + static_cast<unsigned long long>(text[j] - '0');
        if (v > 0xffffffffull) throw ParseError("code literal out of range", pos);
        ++j;
      }
      out.push_back({Tok::Nat, std::string(text.substr(i, j - i)),
                     static_cast<Code>(v), pos});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      Tok t = Tok::Ident;
      if (word == "in") t = Tok::In;
      else if (word == "not") t = Tok::Not;
      else if (word == "or") t = Tok::Or;
      else if (word == "and") t = Tok::And;
      else if (word == "exists") t = Tok::Exists;
      else if (word == "forall") t = Tok::Forall;
      else if (word == "T") t = Tok::Truth;
      out.push_back({t, std::move(word), 0, pos});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back({Tok::End, "", 0, n});
  return out;
}

// }}}

// {{{ Recursive-descent parser.

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Sentence run() {
    Sentence s = iff();
    expect(Tok::End, "end of sentence");
    return s;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok t) {
    if (peek().tok == t) {
      advance();
      return true;
    }
    return false;
  }
  Token expect(Tok t, const char* what) {
    if (peek().tok != t)
      throw ParseError(std::string("expected ") + what + ", found " +
                           tok_name(peek().tok),
                       peek().pos);
    return advance();
  }

  bool bound(const std::string& name) const {
    return std::find(binders_.rbegin(), binders_.rend(), name) !=
           binders_.rend();
  }

  Sentence iff() {
    Sentence s = imp();
    while (accept(Tok::DArrow)) s = Sentence::biconditional(s, imp());
    return s;
  }

  Sentence imp() {
    Sentence s = disj();
    if (accept(Tok::Arrow)) s = Sentence::implication(s, imp());
    return s;
  }

  Sentence disj() {
    Sentence s = conj();
    while (accept(Tok::Or)) s = Sentence::disjunction(s, conj());
    return s;
  }

  Sentence conj() {
    Sentence s = unary();
    while (accept(Tok::And)) s = Sentence::conjunction(s, unary());
    return s;
  }

  Sentence unary() {
    if (accept(Tok::Not)) return Sentence::negation(unary());
    if (peek().tok == Tok::Exists || peek().tok == Tok::Forall)
      return quantifier();
    return atom();
  }

  Sentence quantifier() {
    const bool existential = advance().tok == Tok::Exists;
    Token var = expect(Tok::Ident, "bound variable");
    expect(Tok::Dot, "'.' after bound variable");
    binders_.push_back(var.text);
    Sentence body = iff();
    binders_.pop_back();
    // The only quantification over the truth predicate the rules define.
    if (body.kind() == SentenceKind::TAtom &&
        body.t_arg().kind == TermKind::Var && body.t_arg().name == var.text)
      return existential ? Sentence::exists_t() : Sentence::forall_t();
    if (Sentence bad = find_t_mention(body); bad)
      throw ParseError(
          "quantification over T is only supported as 'exists x . T(x)' and "
          "'forall x . T(x)'; offending subformula: " +
              print(bad),
          var.pos);
    return existential ? Sentence::exists(var.text, body)
                       : Sentence::forall(var.text, body);
  }

  // First subformula mentioning T, or an empty handle.
  static Sentence find_t_mention(const Sentence& s) {
    switch (s.kind()) {
      case SentenceKind::TAtom:
      case SentenceKind::ExistsT:
      case SentenceKind::ForallT:
        return s;
      case SentenceKind::Membership:
      case SentenceKind::Equality:
        return {};
      default:
        if (s.left())
          if (Sentence bad = find_t_mention(s.left()); bad) return bad;
        if (s.right())
          if (Sentence bad = find_t_mention(s.right()); bad) return bad;
        return {};
    }
  }

  Sentence atom() {
    if (peek().tok == Tok::Truth) {
      Token t = advance();
      expect(Tok::LParen, "'(' after T");
      Term arg = t_argument();
      expect(Tok::RParen, "')' after T argument");
      return Sentence::t_atom(std::move(arg));
    }
    if (accept(Tok::LParen)) {
      Sentence s = iff();
      expect(Tok::RParen, "')'");
      return s;
    }
    Term lhs = term();
    if (accept(Tok::In)) return Sentence::membership(std::move(lhs), term());
    if (accept(Tok::Eq)) return Sentence::equality(std::move(lhs), term());
    throw ParseError("expected 'in' or '=' after term", peek().pos);
  }

  Term t_argument() {
    if (peek().tok == Tok::QuotedIdent) return Term::alias(advance().text);
    if (accept(Tok::Hash)) {
      Token n = expect(Tok::Nat, "code number after '#'");
      return Term::code_literal(n.value);
    }
    if (peek().tok == Tok::Ident) {
      Token id = advance();
      if (!bound(id.text))
        throw ParseError("T argument must be a quoted alias, '#<code>', or "
                         "the variable of the directly enclosing quantifier; "
                         "'" + id.text + "' is not bound",
                         id.pos);
      return Term::var(id.text);
    }
    throw ParseError("expected T argument", peek().pos);
  }

  Term term() {
    Token id = expect(Tok::Ident, "term");
    return bound(id.text) ? Term::var(id.text) : Term::model_const(id.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
};

}  // namespace

Sentence parse(std::string_view text) {
  Sentence s = Parser(text).run();
  validate(s);
  return s;
}

// }}}

// {{{ Printer.

namespace {

// Levels: Iff 0, Implies 1, Or 2, And 3, Not 4, atoms 5. A quantifier
// body runs to the end of the enclosing expression, so quantified
// sentences sit below every connective (-1) and get parenthesized in any
// operand position.
int level_of(const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::Iff: return 0;
    case SentenceKind::Implies: return 1;
    case SentenceKind::Or: return 2;
    case SentenceKind::And: return 3;
    case SentenceKind::Not: return 4;
    case SentenceKind::Exists:
    case SentenceKind::Forall:
    case SentenceKind::ExistsT:
    case SentenceKind::ForallT:
      return -1;
    default: return 5;
  }
}

void print_term(std::ostringstream& out, const Term& t) {
  switch (t.kind) {
    case TermKind::ModelConst:
    case TermKind::Var:
      out << t.name;
      return;
    case TermKind::CodeLiteral:
      out << '#' << t.code;
      return;
    case TermKind::AliasRef:
      out << '"' << t.name << '"';
      return;
  }
}

void print_rec(std::ostringstream& out, const Sentence& s, int min_level) {
  const bool parens = level_of(s) < min_level;
  if (parens) out << '(';
  switch (s.kind()) {
    case SentenceKind::Membership:
      print_term(out, s.lhs());
      out << " in ";
      print_term(out, s.rhs());
      break;
    case SentenceKind::Equality:
      print_term(out, s.lhs());
      out << " = ";
      print_term(out, s.rhs());
      break;
    case SentenceKind::TAtom:
      out << "T(";
      print_term(out, s.t_arg());
      out << ')';
      break;
    case SentenceKind::Not:
      out << "not ";
      print_rec(out, s.left(), 4);
      break;
    case SentenceKind::Or:
      print_rec(out, s.left(), 2);
      out << " or ";
      print_rec(out, s.right(), 3);
      break;
    case SentenceKind::And:
      print_rec(out, s.left(), 3);
      out << " and ";
      print_rec(out, s.right(), 4);
      break;
    case SentenceKind::Implies:
      print_rec(out, s.left(), 2);
      out << " -> ";
      print_rec(out, s.right(), 1);
      break;
    case SentenceKind::Iff:
      print_rec(out, s.left(), 1);
      out << " <-> ";
      print_rec(out, s.right(), 1);
      break;
    case SentenceKind::Exists:
      out << "exists " << s.bound_var() << " . ";
      print_rec(out, s.left(), -1);
      break;
    case SentenceKind::Forall:
      out << "forall " << s.bound_var() << " . ";
      print_rec(out, s.left(), -1);
      break;
    case SentenceKind::ExistsT:
      out << "exists x . T(x)";
      break;
    case SentenceKind::ForallT:
      out << "forall x . T(x)";
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string print(const Sentence& s) {
  std::ostringstream out;
  print_rec(out, s, -1);
  return out.str();
}

// }}}

std::vector<Sentence> subformulas(const Sentence& s) {
  std::vector<Sentence> out;
  std::unordered_set<Sentence, SentenceHash> seen;
  std::vector<Sentence> stack{s};
  while (!stack.empty()) {
    Sentence cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    out.push_back(cur);
    if (cur.is_base()) continue;  // decided wholesale by rule (r1)
    switch (cur.kind()) {
      case SentenceKind::Not:
      case SentenceKind::Or:
      case SentenceKind::And:
      case SentenceKind::Implies:
      case SentenceKind::Iff:
        if (cur.right()) stack.push_back(cur.right());
        stack.push_back(cur.left());
        break;
      default:
        break;  // T-atoms and quantified-T forms have no sentence parts
    }
  }
  return out;
}

namespace {

void validate_rec(const Sentence& s, std::vector<std::string>& binders) {
  switch (s.kind()) {
    case SentenceKind::Membership:
    case SentenceKind::Equality:
      for (const Term* t : {&s.lhs(), &s.rhs()}) {
        if (t->kind == TermKind::CodeLiteral || t->kind == TermKind::AliasRef)
          throw ValidationError(
              "code and alias terms may only appear as the argument of T: " +
              print(s));
        if (t->kind == TermKind::Var &&
            std::find(binders.begin(), binders.end(), t->name) ==
                binders.end())
          throw ValidationError("unbound variable '" + t->name +
                                "' in: " + print(s));
      }
      return;
    case SentenceKind::TAtom:
      if (s.t_arg().kind != TermKind::CodeLiteral &&
          s.t_arg().kind != TermKind::AliasRef)
        throw ValidationError(
            "T argument must be a code literal or alias in: " + print(s));
      return;
    case SentenceKind::Not:
      validate_rec(s.left(), binders);
      return;
    case SentenceKind::Or:
    case SentenceKind::And:
    case SentenceKind::Implies:
    case SentenceKind::Iff:
      validate_rec(s.left(), binders);
      validate_rec(s.right(), binders);
      return;
    case SentenceKind::Exists:
    case SentenceKind::Forall:
      if (!s.left().is_base())
        throw ValidationError(
            "quantification over T is only supported as 'exists x . T(x)' "
            "and 'forall x . T(x)'; offending body: " +
            print(s.left()));
      binders.push_back(s.bound_var());
      validate_rec(s.left(), binders);
      binders.pop_back();
      return;
    case SentenceKind::ExistsT:
    case SentenceKind::ForallT:
      return;
  }
}

}  // namespace

void validate(const Sentence& s) {
  std::vector<std::string> binders;
  validate_rec(s, binders);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  static const char* kReserved[] = {"in",     "not",    "or", "and",
                                    "exists", "forall", "T"};
  for (const char* r : kReserved)
    if (s == r) return false;
  return true;
}

}  // namespace verity
