#ifndef VERITY_SYNTAX_HPP
#define VERITY_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace verity {

// Natural-number code of a registered sentence.
using Code = std::uint32_t;

enum class TermKind { ModelConst, Var, CodeLiteral, AliasRef };

// Argument position of an atom. ModelConst/Var live in membership and
// equality atoms; CodeLiteral/AliasRef appear only as the argument of T.
struct Term {
  TermKind kind = TermKind::ModelConst;
  std::string name;  // ModelConst / Var / AliasRef
  Code code = 0;     // CodeLiteral

  static Term model_const(std::string n);
  static Term var(std::string n);
  static Term code_literal(Code c);
  static Term alias(std::string n);

  bool operator==(const Term& o) const {
    return kind == o.kind && name == o.name && code == o.code;
  }
};

enum class SentenceKind {
  Membership,  // t in t
  Equality,    // t = t
  TAtom,       // T(code) / T("alias")
  Not,
  Or,
  And,
  Implies,
  Iff,
  Exists,   // exists v . <base body>
  Forall,   // forall v . <base body>
  ExistsT,  // the sentence  exists x . T(x)
  ForallT   // the sentence  forall x . T(x)
};

// Immutable closed sentence of the language {in, =, T}. Cheap to copy
// (shared handle); equality is strict structural identity, so in
// particular not(not(A)) != A.
class Sentence {
 public:
  Sentence() = default;  // empty handle, only valid as a placeholder

  static Sentence membership(Term lhs, Term rhs);
  static Sentence equality(Term lhs, Term rhs);
  static Sentence t_atom(Term arg);
  static Sentence negation(Sentence a);
  static Sentence disjunction(Sentence a, Sentence b);
  static Sentence conjunction(Sentence a, Sentence b);
  static Sentence implication(Sentence a, Sentence b);
  static Sentence biconditional(Sentence a, Sentence b);
  static Sentence exists(std::string v, Sentence body);
  static Sentence forall(std::string v, Sentence body);
  static Sentence exists_t();
  static Sentence forall_t();

  SentenceKind kind() const;
  const Term& lhs() const;        // Membership / Equality
  const Term& rhs() const;        // Membership / Equality
  const Term& t_arg() const;      // TAtom
  const std::string& bound_var() const;  // Exists / Forall
  const Sentence& left() const;   // unary child or left operand
  const Sentence& right() const;  // right operand

  // True when the sentence never mentions the truth predicate; such
  // sentences are decided wholesale by the base model.
  bool is_base() const;

  std::size_t hash() const;
  bool operator==(const Sentence& o) const;
  bool operator!=(const Sentence& o) const { return !(*this == o); }
  explicit operator bool() const { return node_ != nullptr; }

  struct Node;  // definition is internal to syntax.cpp

 private:
  explicit Sentence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Sentence make_node(SentenceKind kind, Term a, Term b, std::string var,
                            Sentence l, Sentence r);
  std::shared_ptr<const Node> node_;
};

struct SentenceHash {
  std::size_t operator()(const Sentence& s) const { return s.hash(); }
};

// Concrete grammar (whitespace-insensitive):
//
//   sentence := iff
//   iff      := imp ('<->' imp)*               left associative
//   imp      := or ('->' imp)?                 right associative
//   or       := and ('or' and)*
//   and      := unary ('and' unary)*
//   unary    := 'not' unary | quant | atom
//   quant    := ('exists'|'forall') IDENT '.' iff     (maximal scope)
//   atom     := 'T' '(' targ ')' | '(' iff ')' | term ('in'|'=') term
//   targ     := '"' IDENT '"' | '#' NAT | IDENT      (bare IDENT only in
//                                                     the quantified forms)
//   term     := IDENT
//
// Identifiers bound by an enclosing quantifier parse as variables,
// anything else as a model constant. Quantification whose body mentions
// T is accepted only as the dedicated forms 'exists x . T(x)' and
// 'forall x . T(x)'.
Sentence parse(std::string_view text);

// Inverse of parse: parse(print(s)) is structurally equal to s.
std::string print(const Sentence& s);

// All closed subsentences of s, including s, in first-visit order.
// Base sentences are atomic: they contribute only themselves, mirroring
// the way rule (r1) decides them wholesale.
std::vector<Sentence> subformulas(const Sentence& s);

// Throws ValidationError unless every variable is bound, membership and
// equality arguments are constants or variables, every T argument is a
// code or alias, and every quantifier body is T-free.
void validate(const Sentence& s);

// Usable as a constant, variable, or alias name: [A-Za-z_][A-Za-z0-9_]*
// and not one of the grammar's keywords.
bool is_identifier(std::string_view s);

}  // namespace verity

#endif
