#ifndef VERITY_ERRORS_HPP
#define VERITY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace verity {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error. `offset` is a byte position into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg), offset(offset) {}
  std::size_t offset;
};

// Structurally well-formed input that breaks a validation rule
// (stray free variable, bad T argument, T under a general quantifier).
struct ValidationError : Error {
  using Error::Error;
};

// Problems with model/definition files or alias bookkeeping.
struct LoadError : Error {
  using Error::Error;
};

// Sentence handed to an evaluator that cannot handle it
// (truth predicate in the base evaluator, unbound constant, ...).
struct EvalError : Error {
  using Error::Error;
};

// Registry misuse: unregistered code, duplicate alias, unresolvable alias.
struct CodingError : Error {
  using Error::Error;
};

}  // namespace verity

#endif
