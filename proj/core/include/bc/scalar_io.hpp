#pragma once

// Canonical textual rendering of scalars, and the expression parser that
// round-trips it.  The symbol `z` denotes the fixed primitive root zeta_N of
// the ambient conductor; `d` is delta, `m<k>` the k-th reflection-class mu,
// `l<k>` the k-th hyperplane-orbit lambda.

#include <bc/param.hpp>

#include <string>
#include <vector>

namespace bc {

std::string render_cyclotomic(const Cyclotomic& c);
std::string render_polynomial(const Polynomial& p, const ParamRing& ring);
std::string render_scalar(const ParamScalar& s, const ParamRing& ring);

// Evaluates an expression over +, -, *, /, ^ with atoms: rationals, z, and
// the ring's variables.  Throws InvalidInput on malformed text.
ParamScalar parse_scalar(const std::string& text, const ParamRing& ring);

// Same, restricted to constant expressions (entries of group files).
Cyclotomic parse_cyclotomic(const std::string& text, long conductor);

// Shared tokenizer (also used by the presentation file parser).
struct Token {
  enum Kind { Number, Name, Op, End } kind;
  std::string text;
};
std::vector<Token> tokenize_expression(const std::string& text);

}  // namespace bc
