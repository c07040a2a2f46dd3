#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "qflag/session.hpp"

namespace qflag {

struct ParseError : Error {
  ParseError(std::string kind, const std::string& what, int line, int col);
  int line;
  int col;
};

struct Expr {
  enum class Kind { Number, Q, Gen, DetInv, Z, ZStar, ZZ, Form, Antipode, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  std::vector<Expr> kids;
  std::vector<int> idx;  // generator indices; Form: (block, offset)
  mpq_class value;       // Number literal or Pow exponent
  int line = 1;
  int col = 1;
};

// Letters a, b, c, d are accepted for u[1,1], u[1,2], u[2,1], u[2,2] when size is 2.
Expr parse_expr(const std::string& text, const AlgebraSpec& spec);

using Value = std::variant<NCPoly, Omega1>;

// Forms need ctx to be the session's SU_N.
Value evaluate(const Expr& e, const Session& s, const Algebra& ctx);
NCPoly evaluate_poly(const Expr& e, const Session& s, const Algebra& ctx);
Omega1 evaluate_form(const Expr& e, const Session& s);

struct PrintOptions {
  bool letters = false;
};

std::string format_scalar(const QScalar& c);
std::string format_word(const Word& w, const AlgebraSpec& spec, const PrintOptions& opt = {});
std::string format_poly(const NCPoly& f, const PrintOptions& opt = {});
std::string format_form(const Omega1& w, const PrintOptions& opt = {});
std::string format_tensor(const TensorPoly& t, const PrintOptions& opt = {});

}  // namespace qflag
