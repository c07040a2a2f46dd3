#include "qflag/expr.hpp"

#include <cctype>
#include <optional>

namespace qflag {

ParseError::ParseError(std::string kind, const std::string& what, int l, int c)
    : Error(std::move(kind), std::to_string(l) + ":" + std::to_string(c) + ": " + what), line(l), col(c) {}

namespace {

struct Token {
  enum class Type { Ident, Int, Sym, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') { ++line; col = 1; }
      else ++col;
    }
  };
  while (i < text.size()) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) { advance(1); continue; }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t j = i;
    if (std::isalpha(ch) || ch == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.type = Token::Type::Ident;
    } else if (std::isdigit(ch)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.type = Token::Type::Int;
    } else if (std::string("+-*/^()[],").find(static_cast<char>(ch)) != std::string::npos) {
      j = i + 1;
      t.type = Token::Type::Sym;
    } else {
      throw ParseError("syntax", std::string("unexpected character '") + static_cast<char>(ch) + "'", line, col);
    }
    t.text = text.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const AlgebraSpec& spec) : toks_(tokenize(text)), spec_(spec) {}

  Expr parse() {
    Expr e = sum();
    if (peek().type != Token::Type::End) fail("syntax", "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_sym(const char* s) const { return peek().type == Token::Type::Sym && peek().text == s; }
  Token take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& kind, const std::string& what) const {
    throw ParseError(kind, what, peek().line, peek().col);
  }
  void expect(const char* s) {
    if (!is_sym(s)) fail("syntax", std::string("expected '") + s + "'");
    ++pos_;
  }

  static Expr node(Expr::Kind k, const Token& at) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.col = at.col;
    return e;
  }
  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.line = a.line;
    e.col = a.col;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
  }

  Expr sum() {
    Expr e = product();
    while (is_sym("+") || is_sym("-")) {
      Expr::Kind k = take().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      e = binary(k, std::move(e), product());
    }
    return e;
  }

  bool starts_factor() const {
    return peek().type == Token::Type::Ident || peek().type == Token::Type::Int || is_sym("(");
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (is_sym("*")) {
        ++pos_;
        e = binary(Expr::Kind::Mul, std::move(e), unary());
      } else if (is_sym("/")) {
        ++pos_;
        e = binary(Expr::Kind::Div, std::move(e), unary());
      } else if (starts_factor()) {
        e = binary(Expr::Kind::Mul, std::move(e), power());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (is_sym("-")) {
      Expr e = node(Expr::Kind::Neg, take());
      e.kids.push_back(unary());
      return e;
    }
    if (is_sym("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  long integer() {
    if (peek().type != Token::Type::Int) fail("syntax", "expected an integer");
    return std::stol(take().text);
  }

  mpq_class rational_term() {
    mpq_class v(integer());
    if (is_sym("/")) {
      ++pos_;
      long d = integer();
      if (d == 0) fail("syntax", "zero denominator");
      v /= d;
    }
    return v;
  }

  mpq_class exponent() {
    if (is_sym("(")) {
      ++pos_;
      bool neg = false;
      if (is_sym("-") || is_sym("+")) neg = take().text == "-";
      mpq_class v = rational_term();
      if (neg) v = -v;
      while (is_sym("+") || is_sym("-")) {
        bool minus = take().text == "-";
        mpq_class t = rational_term();
        v += minus ? mpq_class(-t) : t;
      }
      expect(")");
      v.canonicalize();
      return v;
    }
    bool neg = false;
    if (is_sym("-")) {
      ++pos_;
      neg = true;
    }
    mpq_class v(integer());
    return neg ? mpq_class(-v) : v;
  }

  Expr power() {
    Expr base = atom();
    if (!is_sym("^")) return base;
    Expr e = node(Expr::Kind::Pow, take());
    e.value = exponent();
    e.kids.push_back(std::move(base));
    return e;
  }

  int index(int hi) {
    const Token& at = peek();
    long v = integer();
    if (v < 1 || v > hi)
      throw ParseError("index-out-of-range", "index " + std::to_string(v) + " outside 1.." + std::to_string(hi),
                       at.line, at.col);
    return static_cast<int>(v);
  }

  void need_su(const Token& at) const {
    if (spec_.kind != AlgebraKind::SpecialUnitaryGroup)
      throw ParseError("unknown-identifier", "'" + at.text + "' is only defined over " +
                                                 AlgebraSpec{AlgebraKind::SpecialUnitaryGroup, spec_.size, spec_.root}.name(),
                       at.line, at.col);
  }

  Expr atom() {
    const Token at = peek();
    if (at.type == Token::Type::Int) {
      ++pos_;
      Expr e = node(Expr::Kind::Number, at);
      e.value = mpq_class(std::stol(at.text));
      return e;
    }
    if (is_sym("(")) {
      ++pos_;
      Expr e = sum();
      expect(")");
      return e;
    }
    if (at.type != Token::Type::Ident) fail("syntax", at.type == Token::Type::End ? "unexpected end of input"
                                                                                   : "unexpected '" + at.text + "'");
    ++pos_;
    const std::string& id = at.text;
    const int n = spec_.size;
    if (id == "q") return node(Expr::Kind::Q, at);
    if (id == "detinv") {
      if (spec_.kind != AlgebraKind::UnitaryGroup)
        throw ParseError("unknown-identifier", "detinv needs a unitary group context", at.line, at.col);
      return node(Expr::Kind::DetInv, at);
    }
    if (id == "u" || id == "zz") {
      if (id == "zz") need_su(at);
      Expr e = node(id == "u" ? Expr::Kind::Gen : Expr::Kind::ZZ, at);
      expect("[");
      e.idx.push_back(index(n));
      expect(",");
      e.idx.push_back(index(n));
      expect("]");
      return e;
    }
    if (id == "z" || id == "zs") {
      need_su(at);
      Expr e = node(id == "z" ? Expr::Kind::Z : Expr::Kind::ZStar, at);
      expect("[");
      e.idx.push_back(index(n));
      expect("]");
      return e;
    }
    if (id == "e0" || id == "ep" || id == "em") {
      need_su(at);
      Expr e = node(Expr::Kind::Form, at);
      if (id == "e0") {
        e.idx = {static_cast<int>(FormBlock::Zero), 0};
        return e;
      }
      expect("[");
      e.idx = {static_cast<int>(id == "ep" ? FormBlock::Plus : FormBlock::Minus), index(n - 1)};
      expect("]");
      return e;
    }
    if (id == "S") {
      Expr e = node(Expr::Kind::Antipode, at);
      expect("(");
      e.kids.push_back(sum());
      expect(")");
      return e;
    }
    if (n == 2 && id.size() == 1 && id[0] >= 'a' && id[0] <= 'd') {
      Expr e = node(Expr::Kind::Gen, at);
      int k = id[0] - 'a';
      e.idx = {k / 2 + 1, k % 2 + 1};
      return e;
    }
    throw ParseError("unknown-identifier", "unknown identifier '" + id + "'", at.line, at.col);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  AlgebraSpec spec_;
};

[[noreturn]] void sort_error(const Expr& e, const std::string& what) {
  throw ParseError("sort-error", what, e.line, e.col);
}

std::optional<QScalar> as_scalar(const Value& v) {
  const auto* p = std::get_if<NCPoly>(&v);
  if (!p) return std::nullopt;
  if (p->is_zero()) return QScalar(0L);
  if (p->terms().size() != 1 || !p->terms().begin()->first.empty()) return std::nullopt;
  return p->terms().begin()->second;
}

Value scale(const Value& v, const QScalar& c) {
  if (const auto* p = std::get_if<NCPoly>(&v)) return c * *p;
  return c * std::get<Omega1>(v);
}

Value eval(const Expr& e, const Session& s, const Algebra& ctx) {
  auto forms = [&]() -> const Calculus& {
    if (!(ctx.spec() == s.su().spec())) sort_error(e, "one-forms live over " + s.su().spec().name());
    return s.calculus();
  };
  auto poly = [&](const Expr& k) {
    Value v = eval(k, s, ctx);
    if (!std::holds_alternative<NCPoly>(v)) sort_error(k, "expected an algebra element, got a one-form");
    return std::get<NCPoly>(std::move(v));
  };
  switch (e.kind) {
    case Expr::Kind::Number: return ctx.scalar(QScalar(e.value));
    case Expr::Kind::Q: return ctx.scalar(QScalar::q(ctx.root()));
    case Expr::Kind::Gen: return ctx.normal_form(ctx.gen(e.idx[0], e.idx[1]));
    case Expr::Kind::DetInv: return ctx.detinv();
    case Expr::Kind::Z: return s.z(e.idx[0]);
    case Expr::Kind::ZStar: return s.zs(e.idx[0]);
    case Expr::Kind::ZZ: return s.zz(e.idx[0], e.idx[1]);
    case Expr::Kind::Form: {
      const Calculus& c = forms();
      FormIndex ix = c.index();
      switch (static_cast<FormBlock>(e.idx[0])) {
        case FormBlock::Zero: return c.basis(ix.e0());
        case FormBlock::Plus: return c.basis(ix.ep(e.idx[1]));
        case FormBlock::Minus: return c.basis(ix.em(e.idx[1]));
      }
      break;
    }
    case Expr::Kind::Antipode: return ctx.antipode(poly(e.kids[0]));
    case Expr::Kind::Neg: return scale(eval(e.kids[0], s, ctx), QScalar(-1L));
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Value a = eval(e.kids[0], s, ctx), b = eval(e.kids[1], s, ctx);
      if (a.index() != b.index()) sort_error(e, "cannot add an algebra element and a one-form");
      if (e.kind == Expr::Kind::Sub) b = scale(b, QScalar(-1L));
      if (auto* p = std::get_if<NCPoly>(&a)) return *p + std::get<NCPoly>(b);
      return std::get<Omega1>(a) + std::get<Omega1>(b);
    }
    case Expr::Kind::Mul: {
      Value a = eval(e.kids[0], s, ctx), b = eval(e.kids[1], s, ctx);
      if (std::holds_alternative<Omega1>(a)) {
        if (auto c = as_scalar(b)) return scale(a, *c);
        sort_error(e.kids[1], "one-forms take algebra elements on the right only through act");
      }
      if (std::holds_alternative<Omega1>(b)) return forms().left_mul(std::get<NCPoly>(a), std::get<Omega1>(b));
      return ctx.multiply(std::get<NCPoly>(a), std::get<NCPoly>(b));
    }
    case Expr::Kind::Div: {
      Value a = eval(e.kids[0], s, ctx);
      auto c = as_scalar(eval(e.kids[1], s, ctx));
      if (!c) sort_error(e.kids[1], "division only by scalars");
      if (c->is_zero()) throw DivisionByZero("division by zero at " + std::to_string(e.line) + ":" + std::to_string(e.col));
      return scale(a, c->inverse());
    }
    case Expr::Kind::Pow: {
      const Expr& base = e.kids[0];
      if (base.kind == Expr::Kind::Q) {
        mpz_class num = e.value.get_num(), den = e.value.get_den();
        return ctx.scalar(QScalar::q_power(static_cast<int>(num.get_si()), static_cast<int>(den.get_si()), ctx.root()));
      }
      if (e.value.get_den() != 1) sort_error(e, "fractional powers are only defined for q");
      long k = e.value.get_num().get_si();
      Value b = eval(base, s, ctx);
      if (!std::holds_alternative<NCPoly>(b)) sort_error(e, "one-forms have no powers");
      if (k < 0) {
        auto c = as_scalar(b);
        if (!c) sort_error(e, "negative powers are only defined for scalars");
        return ctx.scalar(c->inverse().pow(static_cast<int>(-k)));
      }
      return ctx.power(std::get<NCPoly>(b), static_cast<int>(k));
    }
  }
  throw InternalError("unhandled expression node");
}

bool negative(const QScalar& c) { return c.num().leading() < 0; }

std::string coef_text(const QScalar& c) {
  if (c.is_one()) return {};
  if (c.is_monomial() || !c.is_laurent()) return c.to_string();
  return "(" + c.to_string() + ")";
}

std::string term_text(const QScalar& c, const std::string& word) {
  std::string k = coef_text(c);
  if (word.empty()) return k.empty() ? "1" : k;
  return k.empty() ? word : k + "*" + word;
}

}  // namespace

Expr parse_expr(const std::string& text, const AlgebraSpec& spec) { return Parser(text, spec).parse(); }

Value evaluate(const Expr& e, const Session& s, const Algebra& ctx) { return eval(e, s, ctx); }

NCPoly evaluate_poly(const Expr& e, const Session& s, const Algebra& ctx) {
  Value v = eval(e, s, ctx);
  if (!std::holds_alternative<NCPoly>(v)) sort_error(e, "expected an algebra element, got a one-form");
  return std::get<NCPoly>(std::move(v));
}

Omega1 evaluate_form(const Expr& e, const Session& s) {
  Value v = eval(e, s, s.su());
  if (auto* p = std::get_if<NCPoly>(&v)) {
    if (p->is_zero()) return s.calculus().zero();
    sort_error(e, "expected a one-form, got an algebra element");
  }
  return std::get<Omega1>(std::move(v));
}

std::string format_scalar(const QScalar& c) { return c.to_string(); }

std::string format_word(const Word& w, const AlgebraSpec& spec, const PrintOptions& opt) {
  std::string out;
  for (char x : w) {
    if (!out.empty()) out += "*";
    Gen g = Gen::decode(x, spec.size);
    if (g.detinv) out += "detinv";
    else if (opt.letters && spec.size == 2)
      out += static_cast<char>('a' + 2 * (g.row - 1) + (g.col - 1));
    else
      out += "u[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
  }
  return out;
}

std::string format_poly(const NCPoly& f, const PrintOptions& opt) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms()) {
    bool neg = negative(c);
    std::string t = term_text(neg ? -c : c, format_word(w, f.spec(), opt));
    if (out.empty()) out = neg ? "-" + t : t;
    else out += (neg ? " - " : " + ") + t;
  }
  return out;
}

std::string format_form(const Omega1& w, const PrintOptions& opt) {
  FormIndex ix{w.spec().size};
  std::string out;
  for (int b = 0; b < w.dim(); ++b) {
    const NCPoly& p = w.coeff(b);
    if (p.is_zero()) continue;
    bool neg = false;
    std::string t;
    if (p.terms().size() == 1) {
      const auto& [word, c] = *p.terms().begin();
      neg = negative(c);
      QScalar a = neg ? -c : c;
      if (word.empty() && a.is_one()) t = ix.label(b);
      else t = term_text(a, format_word(word, p.spec(), opt)) + " " + ix.label(b);
    } else {
      t = "(" + format_poly(p, opt) + ") " + ix.label(b);
    }
    if (out.empty()) out = neg ? "-" + t : t;
    else out += (neg ? " - " : " + ") + t;
  }
  return out.empty() ? "0" : out;
}

std::string format_tensor(const TensorPoly& t, const PrintOptions& opt) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [right, left] : t.by_right()) {
    if (!out.empty()) out += " + ";
    std::string r = right.empty() ? "1" : format_word(right, t.right_spec(), opt);
    out += "(" + format_poly(left, opt) + ") ⊗ " + r;
  }
  return out;
}

}  // namespace qflag
