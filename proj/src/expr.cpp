#include "orebc/expr.hpp"

#include <cctype>
#include <map>

namespace orebc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(Errc::syntax_error, pos_, msg); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t pos) {
    Expr e;
    e.kind = kind;
    e.position = pos;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (true) {
      skip_space();
      std::size_t at = pos_;
      if (accept('+'))
        lhs = binary(Expr::Kind::add, std::move(lhs), parse_term(), at);
      else if (accept('-'))
        lhs = binary(Expr::Kind::sub, std::move(lhs), parse_term(), at);
      else
        return lhs;
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (true) {
      skip_space();
      std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Expr::Kind::mul, std::move(lhs), parse_unary(), at);
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::div, std::move(lhs), parse_unary(), at);
      } else {
        skip_space();
        if (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '('))
          fail("implicit multiplication is not allowed; write '*'");
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    skip_space();
    std::size_t at = pos_;
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::negate;
      e.position = at;
      e.children.push_back(parse_unary());
      return e;
    }
    if (accept('+')) return parse_unary();
    return parse_factor();
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    Expr e;
    e.kind = Expr::Kind::power;
    e.position = at;
    e.exponent = parse_exponent();
    e.children.push_back(std::move(base));
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == '^') fail("chained exponents need parentheses");
    return e;
  }

  std::size_t parse_exponent() {
    skip_space();
    bool paren = accept('(');
    skip_space();
    std::size_t at = pos_;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(Errc::exponent_error, at, "exponent must be a natural number literal");
    std::string digits(src_.substr(start, pos_ - start));
    if (negative && digits.find_first_not_of('0') != std::string::npos)
      throw SyntaxError(Errc::exponent_error, at, "negative exponent " + digits + " (x is not invertible)");
    if (paren && !accept(')')) fail("expected ')' after exponent");
    if (digits.size() > 6) throw SyntaxError(Errc::exponent_error, at, "exponent " + digits + " is too large");
    return static_cast<std::size_t>(std::stoul(digits));
  }

  Expr parse_atom() {
    skip_space();
    std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      Expr e;
      e.kind = Expr::Kind::number;
      e.literal = std::string(src_.substr(at, pos_ - at));
      e.position = at;
      return e;
    }
    if (c == 'x' || c == 'y' || c == 's' || c == 't') {
      ++pos_;
      if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
        fail("unknown identifier starting with '" + std::string(1, c) + "'");
      Expr e;
      e.kind = Expr::Kind::variable;
      e.variable = c;
      e.position = at;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// Commutative polynomials in s, t, y used by the bivariate evaluator.
using CommPoly = std::map<BivarExponent, Poly>;

CommPoly comm_constant(const Poly& c) {
  CommPoly out;
  if (!c.is_zero()) out.emplace(BivarExponent{0, 0}, c);
  return out;
}

void comm_add(CommPoly& acc, const CommPoly& g, bool subtract) {
  for (const auto& [e, c] : g) {
    auto [it, inserted] = acc.try_emplace(e, c.field());
    if (subtract)
      it->second -= c;
    else
      it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

CommPoly comm_mul(const CommPoly& f, const CommPoly& g) {
  CommPoly out;
  for (const auto& [ef, cf] : f)
    for (const auto& [eg, cg] : g) comm_add(out, CommPoly{{{ef.s + eg.s, ef.t + eg.t}, cf * cg}}, false);
  return out;
}

CommPoly eval_comm(const Expr& e, FieldSpec field, bool allow_st) {
  switch (e.kind) {
    case Expr::Kind::number:
      return comm_constant(Poly(Scalar(field, mpz_class(e.literal))));
    case Expr::Kind::variable: {
      const Scalar one = Scalar::one(field);
      if (e.variable == 'y') return comm_constant(Poly::variable(field));
      if (allow_st && e.variable == 's') return CommPoly{{{1, 0}, Poly(one)}};
      if (allow_st && e.variable == 't') return CommPoly{{{0, 1}, Poly(one)}};
      throw SyntaxError(Errc::syntax_error, e.position,
                        std::string("variable '") + e.variable + "' is not allowed here");
    }
    case Expr::Kind::negate: {
      CommPoly out;
      comm_add(out, eval_comm(e.children[0], field, allow_st), true);
      return out;
    }
    case Expr::Kind::add:
    case Expr::Kind::sub: {
      CommPoly out = eval_comm(e.children[0], field, allow_st);
      comm_add(out, eval_comm(e.children[1], field, allow_st), e.kind == Expr::Kind::sub);
      return out;
    }
    case Expr::Kind::mul:
      return comm_mul(eval_comm(e.children[0], field, allow_st), eval_comm(e.children[1], field, allow_st));
    case Expr::Kind::div: {
      CommPoly den = eval_comm(e.children[1], field, allow_st);
      if (den.empty()) throw Error(Errc::division_by_zero, "division by zero");
      auto it = den.find({0, 0});
      if (den.size() != 1 || it == den.end() || !it->second.is_constant())
        throw Error(Errc::not_invertible, "only division by nonzero scalars is allowed here");
      CommPoly out = eval_comm(e.children[0], field, allow_st);
      Scalar inv = it->second.leading_coeff().inv();
      for (auto& [k, c] : out) c *= inv;
      return out;
    }
    case Expr::Kind::power: {
      CommPoly base = eval_comm(e.children[0], field, allow_st);
      CommPoly out = comm_constant(Poly::one(field));
      for (std::size_t i = 0; i < e.exponent; ++i) out = comm_mul(out, base);
      return out;
    }
  }
  throw Error(Errc::invalid_argument, "malformed expression tree");
}

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

OreElem eval_expr(const Expr& e, const AlgebraPtr& algebra) {
  const FieldSpec field = algebra->field();
  switch (e.kind) {
    case Expr::Kind::number:
      return OreElem::monomial(algebra, RatFunc(Poly(Scalar(field, mpz_class(e.literal)))));
    case Expr::Kind::variable:
      if (e.variable == 'x') return OreElem::x(algebra);
      if (e.variable == 'y') return OreElem::y(algebra);
      throw SyntaxError(Errc::syntax_error, e.position,
                        std::string("variable '") + e.variable + "' is only allowed in bivariate polynomials");
    case Expr::Kind::negate:
      return -eval_expr(e.children[0], algebra);
    case Expr::Kind::add:
      return eval_expr(e.children[0], algebra) + eval_expr(e.children[1], algebra);
    case Expr::Kind::sub:
      return eval_expr(e.children[0], algebra) - eval_expr(e.children[1], algebra);
    case Expr::Kind::mul:
      return eval_expr(e.children[0], algebra) * eval_expr(e.children[1], algebra);
    case Expr::Kind::div: {
      OreElem lhs = eval_expr(e.children[0], algebra);
      OreElem rhs = eval_expr(e.children[1], algebra);
      if (rhs.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
      const RatFunc& r = rhs.leading();
      if (rhs.degree() > Degree(0) ||
          (algebra->coeff_ring() == CoeffRing::polynomials && !r.num().is_constant()))
        throw Error(Errc::not_invertible, rhs.to_string() + " is not a unit of the coefficient ring");
      return lhs * OreElem::monomial(algebra, r.inv());
    }
    case Expr::Kind::power:
      return ore_pow(eval_expr(e.children[0], algebra), e.exponent);
  }
  throw Error(Errc::invalid_argument, "malformed expression tree");
}

OreElem eval_expr(std::string_view src, const AlgebraPtr& algebra) { return eval_expr(parse_expr(src), algebra); }

BivarPoly eval_bivar_expr(const Expr& e, FieldSpec field) {
  CommPoly terms = eval_comm(e, field, true);
  bool has_y = false;
  for (const auto& [k, c] : terms) has_y = has_y || !c.is_constant();
  BivarPoly out(field, has_y ? CoeffMode::poly_coeffs : CoeffMode::scalars);
  for (const auto& [k, c] : terms) out.add_term(k, c);
  return out;
}

BivarPoly eval_bivar_expr(std::string_view src, FieldSpec field) {
  return eval_bivar_expr(parse_expr(src), field);
}

Poly eval_poly_expr(std::string_view src, FieldSpec field) {
  CommPoly terms = eval_comm(parse_expr(src), field, false);
  return terms.empty() ? Poly(field) : terms.begin()->second;
}

}  // namespace orebc
