#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>

#include "minksurf/errors.hpp"

namespace minksurf::expr {

using Complex = std::complex<double>;

class ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Immutable expression tree in one complex variable `w`.
///
/// Every representable function is holomorphic on its domain of definition:
/// the node set has no conjugation, modulus, or real/imaginary projection.
/// Trees are shared freely across threads; evaluation is pure.
class ExprNode {
 public:
  enum class Kind {
    Var,     // w
    Const,   // complex literal
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowInt,  // integer exponent only
    Sin,
    Cos,
    Exp,
    Sinh,
    Cosh,
  };

  Kind kind() const { return kind_; }
  Complex value() const { return value_; }     // Const only
  int exponent() const { return exponent_; }   // PowInt only
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }  // binary nodes only

  // Smart constructors. Constants fold eagerly; the only other rewrites are
  // the value-preserving ones (x+0, x*1, 0*x, x^1, --x). A Div with a
  // constant zero denominator is left intact so evaluation reports the
  // singularity.
  static ExprPtr var();
  static ExprPtr constant(Complex c);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr pow_int(ExprPtr base, int n);
  static ExprPtr apply(Kind fn, ExprPtr arg);  // Sin, Cos, Exp, Sinh, Cosh

 private:
  ExprNode(Kind k, Complex v, int n, ExprPtr a, ExprPtr b)
      : kind_(k), value_(v), exponent_(n), lhs_(std::move(a)), rhs_(std::move(b)) {}

  Kind kind_;
  Complex value_{};
  int exponent_ = 0;
  ExprPtr lhs_, rhs_;
};

/// Evaluate at w. Throws EvalSingularity on an exactly-zero denominator
/// (Div, or a negative integer power of zero).
Complex eval(const ExprNode& f, Complex w);
inline Complex eval(const ExprPtr& f, Complex w) { return eval(*f, w); }

/// Exact symbolic derivative d/dw.
ExprPtr differentiate(const ExprNode& f);
inline ExprPtr differentiate(const ExprPtr& f) { return differentiate(*f); }

/// Parse expression source. Grammar (documented in the README):
/// complex literals (`1`, `i`, `2.5*i`, `3+4i`), `w`, `+ - * / ^` with
/// integer exponents, sin/cos/exp/sinh/cosh, parentheses. Whitespace is
/// ignored. Throws SyntaxError (with byte offset) or DisallowedFunction.
ExprPtr parse(std::string_view source);

/// Render to source that reparses to a value-identical tree.
std::string to_string(const ExprNode& f);
inline std::string to_string(const ExprPtr& f) { return to_string(*f); }

/// A holomorphic function bundled with its symbolic derivative,
/// differentiated once at construction.
struct HolomorphicFn {
  ExprPtr expr;
  ExprPtr deriv;

  static HolomorphicFn from_expr(ExprPtr e) {
    auto d = differentiate(e);
    return HolomorphicFn{std::move(e), std::move(d)};
  }
  static HolomorphicFn from_source(std::string_view src) { return from_expr(parse(src)); }

  Complex operator()(Complex w) const { return eval(*expr, w); }
  Complex derivative(Complex w) const { return eval(*deriv, w); }
};

}  // namespace minksurf::expr
