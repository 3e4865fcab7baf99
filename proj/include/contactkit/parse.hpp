#pragma once

#include "contactkit/exterior.hpp"

#include <memory>
#include <string_view>
#include <vector>

namespace contactkit::cli {

/// Expression tree for the surface syntax. Pow exponents are literal
/// non-negative integers; variables are resolved to coordinate indices at
/// parse time against the session dimension n.
struct ExprAst
{
	enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow };
	Kind kind = Kind::Constant;
	Rat constant{0};
	int var = -1;
	unsigned exponent = 0;
	std::vector<ExprAst> children;
};

/// Parses one expression in variables x1..xn, y1..yn, z ("x", "y" accepted
/// when n = 1). Throws SyntaxError (with 1-based offset) or
/// UnknownVariable.
ExprAst parse_expr(std::string_view src, int n);

/// Lowers an AST to a rational function; ZeroDenominator when a literal
/// denominator lowers to zero.
RatFn lower(const ExprAst &ast, int n);

RatFn parse_ratfn(std::string_view src, int n);

/// Bracketed field literal [e_1, ..., e_{2n+1}] in coordinate-frame order.
VectorField parse_field(std::string_view src, int n);

/// Comma-separated list of exactly `count` expressions; surrounding
/// brackets optional.
std::vector<RatFn> parse_expr_list(std::string_view src, int n, int count);

} // namespace contactkit::cli
