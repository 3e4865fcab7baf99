#include "contactkit/parse.hpp"

#include <cctype>

namespace contactkit::cli {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen,
                 RParen, LBracket, RBracket, Comma, End };

struct Token
{
	Tok kind;
	std::string text;
	std::size_t offset; // 1-based
};

class Lexer {
  public:
	explicit Lexer(std::string_view src) : src_(src) { advance(); }

	const Token &peek() const { return current_; }
	Token take()
	{
		Token t = current_;
		advance();
		return t;
	}

  private:
	void advance()
	{
		while (pos_ < src_.size() &&
		       std::isspace(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		current_.offset = pos_ + 1;
		if (pos_ >= src_.size()) {
			current_ = {Tok::End, "", pos_ + 1};
			return;
		}
		char c = src_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < src_.size() &&
			       std::isdigit(static_cast<unsigned char>(src_[pos_])))
				++pos_;
			current_ = {Tok::Number,
			            std::string(src_.substr(start, pos_ - start)),
			            start + 1};
			return;
		}
		if (std::isalpha(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < src_.size() &&
			       std::isalnum(static_cast<unsigned char>(src_[pos_])))
				++pos_;
			current_ = {Tok::Ident,
			            std::string(src_.substr(start, pos_ - start)),
			            start + 1};
			return;
		}
		Tok kind;
		switch (c) {
		case '+': kind = Tok::Plus; break;
		case '-': kind = Tok::Minus; break;
		case '*': kind = Tok::Star; break;
		case '/': kind = Tok::Slash; break;
		case '^': kind = Tok::Caret; break;
		case '(': kind = Tok::LParen; break;
		case ')': kind = Tok::RParen; break;
		case '[': kind = Tok::LBracket; break;
		case ']': kind = Tok::RBracket; break;
		case ',': kind = Tok::Comma; break;
		default:
			throw SyntaxError(pos_ + 1, std::string("unexpected character '") +
			                                c + "'");
		}
		current_ = {kind, std::string(1, c), pos_ + 1};
		++pos_;
	}

	std::string_view src_;
	std::size_t pos_ = 0;
	Token current_{Tok::End, "", 1};
};

int resolve_variable(const Token &tok, int n)
{
	const std::string &name = tok.text;
	if (name == "z")
		return 2 * n;
	if (n == 1) {
		if (name == "x")
			return 0;
		if (name == "y")
			return 1;
	}
	if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
		bool digits = true;
		for (std::size_t i = 1; i < name.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(name[i])))
				digits = false;
		if (digits && name[1] != '0') {
			long k = std::stol(name.substr(1));
			if (k >= 1 && k <= n)
				return name[0] == 'x' ? static_cast<int>(k - 1)
				                      : static_cast<int>(n + k - 1);
		}
	}
	throw UnknownVariable(tok.offset, name);
}

class Parser {
  public:
	Parser(std::string_view src, int n) : lex_(src), n_(n) {}

	ExprAst parse_full()
	{
		ExprAst e = parse_sum();
		expect_end();
		return e;
	}

	std::vector<ExprAst> parse_list(bool bracketed, int count)
	{
		std::vector<ExprAst> items;
		if (bracketed)
			expect(Tok::LBracket, "'['");
		items.push_back(parse_sum());
		while (lex_.peek().kind == Tok::Comma) {
			lex_.take();
			items.push_back(parse_sum());
		}
		if (bracketed)
			expect(Tok::RBracket, "']'");
		expect_end();
		if (count >= 0 && static_cast<int>(items.size()) != count)
			throw SyntaxError(lex_.peek().offset,
			                  "expected " + std::to_string(count) +
			                      " comma-separated expressions, got " +
			                      std::to_string(items.size()));
		return items;
	}

	bool starts_with_bracket() { return lex_.peek().kind == Tok::LBracket; }

  private:
	ExprAst parse_sum()
	{
		ExprAst lhs = parse_product();
		for (;;) {
			Tok k = lex_.peek().kind;
			if (k != Tok::Plus && k != Tok::Minus)
				return lhs;
			lex_.take();
			ExprAst node;
			node.kind = k == Tok::Plus ? ExprAst::Kind::Add
			                           : ExprAst::Kind::Sub;
			node.children.push_back(std::move(lhs));
			node.children.push_back(parse_product());
			lhs = std::move(node);
		}
	}

	ExprAst parse_product()
	{
		ExprAst lhs = parse_unary();
		for (;;) {
			Tok k = lex_.peek().kind;
			if (k != Tok::Star && k != Tok::Slash)
				return lhs;
			lex_.take();
			ExprAst node;
			node.kind = k == Tok::Star ? ExprAst::Kind::Mul
			                           : ExprAst::Kind::Div;
			node.children.push_back(std::move(lhs));
			node.children.push_back(parse_unary());
			lhs = std::move(node);
		}
	}

	ExprAst parse_unary()
	{
		if (lex_.peek().kind == Tok::Minus) {
			lex_.take();
			ExprAst node;
			node.kind = ExprAst::Kind::Neg;
			node.children.push_back(parse_unary());
			return node;
		}
		return parse_power();
	}

	ExprAst parse_power()
	{
		ExprAst base = parse_atom();
		while (lex_.peek().kind == Tok::Caret) {
			lex_.take();
			Token e = lex_.peek();
			if (e.kind != Tok::Number)
				throw SyntaxError(
				    e.offset,
				    "exponent must be a non-negative integer literal");
			lex_.take();
			ExprAst node;
			node.kind = ExprAst::Kind::Pow;
			node.exponent = static_cast<unsigned>(std::stoul(e.text));
			node.children.push_back(std::move(base));
			base = std::move(node);
		}
		return base;
	}

	ExprAst parse_atom()
	{
		Token t = lex_.peek();
		switch (t.kind) {
		case Tok::Number: {
			lex_.take();
			ExprAst node;
			node.kind = ExprAst::Kind::Constant;
			node.constant = Rat::parse(t.text);
			return node;
		}
		case Tok::Ident: {
			lex_.take();
			ExprAst node;
			node.kind = ExprAst::Kind::Variable;
			node.var = resolve_variable(t, n_);
			return node;
		}
		case Tok::LParen: {
			lex_.take();
			ExprAst inner = parse_sum();
			expect(Tok::RParen, "')'");
			return inner;
		}
		default:
			throw SyntaxError(t.offset, "expected a number, variable or '('");
		}
	}

	void expect(Tok kind, const char *what)
	{
		Token t = lex_.peek();
		if (t.kind != kind)
			throw SyntaxError(t.offset, std::string("expected ") + what);
		lex_.take();
	}

	void expect_end()
	{
		Token t = lex_.peek();
		if (t.kind != Tok::End)
			throw SyntaxError(t.offset, "unexpected trailing input");
	}

	Lexer lex_;
	int n_;
};

} // namespace

ExprAst parse_expr(std::string_view src, int n)
{
	return Parser(src, n).parse_full();
}

RatFn lower(const ExprAst &ast, int n)
{
	switch (ast.kind) {
	case ExprAst::Kind::Constant:
		return RatFn::constant(n, ast.constant);
	case ExprAst::Kind::Variable:
		return RatFn::variable(n, ast.var);
	case ExprAst::Kind::Neg:
		return -lower(ast.children[0], n);
	case ExprAst::Kind::Add:
		return lower(ast.children[0], n) + lower(ast.children[1], n);
	case ExprAst::Kind::Sub:
		return lower(ast.children[0], n) - lower(ast.children[1], n);
	case ExprAst::Kind::Mul:
		return lower(ast.children[0], n) * lower(ast.children[1], n);
	case ExprAst::Kind::Div: {
		RatFn den = lower(ast.children[1], n);
		if (den.is_zero())
			throw ZeroDenominator(
			    "denominator expression lowers to the zero polynomial");
		return lower(ast.children[0], n) / den;
	}
	case ExprAst::Kind::Pow:
		return lower(ast.children[0], n)
		    .pow(static_cast<int>(ast.exponent));
	}
	throw std::logic_error("unreachable AST kind");
}

RatFn parse_ratfn(std::string_view src, int n)
{
	return lower(parse_expr(src, n), n);
}

VectorField parse_field(std::string_view src, int n)
{
	Parser p(src, n);
	auto items = p.parse_list(true, var_count(n));
	std::vector<RatFn> coeffs;
	coeffs.reserve(items.size());
	for (const auto &ast : items)
		coeffs.push_back(lower(ast, n));
	return VectorField(n, std::move(coeffs));
}

std::vector<RatFn> parse_expr_list(std::string_view src, int n, int count)
{
	Parser p(src, n);
	auto items = p.parse_list(p.starts_with_bracket(), count);
	std::vector<RatFn> out;
	out.reserve(items.size());
	for (const auto &ast : items)
		out.push_back(lower(ast, n));
	return out;
}

} // namespace contactkit::cli
