#include "contactkit/print.hpp"

#include <sstream>

namespace contactkit::cli {

std::string variable_name(int n, int v)
{
	if (v < n)
		return "x" + std::to_string(v + 1);
	if (v < 2 * n)
		return "y" + std::to_string(v - n + 1);
	return "z";
}

std::string frame_name(int n, int v) { return "d/d" + variable_name(n, v); }

std::string coframe_name(int n, int v) { return "d" + variable_name(n, v); }

std::string print_canonical(const Rat &r) { return r.str(); }

namespace {

std::string monomial_str(int n, const Monomial &m)
{
	std::string s;
	for (int v = 0; v < var_count(n); ++v) {
		unsigned e = m.exp(v);
		if (e == 0)
			continue;
		if (!s.empty())
			s += "*";
		s += variable_name(n, v);
		if (e > 1)
			s += "^" + std::to_string(e);
	}
	return s;
}

// |c| assumed positive here; the sign is the caller's concern.
std::string term_str(int n, const Rat &c, const Monomial &m)
{
	if (m.is_unit())
		return c.str();
	if (c.is_one())
		return monomial_str(n, m);
	return c.str() + "*" + monomial_str(n, m);
}

int poly_sign(const Poly &p) { return p.leading_coeff().sign(); }

std::string poly_str(const Poly &p)
{
	if (p.is_zero())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
		const auto &[m, c] = *it;
		if (first) {
			if (c.sign() < 0)
				out << "-";
			out << term_str(p.dim(), c.abs(), m);
			first = false;
		} else {
			out << (c.sign() < 0 ? " - " : " + ");
			out << term_str(p.dim(), c.abs(), m);
		}
	}
	return out.str();
}

bool den_needs_parens(const Poly &den)
{
	if (den.terms().size() != 1)
		return true;
	const auto &[m, c] = *den.terms().begin();
	if (!c.is_one())
		return true;
	int vars = 0;
	for (int v = 0; v < var_count(den.dim()); ++v)
		if (m.exp(v) > 0)
			++vars;
	return vars != 1;
}

std::string ratfn_str(const RatFn &f)
{
	if (f.is_poly() || f.is_zero())
		return poly_str(f.num());
	std::string num = poly_str(f.num());
	if (f.num().terms().size() > 1)
		num = "(" + num + ")";
	std::string den = poly_str(f.den());
	if (den_needs_parens(f.den()))
		den = "(" + den + ")";
	return num + "/" + den;
}

// Sign used to decide " + " vs " - " when joining vector/form components.
int ratfn_sign(const RatFn &f) { return poly_sign(f.num()); }

// Coefficient in front of a basis symbol; parenthesized when it would
// otherwise read as a sum.
std::string coeff_str(const RatFn &f)
{
	std::string s = ratfn_str(f);
	if (f.is_poly() && f.num().terms().size() > 1)
		return "(" + s + ")";
	return s;
}

template <typename Piece>
std::string join_signed(const std::vector<std::pair<RatFn, Piece>> &parts)
{
	std::ostringstream out;
	bool first = true;
	for (const auto &[c, basis] : parts) {
		if (first) {
			out << coeff_str(c) << " " << basis;
			first = false;
			continue;
		}
		if (ratfn_sign(c) < 0)
			out << " - " << coeff_str(-c);
		else
			out << " + " << coeff_str(c);
		out << " " << basis;
	}
	return out.str();
}

} // namespace

std::string print_canonical(const Poly &p) { return poly_str(p); }

std::string print_canonical(const RatFn &f) { return ratfn_str(f); }

std::string print_canonical(const VectorField &x)
{
	std::vector<std::pair<RatFn, std::string>> parts;
	for (int v = 0; v < var_count(x.dim()); ++v)
		if (!x.coeff(v).is_zero())
			parts.emplace_back(x.coeff(v), frame_name(x.dim(), v));
	if (parts.empty())
		return "0";
	return join_signed(parts);
}

std::string print_canonical(const DiffForm &w)
{
	if (w.degree() == 0)
		return ratfn_str(w.scalar());
	if (w.is_zero())
		return "0";
	std::vector<std::pair<RatFn, std::string>> parts;
	for (const auto &[idx, f] : w.comps()) {
		std::string basis;
		for (int i : idx) {
			if (!basis.empty())
				basis += "^";
			basis += coframe_name(w.dim(), i);
		}
		parts.emplace_back(f, basis);
	}
	return join_signed(parts);
}

std::string print_canonical(const Density &d)
{
	return coeff_str(d.coeff()) + " * Omega^" + d.weight().str();
}

} // namespace contactkit::cli
