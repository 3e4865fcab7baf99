#include "contactkit/polynomial.hpp"

namespace contactkit {

void Poly::add_term(const Monomial &m, const Rat &c)
{
	if (static_cast<int>(m.exps().size()) != nvars())
		throw DimensionMismatch("monomial dimension mismatch");
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Poly Poly::operator-() const
{
	Poly r(n_);
	for (const auto &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

Poly Poly::operator+(const Poly &o) const
{
	check_dim(o);
	Poly r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, c);
	return r;
}

Poly Poly::operator-(const Poly &o) const
{
	check_dim(o);
	Poly r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, -c);
	return r;
}

Poly Poly::operator*(const Poly &o) const
{
	check_dim(o);
	Poly r(n_);
	for (const auto &[ma, ca] : terms_)
		for (const auto &[mb, cb] : o.terms_)
			r.add_term(ma.times(mb), ca * cb);
	return r;
}

Poly Poly::scaled(const Rat &c) const
{
	Poly r(n_);
	if (c.is_zero())
		return r;
	for (const auto &[m, cm] : terms_)
		r.terms_.emplace(m, cm * c);
	return r;
}

Poly Poly::pow(unsigned k) const
{
	Poly r = Poly::constant(n_, Rat(1));
	for (unsigned i = 0; i < k; ++i)
		r = r * *this;
	return r;
}

Poly Poly::partial(int v) const
{
	if (v < 0 || v >= nvars())
		throw IndexOutOfRange("partial derivative variable index");
	Poly r(n_);
	for (const auto &[m, c] : terms_) {
		unsigned e = m.exp(v);
		if (e == 0)
			continue;
		std::vector<unsigned> exps = m.exps();
		exps[v] = e - 1;
		r.add_term(Monomial(n_, std::move(exps)),
		           c * Rat(static_cast<long>(e)));
	}
	return r;
}

std::optional<Poly> divide_exact(const Poly &num, const Poly &den)
{
	if (den.is_zero())
		return std::nullopt;
	if (den.is_constant())
		return num.scaled(den.constant_value().inverse());
	Poly quotient(num.dim());
	Poly rem = num;
	const Monomial &lead_m = den.terms().rbegin()->first;
	const Rat lead_c = den.terms().rbegin()->second;
	while (!rem.is_zero()) {
		const Monomial &rm = rem.terms().rbegin()->first;
		if (!lead_m.divides(rm))
			return std::nullopt;
		Monomial t = lead_m.quotient_of(rm);
		Rat c = rem.terms().rbegin()->second / lead_c;
		quotient.add_term(t, c);
		// rem -= (c*t) * den, done termwise to avoid a temporary product poly
		for (const auto &[m, cm] : den.terms())
			rem.add_term(t.times(m), -(c * cm));
	}
	return quotient;
}

} // namespace contactkit
