#include "contactkit/ratfn.hpp"

namespace contactkit {

namespace {

// Positive rational r with r*p integer-coefficient and primitive.
Rat primitive_scale(const Poly &p)
{
	mpz_class lcm_den(1), gcd_num(0);
	for (const auto &[m, c] : p.terms())
		mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
		        c.den().get_mpz_t());
	for (const auto &[m, c] : p.terms()) {
		mpz_class scaled = c.num() * (lcm_den / c.den());
		mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(),
		        scaled.get_mpz_t());
	}
	if (gcd_num == 0)
		return Rat(1);
	return Rat(mpq_class(lcm_den, gcd_num));
}

// Componentwise minimum of all exponent vectors of both polynomials.
Monomial common_monomial(const Poly &a, const Poly &b)
{
	int nv = a.nvars();
	std::vector<unsigned> lo(nv, 0);
	bool first = true;
	auto fold = [&](const Poly &p) {
		for (const auto &[m, c] : p.terms()) {
			for (int v = 0; v < nv; ++v)
				lo[v] = first ? m.exp(v) : std::min(lo[v], m.exp(v));
			first = false;
		}
	};
	fold(a);
	fold(b);
	return Monomial(a.dim(), std::move(lo));
}

Poly shift_down(const Poly &p, const Monomial &m)
{
	Poly r(p.dim());
	for (const auto &[mm, c] : p.terms())
		r.add_term(m.quotient_of(mm), c);
	return r;
}

} // namespace

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
	if (num_.dim() != den_.dim())
		throw DimensionMismatch("rational function dimension mismatch");
	if (den_.is_zero())
		throw DivisionByZero("rational function with zero denominator");
	normalize();
}

void RatFn::normalize()
{
	if (num_.is_zero()) {
		den_ = Poly::constant(dim(), Rat(1));
		return;
	}
	Monomial common = common_monomial(num_, den_);
	if (!common.is_unit()) {
		num_ = shift_down(num_, common);
		den_ = shift_down(den_, common);
	}
	if (!den_.is_constant()) {
		if (auto q = divide_exact(num_, den_)) {
			num_ = std::move(*q);
			den_ = Poly::constant(dim(), Rat(1));
			return;
		}
	}
	Rat scale = primitive_scale(den_);
	if (den_.leading_coeff().sign() < 0)
		scale = -scale;
	if (!scale.is_one()) {
		num_ = num_.scaled(scale);
		den_ = den_.scaled(scale);
	}
}

RatFn RatFn::operator-() const
{
	RatFn r(dim());
	r.num_ = -num_;
	r.den_ = den_;
	return r;
}

RatFn RatFn::operator+(const RatFn &o) const
{
	check_dim(o);
	if (den_ == o.den_)
		return RatFn(num_ + o.num_, den_);
	return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn &o) const
{
	check_dim(o);
	if (den_ == o.den_)
		return RatFn(num_ - o.num_, den_);
	return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn &o) const
{
	check_dim(o);
	return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn &o) const
{
	check_dim(o);
	if (o.is_zero())
		throw DivisionByZero("rational function division by zero");
	return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::partial(int v) const
{
	if (is_poly())
		return RatFn(num_.partial(v));
	return RatFn(num_.partial(v) * den_ - num_ * den_.partial(v),
	             den_ * den_);
}

RatFn RatFn::pow(int k) const
{
	if (k == 0)
		return constant(dim(), Rat(1));
	if (k < 0) {
		if (is_zero())
			throw DivisionByZero("negative power of zero");
		return RatFn(den_.pow(static_cast<unsigned>(-k)),
		             num_.pow(static_cast<unsigned>(-k)));
	}
	return RatFn(num_.pow(static_cast<unsigned>(k)),
	             den_.pow(static_cast<unsigned>(k)));
}

bool ratfn_eq(const RatFn &a, const RatFn &b)
{
	if (a.dim() != b.dim())
		throw DimensionMismatch("rational function dimension mismatch");
	if (a.same_representation(b))
		return true;
	return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

} // namespace contactkit
