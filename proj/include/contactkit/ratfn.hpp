#pragma once

#include "contactkit/polynomial.hpp"

namespace contactkit {

/// Rational function num/den over Poly. Stored unreduced — equality is by
/// cross-multiplication — but kept in a deterministic shape: den has
/// primitive integer coefficients with positive leading coefficient (so a
/// constant den is exactly 1), shared monomial factors are cancelled, and
/// an exact polynomial division of num by den is applied when it succeeds.
class RatFn {
  public:
	explicit RatFn(int n)
	    : num_(n), den_(Poly::constant(n, Rat(1)))
	{}
	RatFn(Poly num, Poly den);

	static RatFn constant(int n, const Rat &c)
	{
		return RatFn(Poly::constant(n, c));
	}
	static RatFn variable(int n, int var)
	{
		return RatFn(Poly::variable(n, var));
	}
	explicit RatFn(Poly p) : num_(std::move(p)), den_(num_.dim())
	{
		den_.add_term(Monomial(num_.dim()), Rat(1));
	}

	int dim() const { return num_.dim(); }
	const Poly &num() const { return num_; }
	const Poly &den() const { return den_; }

	bool is_zero() const { return num_.is_zero(); }
	/// True when den = 1, i.e. the value lies in the polynomial ring.
	bool is_poly() const
	{
		return den_.is_constant() && den_.constant_value().is_one();
	}

	RatFn operator-() const;
	RatFn operator+(const RatFn &o) const;
	RatFn operator-(const RatFn &o) const;
	RatFn operator*(const RatFn &o) const;
	RatFn operator/(const RatFn &o) const;

	RatFn scaled(const Rat &c) const { return *this * constant(dim(), c); }

	/// num'den - num den' over den^2.
	RatFn partial(int v) const;

	/// Integer power; negative exponents invert (DivisionByZero on zero).
	RatFn pow(int k) const;

	/// Structural equality of the stored representation.
	bool same_representation(const RatFn &o) const
	{
		return num_ == o.num_ && den_ == o.den_;
	}

  private:
	void check_dim(const RatFn &o) const
	{
		if (dim() != o.dim())
			throw DimensionMismatch("rational function dimension mismatch");
	}
	void normalize();
	Poly num_;
	Poly den_;
};

/// a = b iff a.num*b.den - b.num*a.den = 0; no gcd needed.
bool ratfn_eq(const RatFn &a, const RatFn &b);

inline bool operator==(const RatFn &a, const RatFn &b) { return ratfn_eq(a, b); }
inline bool operator!=(const RatFn &a, const RatFn &b) { return !ratfn_eq(a, b); }

} // namespace contactkit
