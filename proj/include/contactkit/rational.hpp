#pragma once

#include "contactkit/errors.hpp"

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace contactkit {

/// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Backed by GMP.
class Rat {
  public:
	Rat() : q_(0) {}
	Rat(long value) : q_(value) {}
	Rat(long num, long den)
	{
		if (den == 0)
			throw DivisionByZero("rational with zero denominator");
		q_ = mpq_class(mpz_class(num), mpz_class(den));
		q_.canonicalize();
	}
	explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

	mpz_class num() const { return q_.get_num(); }
	mpz_class den() const { return q_.get_den(); }

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_one() const { return q_ == 1; }
	int sign() const { return sgn(q_); }

	Rat operator-() const { return Rat(mpq_class(-q_)); }
	Rat operator+(const Rat &o) const { return Rat(mpq_class(q_ + o.q_)); }
	Rat operator-(const Rat &o) const { return Rat(mpq_class(q_ - o.q_)); }
	Rat operator*(const Rat &o) const { return Rat(mpq_class(q_ * o.q_)); }
	Rat operator/(const Rat &o) const
	{
		if (o.is_zero())
			throw DivisionByZero("rational division by zero");
		return Rat(mpq_class(q_ / o.q_));
	}
	Rat &operator+=(const Rat &o)
	{
		q_ += o.q_;
		return *this;
	}
	Rat &operator-=(const Rat &o)
	{
		q_ -= o.q_;
		return *this;
	}
	Rat &operator*=(const Rat &o)
	{
		q_ *= o.q_;
		return *this;
	}

	Rat abs() const { return Rat(mpq_class(::abs(q_))); }
	Rat inverse() const
	{
		if (is_zero())
			throw DivisionByZero("inverse of zero");
		return Rat(mpq_class(1 / q_));
	}

	bool operator==(const Rat &o) const { return q_ == o.q_; }
	bool operator!=(const Rat &o) const { return q_ != o.q_; }
	bool operator<(const Rat &o) const { return q_ < o.q_; }

	/// "p" when den = 1, else "p/q".
	std::string str() const
	{
		if (q_.get_den() == 1)
			return q_.get_num().get_str();
		return q_.get_str();
	}

	/// Parses "p" or "p/q" with optional leading sign.
	static Rat parse(std::string_view text);

	const mpq_class &raw() const { return q_; }

  private:
	mpq_class q_;
};

inline Rat Rat::parse(std::string_view text)
{
	std::string s(text);
	if (s.empty())
		throw SyntaxError(1, "empty rational literal");
	for (std::size_t i = 0; i < s.size(); ++i) {
		char c = s[i];
		if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
		      c == '-' || c == '+'))
			throw SyntaxError(i + 1, "invalid character in rational literal");
	}
	try {
		mpq_class q(s);
		if (q.get_den() == 0)
			throw DivisionByZero("rational with zero denominator");
		q.canonicalize();
		return Rat(std::move(q));
	} catch (const std::invalid_argument &) {
		throw SyntaxError(1, "malformed rational literal '" + s + "'");
	}
}

} // namespace contactkit
