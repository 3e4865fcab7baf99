#pragma once

#include "contactkit/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace contactkit {

// Variable indexing for a model of dimension n (2n+1 coordinates):
// 0..n-1 are x_1..x_n, n..2n-1 are y_1..y_n, 2n is z.
inline int var_count(int n) { return 2 * n + 1; }

/// Exponent vector of length 2n+1.
class Monomial {
  public:
	explicit Monomial(int n) : n_(n), exps_(var_count(n), 0) {}
	Monomial(int n, std::vector<unsigned> exps) : n_(n), exps_(std::move(exps))
	{
		if (static_cast<int>(exps_.size()) != var_count(n_))
			throw DimensionMismatch("monomial exponent count");
	}
	static Monomial variable(int n, int var)
	{
		Monomial m(n);
		if (var < 0 || var >= var_count(n))
			throw IndexOutOfRange("variable index");
		m.exps_[var] = 1;
		return m;
	}

	int dim() const { return n_; }
	int nvars() const { return var_count(n_); }
	unsigned exp(int v) const { return exps_[v]; }
	const std::vector<unsigned> &exps() const { return exps_; }

	int total_degree() const
	{
		int d = 0;
		for (unsigned e : exps_)
			d += static_cast<int>(e);
		return d;
	}

	Monomial times(const Monomial &o) const
	{
		Monomial r(n_);
		for (int v = 0; v < nvars(); ++v)
			r.exps_[v] = exps_[v] + o.exps_[v];
		return r;
	}

	bool divides(const Monomial &o) const
	{
		for (int v = 0; v < nvars(); ++v)
			if (exps_[v] > o.exps_[v])
				return false;
		return true;
	}

	/// o / this, assuming this divides o.
	Monomial quotient_of(const Monomial &o) const
	{
		Monomial r(n_);
		for (int v = 0; v < nvars(); ++v)
			r.exps_[v] = o.exps_[v] - exps_[v];
		return r;
	}

	bool is_unit() const { return total_degree() == 0; }
	bool operator==(const Monomial &o) const { return exps_ == o.exps_; }

  private:
	int n_;
	std::vector<unsigned> exps_;
};

// Graded lexicographic order; reverse iteration of a map under this order
// yields the canonical print order (degree descending, x1-heavy first).
struct GrlexLess
{
	bool operator()(const Monomial &a, const Monomial &b) const
	{
		int da = a.total_degree(), db = b.total_degree();
		if (da != db)
			return da < db;
		return a.exps() < b.exps();
	}
};

/// Sparse multivariate polynomial over Rat, canonical: no zero terms stored.
class Poly {
  public:
	using TermMap = std::map<Monomial, Rat, GrlexLess>;

	explicit Poly(int n) : n_(n) {}
	static Poly constant(int n, const Rat &c)
	{
		Poly p(n);
		p.add_term(Monomial(n), c);
		return p;
	}
	static Poly variable(int n, int var)
	{
		Poly p(n);
		p.add_term(Monomial::variable(n, var), Rat(1));
		return p;
	}

	int dim() const { return n_; }
	int nvars() const { return var_count(n_); }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	bool is_constant() const
	{
		return terms_.empty() ||
		       (terms_.size() == 1 && terms_.begin()->first.is_unit());
	}
	/// Constant term (zero when absent).
	Rat constant_value() const
	{
		auto it = terms_.find(Monomial(n_));
		return it == terms_.end() ? Rat(0) : it->second;
	}

	/// -1 for the zero polynomial (stands in for degree -inf).
	int total_degree() const
	{
		return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
	}

	/// Coefficient of the grlex-largest monomial; zero for the zero poly.
	Rat leading_coeff() const
	{
		return terms_.empty() ? Rat(0) : terms_.rbegin()->second;
	}

	void add_term(const Monomial &m, const Rat &c);

	Poly operator-() const;
	Poly operator+(const Poly &o) const;
	Poly operator-(const Poly &o) const;
	Poly operator*(const Poly &o) const;
	Poly scaled(const Rat &c) const;
	Poly pow(unsigned k) const;

	/// Exact partial derivative with respect to variable v in 0..2n.
	Poly partial(int v) const;

	bool operator==(const Poly &o) const
	{
		return n_ == o.n_ && terms_ == o.terms_;
	}
	bool operator!=(const Poly &o) const { return !(*this == o); }

  private:
	void check_dim(const Poly &o) const
	{
		if (n_ != o.n_)
			throw DimensionMismatch("polynomial dimension mismatch");
	}
	int n_;
	TermMap terms_;
};

/// Quotient of num by den when the division is exact in the polynomial
/// ring, nullopt otherwise. Plain long division by the grlex leading term;
/// not a gcd.
std::optional<Poly> divide_exact(const Poly &num, const Poly &den);

} // namespace contactkit
