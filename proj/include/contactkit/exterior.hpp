#pragma once

#include "contactkit/ratfn.hpp"

#include <vector>

namespace contactkit {

/// Vector field as coefficients over the coordinate frame
/// (d/dx_1..d/dx_n, d/dy_1..d/dy_n, d/dz).
class VectorField {
  public:
	explicit VectorField(int n) : n_(n), coeffs_(var_count(n), RatFn(n)) {}
	VectorField(int n, std::vector<RatFn> coeffs)
	    : n_(n), coeffs_(std::move(coeffs))
	{
		if (static_cast<int>(coeffs_.size()) != var_count(n_))
			throw DimensionMismatch("vector field coefficient count");
	}

	int dim() const { return n_; }
	const RatFn &coeff(int v) const { return coeffs_[v]; }
	const std::vector<RatFn> &coeffs() const { return coeffs_; }
	void set_coeff(int v, RatFn f) { coeffs_[v] = std::move(f); }

	bool is_zero() const
	{
		for (const auto &c : coeffs_)
			if (!c.is_zero())
				return false;
		return true;
	}

	VectorField operator+(const VectorField &o) const;
	VectorField operator-(const VectorField &o) const;
	VectorField operator-() const;
	VectorField scaled(const RatFn &f) const;

	/// Directional derivative X(f).
	RatFn apply(const RatFn &f) const;

  private:
	int n_;
	std::vector<RatFn> coeffs_;
};

inline bool operator==(const VectorField &a, const VectorField &b)
{
	return (a - b).is_zero();
}
inline bool operator!=(const VectorField &a, const VectorField &b)
{
	return !(a == b);
}

/// Strictly increasing tuple of coordinate indices in 0..2n.
using IndexTuple = std::vector<int>;

/// Degree-k form stored sparsely: strictly increasing index tuples mapped
/// to RatFn components, zero components never stored.
class DiffForm {
  public:
	DiffForm(int n, int degree);
	static DiffForm function(const RatFn &f);
	/// Basis k-form dx_I with unit coefficient.
	static DiffForm basis(int n, IndexTuple indices);

	int dim() const { return n_; }
	int degree() const { return degree_; }
	const std::map<IndexTuple, RatFn> &comps() const { return comps_; }

	/// Component for an arbitrary (not necessarily sorted) tuple, with the
	/// sorting sign applied; zero for repeated indices or absent tuples.
	RatFn component(IndexTuple indices) const;

	void add_component(IndexTuple indices, const RatFn &f);

	bool is_zero() const { return comps_.empty(); }

	DiffForm operator+(const DiffForm &o) const;
	DiffForm operator-(const DiffForm &o) const;
	DiffForm operator-() const;
	DiffForm scaled(const RatFn &f) const;

	/// Value of a 0-form.
	const RatFn &scalar() const;

  private:
	int n_;
	int degree_;
	std::map<IndexTuple, RatFn> comps_;
	mutable RatFn zero_;
};

inline bool operator==(const DiffForm &a, const DiffForm &b)
{
	return (a - b).is_zero();
}
inline bool operator!=(const DiffForm &a, const DiffForm &b)
{
	return !(a == b);
}

/// Alternating product with the shuffle-sign convention.
DiffForm wedge(const DiffForm &a, const DiffForm &b);

/// Exterior derivative; top-degree input yields the (empty) zero form of
/// one degree higher so generic callers need no special case.
DiffForm ext_d(const DiffForm &w);

/// Interior product i_X w; DegreeError on 0-forms.
DiffForm interior(const VectorField &x, const DiffForm &w);

/// [X,Y]^k = X(Y^k) - Y(X^k).
VectorField lie_bracket(const VectorField &x, const VectorField &y);

/// Cartan formula d i_X + i_X d (i_X df on functions).
DiffForm lie_derivative_form(const VectorField &x, const DiffForm &w);

} // namespace contactkit
