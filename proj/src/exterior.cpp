#include "contactkit/exterior.hpp"

#include <algorithm>

namespace contactkit {

VectorField VectorField::operator+(const VectorField &o) const
{
	if (n_ != o.n_)
		throw DimensionMismatch("vector field dimension mismatch");
	VectorField r(n_);
	for (int v = 0; v < var_count(n_); ++v)
		r.coeffs_[v] = coeffs_[v] + o.coeffs_[v];
	return r;
}

VectorField VectorField::operator-(const VectorField &o) const
{
	if (n_ != o.n_)
		throw DimensionMismatch("vector field dimension mismatch");
	VectorField r(n_);
	for (int v = 0; v < var_count(n_); ++v)
		r.coeffs_[v] = coeffs_[v] - o.coeffs_[v];
	return r;
}

VectorField VectorField::operator-() const
{
	VectorField r(n_);
	for (int v = 0; v < var_count(n_); ++v)
		r.coeffs_[v] = -coeffs_[v];
	return r;
}

VectorField VectorField::scaled(const RatFn &f) const
{
	VectorField r(n_);
	for (int v = 0; v < var_count(n_); ++v)
		r.coeffs_[v] = coeffs_[v] * f;
	return r;
}

RatFn VectorField::apply(const RatFn &f) const
{
	RatFn r(n_);
	for (int v = 0; v < var_count(n_); ++v) {
		if (coeffs_[v].is_zero())
			continue;
		r = r + coeffs_[v] * f.partial(v);
	}
	return r;
}

DiffForm::DiffForm(int n, int degree) : n_(n), degree_(degree), zero_(n)
{
	if (degree_ < 0)
		throw DegreeError("negative form degree");
}

DiffForm DiffForm::function(const RatFn &f)
{
	DiffForm w(f.dim(), 0);
	w.add_component({}, f);
	return w;
}

DiffForm DiffForm::basis(int n, IndexTuple indices)
{
	DiffForm w(n, static_cast<int>(indices.size()));
	w.add_component(std::move(indices), RatFn::constant(n, Rat(1)));
	return w;
}

namespace {

// Sign of sorting `indices` into increasing order; 0 if any repeat.
int sort_sign(IndexTuple &indices)
{
	int sign = 1;
	for (std::size_t i = 1; i < indices.size(); ++i)
		for (std::size_t j = indices.size() - 1; j >= i; --j)
			if (indices[j - 1] > indices[j]) {
				std::swap(indices[j - 1], indices[j]);
				sign = -sign;
			}
	for (std::size_t i = 1; i < indices.size(); ++i)
		if (indices[i - 1] == indices[i])
			return 0;
	return sign;
}

// Merge of two increasing tuples with the shuffle sign; false on overlap.
bool merge_tuples(const IndexTuple &a, const IndexTuple &b, IndexTuple &out,
                  int &sign)
{
	out.clear();
	out.reserve(a.size() + b.size());
	sign = 1;
	std::size_t i = 0, j = 0;
	while (i < a.size() && j < b.size()) {
		if (a[i] == b[j])
			return false;
		if (a[i] < b[j]) {
			out.push_back(a[i++]);
		} else {
			// b[j] jumps over the remaining entries of a
			if ((a.size() - i) % 2 == 1)
				sign = -sign;
			out.push_back(b[j++]);
		}
	}
	while (i < a.size())
		out.push_back(a[i++]);
	while (j < b.size())
		out.push_back(b[j++]);
	return true;
}

} // namespace

RatFn DiffForm::component(IndexTuple indices) const
{
	if (static_cast<int>(indices.size()) != degree_)
		throw DegreeError("component tuple size does not match degree");
	int sign = sort_sign(indices);
	if (sign == 0)
		return RatFn(n_);
	auto it = comps_.find(indices);
	if (it == comps_.end())
		return RatFn(n_);
	return sign < 0 ? -it->second : it->second;
}

void DiffForm::add_component(IndexTuple indices, const RatFn &f)
{
	if (static_cast<int>(indices.size()) != degree_)
		throw DegreeError("component tuple size does not match degree");
	if (f.dim() != n_)
		throw DimensionMismatch("component dimension mismatch");
	for (int idx : indices)
		if (idx < 0 || idx >= var_count(n_))
			throw IndexOutOfRange("form component index");
	int sign = sort_sign(indices);
	if (sign == 0 || f.is_zero())
		return;
	RatFn v = sign < 0 ? -f : f;
	auto [it, inserted] = comps_.emplace(std::move(indices), v);
	if (!inserted) {
		it->second = it->second + v;
		if (it->second.is_zero())
			comps_.erase(it);
	}
}

DiffForm DiffForm::operator+(const DiffForm &o) const
{
	if (n_ != o.n_ || degree_ != o.degree_)
		throw DimensionMismatch("form dimension or degree mismatch");
	DiffForm r = *this;
	for (const auto &[idx, f] : o.comps_)
		r.add_component(idx, f);
	return r;
}

DiffForm DiffForm::operator-(const DiffForm &o) const
{
	if (n_ != o.n_ || degree_ != o.degree_)
		throw DimensionMismatch("form dimension or degree mismatch");
	DiffForm r = *this;
	for (const auto &[idx, f] : o.comps_)
		r.add_component(idx, -f);
	return r;
}

DiffForm DiffForm::operator-() const
{
	DiffForm r(n_, degree_);
	for (const auto &[idx, f] : comps_)
		r.comps_.emplace(idx, -f);
	return r;
}

DiffForm DiffForm::scaled(const RatFn &f) const
{
	DiffForm r(n_, degree_);
	for (const auto &[idx, g] : comps_)
		r.add_component(idx, g * f);
	return r;
}

const RatFn &DiffForm::scalar() const
{
	if (degree_ != 0)
		throw DegreeError("scalar() on a form of positive degree");
	auto it = comps_.find({});
	return it == comps_.end() ? zero_ : it->second;
}

DiffForm wedge(const DiffForm &a, const DiffForm &b)
{
	if (a.dim() != b.dim())
		throw DimensionMismatch("wedge dimension mismatch");
	DiffForm r(a.dim(), a.degree() + b.degree());
	IndexTuple merged;
	int sign;
	for (const auto &[ia, fa] : a.comps())
		for (const auto &[ib, fb] : b.comps()) {
			if (!merge_tuples(ia, ib, merged, sign))
				continue;
			RatFn prod = fa * fb;
			r.add_component(merged, sign < 0 ? -prod : prod);
		}
	return r;
}

DiffForm ext_d(const DiffForm &w)
{
	DiffForm r(w.dim(), w.degree() + 1);
	const int nv = var_count(w.dim());
	for (const auto &[idx, f] : w.comps()) {
		for (int v = 0; v < nv; ++v) {
			RatFn df = f.partial(v);
			if (df.is_zero())
				continue;
			// df/dv dx_v ^ dx_I, dx_v in front
			IndexTuple ext;
			ext.reserve(idx.size() + 1);
			ext.push_back(v);
			ext.insert(ext.end(), idx.begin(), idx.end());
			r.add_component(std::move(ext), df);
		}
	}
	return r;
}

DiffForm interior(const VectorField &x, const DiffForm &w)
{
	if (x.dim() != w.dim())
		throw DimensionMismatch("interior product dimension mismatch");
	if (w.degree() == 0)
		throw DegreeError("interior product of a 0-form");
	DiffForm r(w.dim(), w.degree() - 1);
	for (const auto &[idx, f] : w.comps()) {
		for (std::size_t pos = 0; pos < idx.size(); ++pos) {
			const RatFn &xc = x.coeff(idx[pos]);
			if (xc.is_zero())
				continue;
			IndexTuple rest;
			rest.reserve(idx.size() - 1);
			for (std::size_t j = 0; j < idx.size(); ++j)
				if (j != pos)
					rest.push_back(idx[j]);
			RatFn term = xc * f;
			r.add_component(std::move(rest),
			                pos % 2 == 1 ? -term : term);
		}
	}
	return r;
}

VectorField lie_bracket(const VectorField &x, const VectorField &y)
{
	if (x.dim() != y.dim())
		throw DimensionMismatch("lie bracket dimension mismatch");
	VectorField r(x.dim());
	for (int v = 0; v < var_count(x.dim()); ++v)
		r.set_coeff(v, x.apply(y.coeff(v)) - y.apply(x.coeff(v)));
	return r;
}

DiffForm lie_derivative_form(const VectorField &x, const DiffForm &w)
{
	if (x.dim() != w.dim())
		throw DimensionMismatch("lie derivative dimension mismatch");
	if (w.degree() == 0)
		return DiffForm::function(x.apply(w.scalar()));
	return ext_d(interior(x, w)) + interior(x, ext_d(w));
}

} // namespace contactkit
