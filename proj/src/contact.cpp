#include "contactkit/contact.hpp"

#include <stdexcept>

namespace contactkit {

namespace {

RatFn scalar_of(const DiffForm &w) { return w.scalar(); }

// i_X of a 1-form, as a scalar.
RatFn contract1(const VectorField &x, const DiffForm &w)
{
	return scalar_of(interior(x, w));
}

long factorial(int k)
{
	long r = 1;
	for (int i = 2; i <= k; ++i)
		r *= i;
	return r;
}

} // namespace

bool operator==(const TangentCoords &a, const TangentCoords &b)
{
	if (a.F.size() != b.F.size() || a.G.size() != b.G.size())
		return false;
	for (std::size_t i = 0; i < a.F.size(); ++i)
		if (!ratfn_eq(a.F[i], b.F[i]))
			return false;
	for (std::size_t i = 0; i < a.G.size(); ++i)
		if (!ratfn_eq(a.G[i], b.G[i]))
			return false;
	return true;
}

bool realized_equal(const RealizedTangent &a, const RealizedTangent &b)
{
	if (a.weight_part.weight() != b.weight_part.weight())
		return false;
	return a.two_form.scaled(a.weight_part.coeff()) ==
	       b.two_form.scaled(b.weight_part.coeff());
}

RatFn RescaledContact::hamiltonian_of(const VectorField &x) const
{
	return contract1(x, alpha);
}

DarbouxModel::DarbouxModel(int n)
    : n_(n), alpha_(n, 1), d_alpha_(n, 2), omega_vol_(n, var_count(n)),
      frame_(n)
{
	if (n < 1)
		throw DimensionMismatch("model dimension must be positive");

	const Rat half(1, 2);
	for (int i = 0; i < n_; ++i) {
		// alpha = sum (x_i dy_i - y_i dx_i)/2 + dz
		alpha_.add_component({i}, RatFn(
		    Poly::variable(n_, n_ + i).scaled(-half)));
		alpha_.add_component({n_ + i}, RatFn(
		    Poly::variable(n_, i).scaled(half)));
	}
	alpha_.add_component({2 * n_}, scalar(1));

	d_alpha_ = ext_d(alpha_);

	omega_vol_ = alpha_;
	for (int i = 0; i < n_; ++i)
		omega_vol_ = wedge(omega_vol_, d_alpha_);

	frame_.Z.set_coeff(2 * n_, scalar(1));
	for (int i = 0; i < n_; ++i) {
		VectorField a(n_), b(n_);
		a.set_coeff(i, scalar(1));
		a.set_coeff(2 * n_, var(n_ + i) * RatFn::constant(n_, half));
		b.set_coeff(n_ + i, scalar(-1));
		b.set_coeff(2 * n_, var(i) * RatFn::constant(n_, half));
		frame_.A.push_back(std::move(a));
		frame_.B.push_back(std::move(b));
	}

	// construction invariants
	IndexTuple top;
	for (int v = 0; v < var_count(n_); ++v)
		top.push_back(v);
	DiffForm expected(n_, var_count(n_));
	Rat coeff(factorial(n_));
	if ((n_ * (n_ - 1) / 2) % 2 == 1)
		coeff = -coeff;
	expected.add_component(top, RatFn::constant(n_, coeff));
	if (omega_vol_ != expected)
		throw std::logic_error("volume form invariant violated");
	if (!interior(frame_.Z, d_alpha_).is_zero())
		throw std::logic_error("Reeb field does not annihilate d alpha");
	if (!ratfn_eq(contract1(frame_.Z, alpha_), scalar(1)))
		throw std::logic_error("alpha(Z) != 1");
	for (int i = 0; i < n_; ++i) {
		if (!contract1(frame_.A[i], alpha_).is_zero() ||
		    !contract1(frame_.B[i], alpha_).is_zero())
			throw std::logic_error("frame field not tangent");
		for (int j = 0; j < n_; ++j) {
			VectorField ab = lie_bracket(frame_.A[i], frame_.B[j]);
			if (i == j)
				ab = ab - frame_.Z;
			if (!ab.is_zero() ||
			    !lie_bracket(frame_.A[i], frame_.A[j]).is_zero() ||
			    !lie_bracket(frame_.B[i], frame_.B[j]).is_zero())
				throw std::logic_error("Heisenberg relations violated");
		}
		if (!lie_bracket(frame_.A[i], frame_.Z).is_zero() ||
		    !lie_bracket(frame_.B[i], frame_.Z).is_zero())
			throw std::logic_error("frame does not commute with Z");
	}
	// constant-coefficient independence at the origin
	{
		RatFnMatrix rows;
		auto origin_row = [&](const VectorField &f) {
			std::vector<RatFn> row;
			for (int v = 0; v < var_count(n_); ++v) {
				const RatFn &c = f.coeff(v);
				row.push_back(RatFn::constant(
				    n_, c.num().constant_value() /
				            c.den().constant_value()));
			}
			return row;
		};
		for (int i = 0; i < n_; ++i)
			rows.push_back(origin_row(frame_.A[i]));
		for (int i = 0; i < n_; ++i)
			rows.push_back(origin_row(frame_.B[i]));
		rows.push_back(origin_row(frame_.Z));
		if (matrix_rank(rows) != var_count(n_))
			throw std::logic_error("frame not independent at origin");
	}
}

ContactHamiltonian field_to_hamiltonian(const DarbouxModel &m,
                                        const VectorField &x)
{
	return contract1(x, m.alpha());
}

Density hamiltonian_density(const DarbouxModel &m, const ContactHamiltonian &h)
{
	return Density(h, Rat(-1, m.n() + 1));
}

VectorField hamiltonian_to_field(const DarbouxModel &m,
                                 const ContactHamiltonian &h)
{
	VectorField x = m.reeb().scaled(h);
	for (int i = 0; i < m.n(); ++i) {
		const VectorField &a = m.frame().A[i];
		const VectorField &b = m.frame().B[i];
		x = x - b.scaled(a.apply(h)) + a.scaled(b.apply(h));
	}
	return x;
}

RatFn contact_factor(const DarbouxModel &m, const VectorField &x)
{
	DiffForm lx = lie_derivative_form(x, m.alpha());
	RatFn fx = contract1(m.reeb(), lx);
	if (!(lx - m.alpha().scaled(fx)).is_zero())
		throw NotContact("L_X alpha is not proportional to alpha");
	return fx;
}

ContactHamiltonian lagrange_bracket(const DarbouxModel &m,
                                    const ContactHamiltonian &h1,
                                    const ContactHamiltonian &h2)
{
	VectorField x1 = hamiltonian_to_field(m, h1);
	return x1.apply(h2) - m.reeb().apply(h1) * h2;
}

std::pair<ContactHamiltonian, VectorField> decompose(const DarbouxModel &m,
                                                     const VectorField &x)
{
	ContactHamiltonian h = field_to_hamiltonian(m, x);
	VectorField y = x - hamiltonian_to_field(m, h);
	if (!field_to_hamiltonian(m, y).is_zero())
		throw std::logic_error("splitting remainder is not tangent");
	return {std::move(h), std::move(y)};
}

TangentCoords tangent_coords(const DarbouxModel &m, const VectorField &y)
{
	if (!field_to_hamiltonian(m, y).is_zero())
		throw NotTangent("field does not annihilate alpha");
	TangentCoords t;
	for (int i = 0; i < m.n(); ++i) {
		t.F.push_back(y.coeff(i));
		t.G.push_back(-y.coeff(m.n() + i));
	}
	// the d/dz coefficient is forced; cross-check it
	RatFn forced(m.n());
	const Rat half(1, 2);
	for (int i = 0; i < m.n(); ++i)
		forced = forced + t.F[i] * m.var(m.n() + i).scaled(half) +
		         t.G[i] * m.var(i).scaled(half);
	if (!ratfn_eq(forced, y.coeff(2 * m.n())))
		throw InconsistentFrame("forced d/dz coefficient disagrees");
	return t;
}

VectorField reconstruct_tangent(const DarbouxModel &m, const TangentCoords &t)
{
	if (static_cast<int>(t.F.size()) != m.n() ||
	    static_cast<int>(t.G.size()) != m.n())
		throw DimensionMismatch("coordinate tuple length");
	VectorField y(m.n());
	for (int i = 0; i < m.n(); ++i)
		y = y + m.frame().A[i].scaled(t.F[i]) +
		    m.frame().B[i].scaled(t.G[i]);
	return y;
}

ContactHamiltonian pairing(const DarbouxModel &m, const VectorField &x,
                           const VectorField &y)
{
	if (!field_to_hamiltonian(m, x).is_zero())
		throw NotTangent("first pairing argument is not tangent");
	if (!field_to_hamiltonian(m, y).is_zero())
		throw NotTangent("second pairing argument is not tangent");
	return field_to_hamiltonian(m, lie_bracket(x, y));
}

std::pair<ContactHamiltonian, VectorField>
bracket_tangent_split(const DarbouxModel &m, const VectorField &x,
                      const VectorField &y)
{
	if (!field_to_hamiltonian(m, x).is_zero() ||
	    !field_to_hamiltonian(m, y).is_zero())
		throw NotTangent("bracket split needs tangent arguments");
	return decompose(m, lie_bracket(x, y));
}

TangentCoords matrix_action(const DarbouxModel &m,
                            const ContactHamiltonian &h,
                            const TangentCoords &t)
{
	if (static_cast<int>(t.F.size()) != m.n() ||
	    static_cast<int>(t.G.size()) != m.n())
		throw DimensionMismatch("coordinate tuple length");
	const auto &fr = m.frame();
	VectorField xh = hamiltonian_to_field(m, h);
	std::vector<RatFn> ah, bh;
	for (int i = 0; i < m.n(); ++i) {
		ah.push_back(fr.A[i].apply(h));
		bh.push_back(fr.B[i].apply(h));
	}
	TangentCoords r;
	for (int i = 0; i < m.n(); ++i) {
		RatFn f = xh.apply(t.F[i]);
		RatFn g = xh.apply(t.G[i]);
		for (int j = 0; j < m.n(); ++j) {
			f = f - fr.A[j].apply(bh[i]) * t.F[j] -
			    fr.B[j].apply(bh[i]) * t.G[j];
			g = g + fr.A[j].apply(ah[i]) * t.F[j] +
			    fr.B[j].apply(ah[i]) * t.G[j];
		}
		r.F.push_back(std::move(f));
		r.G.push_back(std::move(g));
	}
	return r;
}

Density density_lie(const DarbouxModel &m, const VectorField &x,
                    const Density &phi)
{
	RatFn fx = contact_factor(m, x);
	Rat scale = phi.weight() * Rat(m.n() + 1);
	RatFn coeff = x.apply(phi.coeff()) + (fx * phi.coeff()).scaled(scale);
	return Density(std::move(coeff), phi.weight());
}

RealizedTangent realize_tangent(const DarbouxModel &m, const VectorField &y)
{
	if (!field_to_hamiltonian(m, y).is_zero())
		throw NotTangent("realization needs a tangent field");
	DiffForm two_form = -wedge(m.alpha(), interior(y, m.d_alpha()));
	return RealizedTangent{std::move(two_form),
	                       Density(m.scalar(1), Rat(-2, m.n() + 1))};
}

RealizedTangent realized_lie(const DarbouxModel &m,
                             const ContactHamiltonian &h,
                             const RealizedTangent &rt)
{
	VectorField xh = hamiltonian_to_field(m, h);
	Density dcoeff = density_lie(m, xh, rt.weight_part);
	DiffForm part =
	    lie_derivative_form(xh, rt.two_form).scaled(rt.weight_part.coeff()) +
	    rt.two_form.scaled(dcoeff.coeff());
	return RealizedTangent{std::move(part),
	                       Density(m.scalar(1), rt.weight_part.weight())};
}

bool vanishes_on_distribution(const DarbouxModel &m, const DiffForm &w)
{
	if (w.degree() != 2)
		throw DegreeError("distribution predicate expects a 2-form");
	std::vector<const VectorField *> tangent;
	for (int i = 0; i < m.n(); ++i) {
		tangent.push_back(&m.frame().A[i]);
		tangent.push_back(&m.frame().B[i]);
	}
	for (const auto *t1 : tangent) {
		DiffForm c1 = interior(*t1, w);
		for (const auto *t2 : tangent)
			if (!contract1(*t2, c1).is_zero())
				return false;
	}
	return true;
}

RescaledContact rescale_contact_form(const DarbouxModel &m, const RatFn &f)
{
	if (f.is_zero())
		throw ZeroFunction("rescaling by the zero function");
	DiffForm alpha_p = m.alpha().scaled(f);
	DiffForm d_alpha_p = ext_d(alpha_p);
	DiffForm omega_p = alpha_p;
	for (int i = 0; i < m.n(); ++i)
		omega_p = wedge(omega_p, d_alpha_p);
	if (omega_p != m.omega_vol().scaled(f.pow(m.n() + 1)))
		throw std::logic_error("Omega' != f^{n+1} Omega");
	return RescaledContact{std::move(alpha_p), std::move(d_alpha_p),
	                       std::move(omega_p), f};
}

bool rescale_check_integrand(const DarbouxModel &m, const RatFn &f,
                             const ContactHamiltonian &h)
{
	if (f.is_zero())
		throw ZeroFunction("zero rescaling function");
	if (h.is_zero())
		throw ZeroFunction("zero Hamiltonian");
	const int p = m.n() + 1;
	RatFn omega_coeff = m.omega_vol().comps().begin()->second;
	RatFn lhs = (f * h).pow(-p) * f.pow(p) * omega_coeff;
	RatFn rhs = h.pow(-p) * omega_coeff;
	return ratfn_eq(lhs, rhs);
}

namespace {

// Rows of the linear system i_X w = beta for a 2-form w, in the unknowns
// X^0..X^{2n}: component j of i_X w collects +X^a w_{(a,j)} - X^b w_{(j,b)}.
RatFnMatrix contraction_rows(const DiffForm &w)
{
	const int nv = var_count(w.dim());
	RatFnMatrix rows(nv, std::vector<RatFn>(nv, RatFn(w.dim())));
	for (const auto &[idx, g] : w.comps()) {
		int a = idx[0], b = idx[1];
		rows[b][a] = rows[b][a] + g;
		rows[a][b] = rows[a][b] - g;
	}
	return rows;
}

bool is_contact_form(const DarbouxModel &m, const DiffForm &alpha_p,
                     DiffForm &d_alpha_p)
{
	d_alpha_p = ext_d(alpha_p);
	DiffForm vol = alpha_p;
	for (int i = 0; i < m.n(); ++i)
		vol = wedge(vol, d_alpha_p);
	return !vol.is_zero();
}

} // namespace

VectorField reeb_of(const DarbouxModel &m, const DiffForm &alpha_p)
{
	if (alpha_p.degree() != 1 || alpha_p.dim() != m.n())
		throw DimensionMismatch("contact form must be a 1-form on the model");
	DiffForm d_alpha_p(m.n(), 2);
	if (!is_contact_form(m, alpha_p, d_alpha_p))
		throw NotContact("volume form of the candidate vanishes");

	const int nv = var_count(m.n());
	RatFnMatrix mtx = contraction_rows(d_alpha_p);
	std::vector<RatFn> rhs(nv, RatFn(m.n()));
	std::vector<RatFn> alpha_row(nv, RatFn(m.n()));
	for (const auto &[idx, g] : alpha_p.comps())
		alpha_row[idx[0]] = g;
	mtx.push_back(std::move(alpha_row));
	rhs.push_back(m.scalar(1));

	std::vector<RatFn> sol;
	try {
		sol = solve_linear(mtx, rhs);
	} catch (const SingularMatrix &) {
		throw NotContact("Reeb system is singular");
	} catch (const InconsistentSystem &) {
		throw NotContact("Reeb system is inconsistent");
	}
	VectorField z(m.n(), std::move(sol));
	if (!interior(z, d_alpha_p).is_zero() ||
	    !ratfn_eq(contract1(z, alpha_p), m.scalar(1)))
		throw NotContact("Reeb defining equations failed verification");
	return z;
}

VectorField generic_contact_field(const DarbouxModel &m,
                                  const DiffForm &alpha_p, const RatFn &h_p)
{
	if (alpha_p.degree() != 1 || alpha_p.dim() != m.n())
		throw DimensionMismatch("contact form must be a 1-form on the model");
	VectorField z_p = reeb_of(m, alpha_p);
	DiffForm d_alpha_p = ext_d(alpha_p);

	// i_X dalpha' = Z'(H') alpha' - dH',  alpha'(X) = H'
	RatFn zh = z_p.apply(h_p);
	DiffForm rhs_form = alpha_p.scaled(zh) - ext_d(DiffForm::function(h_p));

	const int nv = var_count(m.n());
	RatFnMatrix mtx = contraction_rows(d_alpha_p);
	std::vector<RatFn> rhs(nv, RatFn(m.n()));
	for (const auto &[idx, g] : rhs_form.comps())
		rhs[idx[0]] = g;
	std::vector<RatFn> alpha_row(nv, RatFn(m.n()));
	for (const auto &[idx, g] : alpha_p.comps())
		alpha_row[idx[0]] = g;
	mtx.push_back(std::move(alpha_row));
	rhs.push_back(h_p);

	std::vector<RatFn> sol;
	try {
		sol = solve_linear(mtx, rhs);
	} catch (const InconsistentSystem &) {
		throw NotContact("contact field system is inconsistent");
	}
	VectorField x(m.n(), std::move(sol));
	DiffForm lx = lie_derivative_form(x, alpha_p);
	if (!(lx - alpha_p.scaled(zh)).is_zero() ||
	    !ratfn_eq(contract1(x, alpha_p), h_p))
		throw NotContact("contact field verification failed");
	return x;
}

} // namespace contactkit
