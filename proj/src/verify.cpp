#include "contactkit/verify.hpp"

#include <chrono>
#include <map>

namespace contactkit::verify {

void validate(const GenConfig &cfg)
{
	if (cfg.n < 1 || cfg.max_degree < 0 || cfg.max_terms < 0 ||
	    cfg.coeff_bound < 1)
		throw Error("InvalidConfig", "generator config out of range");
}

std::uint64_t Gen::uniform(std::uint64_t bound)
{
	return bound == 0 ? 0 : rng_() % bound;
}

Rat Gen::coeff()
{
	long mag = 1 + static_cast<long>(uniform(cfg_.coeff_bound));
	return uniform(2) == 0 ? Rat(mag) : Rat(-mag);
}

Monomial Gen::monomial()
{
	const int nv = var_count(cfg_.n);
	std::vector<unsigned> exps(nv, 0);
	auto d = uniform(cfg_.max_degree + 1);
	for (std::uint64_t k = 0; k < d; ++k)
		exps[uniform(nv)]++;
	return Monomial(cfg_.n, std::move(exps));
}

Poly Gen::poly()
{
	// distinct monomials keep every stored coefficient a single draw,
	// inside [-coeff_bound, coeff_bound]
	Poly p(cfg_.n);
	for (int t = 0; t < cfg_.max_terms; ++t) {
		for (int attempt = 0; attempt < 32; ++attempt) {
			Monomial m = monomial();
			if (p.terms().count(m) == 0) {
				p.add_term(m, coeff());
				break;
			}
		}
	}
	return p;
}

Poly Gen::poly_nonzero()
{
	for (;;) {
		Poly p = poly();
		if (!p.is_zero())
			return p;
	}
}

RatFn Gen::ratfn() { return RatFn(poly(), poly_nonzero()); }

RatFn Gen::rescale_fn(bool plausibly_positive)
{
	Poly p(cfg_.n);
	for (;;) {
		p = poly();
		Poly no_const = p - Poly::constant(cfg_.n, p.constant_value());
		if (!no_const.is_zero()) {
			p = no_const;
			break;
		}
	}
	Poly one = Poly::constant(cfg_.n, Rat(1));
	return RatFn(plausibly_positive ? one + p * p : one + p);
}

VectorField Gen::vector_field(const DarbouxModel &m)
{
	VectorField x(m.n());
	for (int v = 0; v < var_count(m.n()); ++v)
		x.set_coeff(v, RatFn(poly()));
	return x;
}

TangentCoords Gen::coords(const DarbouxModel &m)
{
	TangentCoords t;
	for (int i = 0; i < m.n(); ++i) {
		t.F.push_back(RatFn(poly()));
		t.G.push_back(RatFn(poly()));
	}
	return t;
}

VectorField Gen::tangent_field(const DarbouxModel &m)
{
	return reconstruct_tangent(m, coords(m));
}

DiffForm Gen::form(const DarbouxModel &m, int degree)
{
	DiffForm w(m.n(), degree);
	const int nv = var_count(m.n());
	int comps = std::max(1, cfg_.max_terms / 2);
	for (int c = 0; c < comps; ++c) {
		IndexTuple idx;
		std::vector<int> pool;
		for (int v = 0; v < nv; ++v)
			pool.push_back(v);
		for (int k = 0; k < degree; ++k) {
			auto pick = uniform(pool.size());
			idx.push_back(pool[pick]);
			pool.erase(pool.begin() + pick);
		}
		w.add_component(std::move(idx), RatFn(poly()));
	}
	return w;
}

Poly gen_poly(const GenConfig &cfg)
{
	Gen g(cfg);
	return g.poly();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (char c : s) {
		h ^= static_cast<unsigned char>(c);
		h *= 0x100000001b3ULL;
	}
	return h;
}

void check(bool ok, const char *what)
{
	if (!ok)
		throw CheckFailed(what);
}

} // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, std::string_view suite,
                         int trial)
{
	return splitmix64(base_seed ^ fnv1a(suite) ^
	                  (0x9e3779b97f4a7c15ULL * (trial + 1)));
}

SuiteReport run_trials(const std::string &name, const GenConfig &cfg,
                       int trials, const TrialBody &body)
{
	validate(cfg);
	const auto start = std::chrono::steady_clock::now();
	SuiteReport report;
	report.suite = name;
	report.trials = trials;
	DarbouxModel model(cfg.n);
	for (int t = 0; t < trials; ++t) {
		std::uint64_t seed = trial_seed(cfg.seed, name, t);
		Gen gen(seed, cfg);
		try {
			body(gen, model);
		} catch (const CheckFailed &e) {
			report.failures.push_back({t, seed, e.what()});
		}
	}
	report.elapsed_seconds =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() -
	                                  start)
	        .count();
	return report;
}

namespace {

struct Suite
{
	std::string description;
	TrialBody body;
};

void suite_homomorphism(Gen &g, const DarbouxModel &m)
{
	RatFn h1 = g.hamiltonian(), h2 = g.hamiltonian();
	VectorField lhs = lie_bracket(hamiltonian_to_field(m, h1),
	                              hamiltonian_to_field(m, h2));
	VectorField rhs = hamiltonian_to_field(m, lagrange_bracket(m, h1, h2));
	check(lhs == rhs, "[X_H1,X_H2] != X_{H1,H2}");
}

void suite_jacobi(Gen &g, const DarbouxModel &m)
{
	RatFn h1 = g.hamiltonian(), h2 = g.hamiltonian(), h3 = g.hamiltonian();
	RatFn acc = lagrange_bracket(m, lagrange_bracket(m, h1, h2), h3) +
	            lagrange_bracket(m, lagrange_bracket(m, h2, h3), h1) +
	            lagrange_bracket(m, lagrange_bracket(m, h3, h1), h2);
	check(acc.is_zero(), "Lagrange bracket violates Jacobi");
}

void suite_splitting(Gen &g, const DarbouxModel &m)
{
	VectorField x = g.vector_field(m);
	auto [h, y] = decompose(m, x);
	check(x == hamiltonian_to_field(m, h) + y, "decomposition does not sum");
	check(field_to_hamiltonian(m, y).is_zero(), "remainder not tangent");
	// uniqueness round-trip
	RatFn h2 = g.hamiltonian();
	VectorField y2 = g.tangent_field(m);
	auto [h3, y3] = decompose(m, hamiltonian_to_field(m, h2) + y2);
	check(ratfn_eq(h2, h3) && y2 == y3, "splitting not unique");
}

void suite_pairing_sympl(Gen &g, const DarbouxModel &m)
{
	// frame Gram matrix equals the standard symplectic matrix
	std::vector<const VectorField *> e;
	for (int i = 0; i < m.n(); ++i)
		e.push_back(&m.frame().A[i]);
	for (int i = 0; i < m.n(); ++i)
		e.push_back(&m.frame().B[i]);
	for (int i = 0; i < 2 * m.n(); ++i)
		for (int j = 0; j < 2 * m.n(); ++j) {
			long expect = 0;
			if (j == i + m.n())
				expect = 1;
			if (i == j + m.n())
				expect = -1;
			check(ratfn_eq(pairing(m, *e[i], *e[j]), m.scalar(expect)),
			      "frame Gram matrix is not symplectic");
		}
	// antisymmetry and C-infinity bilinearity
	VectorField x = g.tangent_field(m), y = g.tangent_field(m);
	RatFn gfun(g.poly());
	check(ratfn_eq(pairing(m, x, y), -pairing(m, y, x)),
	      "pairing not antisymmetric");
	check(ratfn_eq(pairing(m, x.scaled(gfun), y), gfun * pairing(m, x, y)),
	      "pairing not function-linear");
}

void suite_prop44(Gen &g, const DarbouxModel &m)
{
	VectorField x = g.tangent_field(m), y = g.tangent_field(m);
	RatFn h = pairing(m, x, y);
	check(ratfn_eq(field_to_hamiltonian(m, lie_bracket(x, y)), h),
	      "alpha([X,Y]) != pairing");
	auto [hs, rest] = bracket_tangent_split(m, x, y);
	check(ratfn_eq(hs, h), "bracket split Hamiltonian != pairing");
	check(field_to_hamiltonian(m, rest).is_zero(),
	      "bracket split remainder not tangent");
}

void suite_invariance(Gen &g, const DarbouxModel &m)
{
	RatFn h = g.hamiltonian();
	VectorField x = g.tangent_field(m), y = g.tangent_field(m);
	VectorField xh = hamiltonian_to_field(m, h);
	RatFn lhs = lagrange_bracket(m, h, pairing(m, x, y));
	RatFn rhs = pairing(m, lie_bracket(xh, x), y) +
	            pairing(m, x, lie_bracket(xh, y));
	check(ratfn_eq(lhs, rhs), "pairing is not CVect-invariant");
}

void suite_matrix_action(Gen &g, const DarbouxModel &m)
{
	RatFn h = g.hamiltonian();
	TangentCoords t = g.coords(m);
	TangentCoords lhs = matrix_action(m, h, t);
	TangentCoords rhs = tangent_coords(
	    m, lie_bracket(hamiltonian_to_field(m, h), reconstruct_tangent(m, t)));
	check(lhs == rhs, "matrix action disagrees with the bracket");
}

void suite_trace(Gen &g, const DarbouxModel &m)
{
	RatFn h = g.hamiltonian();
	RatFn zh = m.reeb().apply(h);
	for (int i = 0; i < m.n(); ++i) {
		const auto &a = m.frame().A[i];
		const auto &b = m.frame().B[i];
		check(ratfn_eq(a.apply(b.apply(h)) - b.apply(a.apply(h)), zh),
		      "A_iB_i(H) - B_iA_i(H) != Z(H)");
	}
}

void suite_density_bracket(Gen &g, const DarbouxModel &m)
{
	RatFn h1 = g.hamiltonian(), h2 = g.hamiltonian();
	Rat lambda(-1, m.n() + 1);
	VectorField x1 = hamiltonian_to_field(m, h1);
	Density lhs = density_lie(m, x1, Density(h2, lambda));
	check(lhs == Density(lagrange_bracket(m, h1, h2), lambda),
	      "density Lie derivative != Lagrange bracket");
	Density vol = density_lie(m, x1, Density(m.scalar(1), Rat(1)));
	check(vol == Density(m.reeb().apply(h1).scaled(Rat(m.n() + 1)), Rat(1)),
	      "L_X Omega != (n+1) Z(H) Omega");
}

void suite_realize_equivariance(Gen &g, const DarbouxModel &m)
{
	RatFn h = g.hamiltonian();
	VectorField y = g.tangent_field(m);
	RealizedTangent ry = realize_tangent(m, y);
	check(vanishes_on_distribution(m, ry.two_form),
	      "realized 2-form is not in the annihilator");
	RealizedTangent lhs = realized_lie(m, h, ry);
	RealizedTangent rhs =
	    realize_tangent(m, lie_bracket(hamiltonian_to_field(m, h), y));
	check(realized_equal(lhs, rhs), "realization is not equivariant");
}

void suite_rescale(Gen &g, const DarbouxModel &m)
{
	RatFn f = g.rescale_fn();
	RescaledContact rc = rescale_contact_form(m, f);
	check(rc.omega_vol == m.omega_vol().scaled(f.pow(m.n() + 1)),
	      "Omega' != f^{n+1} Omega");
	RatFn h = g.hamiltonian();
	VectorField xh = hamiltonian_to_field(m, h);
	check(ratfn_eq(rc.hamiltonian_of(xh), f * h), "H' != f H");
	// the pairing rescales by f, computed through the contraction route
	VectorField x = g.tangent_field(m), y = g.tangent_field(m);
	RatFn paired_p =
	    interior(x, interior(y, rc.d_alpha)).scalar();
	check(ratfn_eq(paired_p, f * pairing(m, x, y)),
	      "H'_{X,Y} != f H_{X,Y}");
}

void suite_integrand(Gen &g, const DarbouxModel &m)
{
	RatFn f = g.rescale_fn();
	RatFn h = RatFn(g.poly_nonzero());
	check(rescale_check_integrand(m, f, h),
	      "rescaled integrand is not invariant");
}

void suite_reeb(Gen &g, const DarbouxModel &m)
{
	check(reeb_of(m, m.alpha()) == m.reeb(), "Reeb of alpha != d/dz");
	RatFn f = g.rescale_fn(false);
	DiffForm alpha_p = m.alpha().scaled(f);
	VectorField z = reeb_of(m, alpha_p);
	check(interior(z, ext_d(alpha_p)).is_zero(),
	      "i_Z' dalpha' != 0 after solve");
	check(ratfn_eq(interior(z, alpha_p).scalar(), m.scalar(1)),
	      "alpha'(Z') != 1 after solve");
}

void suite_cartan(Gen &g, const DarbouxModel &m)
{
	VectorField x = g.vector_field(m), y = g.vector_field(m);
	int degree = static_cast<int>(g.uniform(var_count(m.n()) + 1));
	DiffForm w = g.form(m, degree);
	VectorField br = lie_bracket(x, y);
	check(lie_derivative_form(br, w) ==
	          lie_derivative_form(x, lie_derivative_form(y, w)) -
	              lie_derivative_form(y, lie_derivative_form(x, w)),
	      "L_[X,Y] != [L_X, L_Y]");
	if (degree >= 1)
		check(interior(br, w) ==
		          lie_derivative_form(x, interior(y, w)) -
		              interior(y, lie_derivative_form(x, w)),
		      "i_[X,Y] != [L_X, i_Y]");
	RatFn f(g.poly());
	check(lie_derivative_form(x, w.scaled(f)) ==
	          w.scaled(x.apply(f)) + lie_derivative_form(x, w).scaled(f),
	      "L_X is not a derivation over functions");
	check(lie_derivative_form(x, ext_d(DiffForm::function(f))) ==
	          ext_d(DiffForm::function(x.apply(f))),
	      "L_X does not commute with d on functions");
	// Jacobi for the field bracket
	VectorField zf = g.vector_field(m);
	VectorField jac = lie_bracket(lie_bracket(x, y), zf) +
	                  lie_bracket(lie_bracket(y, zf), x) +
	                  lie_bracket(lie_bracket(zf, x), y);
	check(jac.is_zero(), "vector field bracket violates Jacobi");
}

void suite_d_squared(Gen &g, const DarbouxModel &m)
{
	for (int degree = 0; degree <= var_count(m.n()); ++degree) {
		DiffForm w = g.form(m, degree);
		check(ext_d(ext_d(w)).is_zero(), "d(dw) != 0");
	}
}

const std::map<std::string, Suite> &registry()
{
	static const std::map<std::string, Suite> table = {
	    {"homomorphism",
	     {"[X_H1, X_H2] = X_{H1,H2} for the Lagrange bracket",
	      suite_homomorphism}},
	    {"jacobi",
	     {"{{H1,H2},H3} + {{H2,H3},H1} + {{H3,H1},H2} = 0", suite_jacobi}},
	    {"splitting",
	     {"X = X_H + Y with alpha(Y) = 0, uniquely", suite_splitting}},
	    {"pairing-sympl",
	     {"frame Gram matrix of the pairing is the standard symplectic "
	      "matrix; pairing is skew and function-bilinear",
	      suite_pairing_sympl}},
	    {"prop44",
	     {"alpha([X,Y]) = H_{X,Y} for tangent X, Y", suite_prop44}},
	    {"invariance-B",
	     {"{H, H_{X,Y}} = H_{[X_H,X],Y} + H_{X,[X_H,Y]}", suite_invariance}},
	    {"matrix-action",
	     {"matrix action on (F,G) equals coordinates of [X_H, Y]",
	      suite_matrix_action}},
	    {"trace",
	     {"A_iB_i(H) - B_iA_i(H) = Z(H) for each i", suite_trace}},
	    {"density-bracket",
	     {"L_{X_H1}(H2 Omega^{-1/(n+1)}) = {H1,H2} Omega^{-1/(n+1)} and "
	      "L_{X_H} Omega = (n+1) Z(H) Omega",
	      suite_density_bracket}},
	    {"realize-equivariance",
	     {"L_{X_H}(realize Y) = realize([X_H, Y]) and images vanish on the "
	      "distribution",
	      suite_realize_equivariance}},
	    {"rescale",
	     {"alpha' = f alpha gives H' = f H, H'_{X,Y} = f H_{X,Y}, "
	      "Omega' = f^{n+1} Omega",
	      suite_rescale}},
	    {"integrand",
	     {"(fH)^{-(n+1)} Omega' = H^{-(n+1)} Omega", suite_integrand}},
	    {"reeb",
	     {"the Reeb solve satisfies i_Z' dalpha' = 0 and alpha'(Z') = 1",
	      suite_reeb}},
	    {"cartan",
	     {"Cartan calculus: L_[X,Y] = [L_X,L_Y], i_[X,Y] = [L_X,i_Y], "
	      "Leibniz, and the field-bracket Jacobi identity",
	      suite_cartan}},
	    {"d-squared", {"d(dw) = 0 in every degree", suite_d_squared}},
	};
	return table;
}

} // namespace

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto &[id, s] : registry())
			v.push_back(id);
		return v;
	}();
	return names;
}

const std::string &suite_description(const std::string &id)
{
	auto it = registry().find(id);
	if (it == registry().end())
		throw UnknownSuite("unknown suite '" + id + "'");
	return it->second.description;
}

SuiteReport run_suite(const std::string &id, const GenConfig &cfg, int trials)
{
	auto it = registry().find(id);
	if (it == registry().end())
		throw UnknownSuite("unknown suite '" + id + "'");
	return run_trials(id, cfg, trials, it->second.body);
}

} // namespace contactkit::verify
