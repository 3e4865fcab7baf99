#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include "contactkit/contact.hpp"
#include "contactkit/verify.hpp"

#include <doctest.h>

using namespace contactkit;

namespace {

VectorField field(const DarbouxModel &m, std::vector<RatFn> coeffs)
{
	return VectorField(m.n(), std::move(coeffs));
}

} // namespace

TEST_CASE("darboux model construction")
{
	DarbouxModel m(1);
	// alpha = (x dy - y dx)/2 + dz
	DiffForm alpha(1, 1);
	alpha.add_component({0}, m.var(1).scaled(Rat(-1, 2)));
	alpha.add_component({1}, m.var(0).scaled(Rat(1, 2)));
	alpha.add_component({2}, m.scalar(1));
	CHECK(m.alpha() == alpha);
	// Omega = dx ^ dy ^ dz
	DiffForm vol(1, 3);
	vol.add_component({0, 1, 2}, m.scalar(1));
	CHECK(m.omega_vol() == vol);
	CHECK_THROWS_AS(DarbouxModel(0), DimensionMismatch);
}

TEST_CASE("darboux volume at n = 2 is 2 dx1^dy1^dx2^dy2^dz")
{
	DarbouxModel m(2);
	DiffForm expected = DiffForm::basis(2, {0});
	for (int idx : {2, 1, 3, 4})
		expected = wedge(expected, DiffForm::basis(2, {idx}));
	CHECK(m.omega_vol() == expected.scaled(m.scalar(2)));
}

TEST_CASE("hamiltonian_to_field")
{
	DarbouxModel m(1);
	CHECK(hamiltonian_to_field(m, m.scalar(1)) == m.reeb());
	// H = x: X_H = d/dy + (x/2) d/dz
	VectorField xx = field(m, {RatFn(1), m.scalar(1),
	                           m.var(0).scaled(Rat(1, 2))});
	CHECK(hamiltonian_to_field(m, m.var(0)) == xx);
	// H = z: X_H = (x/2) d/dx + (y/2) d/dy + z d/dz
	VectorField xz = field(m, {m.var(0).scaled(Rat(1, 2)),
	                           m.var(1).scaled(Rat(1, 2)), m.var(2)});
	CHECK(hamiltonian_to_field(m, m.var(2)) == xz);
	// defining identities i_{X_H} alpha = H and L_{X_H} alpha = Z(H) alpha
	verify::GenConfig cfg;
	cfg.n = 2;
	DarbouxModel m2(2);
	for (int trial = 0; trial < 25; ++trial) {
		verify::Gen g(verify::trial_seed(21, "xh-def", trial), cfg);
		RatFn h = g.hamiltonian();
		VectorField xh = hamiltonian_to_field(m2, h);
		CHECK(ratfn_eq(field_to_hamiltonian(m2, xh), h));
		CHECK(lie_derivative_form(xh, m2.alpha()) ==
		      m2.alpha().scaled(m2.reeb().apply(h)));
	}
}

TEST_CASE("field_to_hamiltonian")
{
	DarbouxModel m(1);
	CHECK(ratfn_eq(field_to_hamiltonian(m, m.reeb()), m.scalar(1)));
	CHECK(field_to_hamiltonian(m, m.frame().A[0]).is_zero());
	CHECK(field_to_hamiltonian(m, m.frame().B[0]).is_zero());
	VectorField xz = hamiltonian_to_field(m, m.var(2));
	CHECK(ratfn_eq(field_to_hamiltonian(m, xz), m.var(2)));
}

TEST_CASE("contact_factor")
{
	DarbouxModel m(1);
	CHECK(contact_factor(m, m.reeb()).is_zero());
	VectorField xz = hamiltonian_to_field(m, m.var(2));
	CHECK(ratfn_eq(contact_factor(m, xz), m.scalar(1)));
	CHECK_THROWS_AS(contact_factor(m, m.frame().A[0]), NotContact);
	// f_{X_H} = Z(H)
	verify::GenConfig cfg;
	cfg.n = 1;
	for (int trial = 0; trial < 25; ++trial) {
		verify::Gen g(verify::trial_seed(23, "factor", trial), cfg);
		RatFn h = g.hamiltonian();
		CHECK(ratfn_eq(contact_factor(m, hamiltonian_to_field(m, h)),
		               m.reeb().apply(h)));
	}
}

TEST_CASE("lagrange_bracket")
{
	DarbouxModel m(1);
	RatFn h = m.var(0) * m.var(2) + m.scalar(3);
	CHECK(lagrange_bracket(m, h, h).is_zero());
	// {1, H} = Z(H)
	CHECK(ratfn_eq(lagrange_bracket(m, m.scalar(1), h),
	               m.reeb().apply(h)));
	// {x, y} = 1
	CHECK(ratfn_eq(lagrange_bracket(m, m.var(0), m.var(1)), m.scalar(1)));
	// antisymmetric and bilinear
	RatFn h2 = m.var(1) * m.var(1);
	CHECK(ratfn_eq(lagrange_bracket(m, h, h2),
	               -lagrange_bracket(m, h2, h)));
	CHECK(ratfn_eq(lagrange_bracket(m, h + h2, m.var(0)),
	               lagrange_bracket(m, h, m.var(0)) +
	                   lagrange_bracket(m, h2, m.var(0))));
}

TEST_CASE("decompose")
{
	DarbouxModel m(1);
	auto [h1, y1] = decompose(m, m.reeb());
	CHECK(ratfn_eq(h1, m.scalar(1)));
	CHECK(y1.is_zero());

	auto [h2, y2] = decompose(m, m.frame().A[0]);
	CHECK(h2.is_zero());
	CHECK(y2 == m.frame().A[0]);

	// d/dx -> (-y/2, (1/2) d/dx + (y/4) d/dz)
	VectorField ddx = field(m, {m.scalar(1), RatFn(1), RatFn(1)});
	auto [h3, y3] = decompose(m, ddx);
	CHECK(ratfn_eq(h3, m.var(1).scaled(Rat(-1, 2))));
	VectorField expected = field(m, {m.scalar(1).scaled(Rat(1, 2)), RatFn(1),
	                                 m.var(1).scaled(Rat(1, 4))});
	CHECK(y3 == expected);
	CHECK(field_to_hamiltonian(m, y3).is_zero());
	CHECK(ddx == hamiltonian_to_field(m, h3) + y3);
}

TEST_CASE("tangent_coords")
{
	DarbouxModel m(2);
	TangentCoords ta = tangent_coords(m, m.frame().A[0]);
	CHECK(ratfn_eq(ta.F[0], m.scalar(1)));
	CHECK(ta.F[1].is_zero());
	CHECK(ta.G[0].is_zero());
	CHECK(ta.G[1].is_zero());

	TangentCoords tb = tangent_coords(m, m.frame().B[0].scaled(m.var(0)));
	CHECK(tb.F[0].is_zero());
	CHECK(ratfn_eq(tb.G[0], m.var(0)));

	CHECK_THROWS_AS(tangent_coords(m, m.reeb()), NotTangent);

	// round-trip with reconstruct_tangent
	verify::GenConfig cfg;
	cfg.n = 2;
	for (int trial = 0; trial < 25; ++trial) {
		verify::Gen g(verify::trial_seed(29, "coords", trial), cfg);
		TangentCoords t = g.coords(m);
		CHECK(t == tangent_coords(m, reconstruct_tangent(m, t)));
	}
}

TEST_CASE("pairing")
{
	DarbouxModel m(2);
	CHECK(ratfn_eq(pairing(m, m.frame().A[0], m.frame().B[0]), m.scalar(1)));
	CHECK(pairing(m, m.frame().A[0], m.frame().A[1]).is_zero());
	CHECK_THROWS_AS(pairing(m, m.reeb(), m.frame().A[0]), NotTangent);
	CHECK_THROWS_AS(pairing(m, m.frame().A[0], m.reeb()), NotTangent);

	// determinant formula sum_i (F_i Gt_i - Ft_i G_i)
	verify::GenConfig cfg;
	cfg.n = 2;
	for (int trial = 0; trial < 25; ++trial) {
		verify::Gen g(verify::trial_seed(31, "pair-det", trial), cfg);
		TangentCoords t1 = g.coords(m), t2 = g.coords(m);
		RatFn det(m.n());
		for (int i = 0; i < m.n(); ++i)
			det = det + t1.F[i] * t2.G[i] - t2.F[i] * t1.G[i];
		CHECK(ratfn_eq(pairing(m, reconstruct_tangent(m, t1),
		                       reconstruct_tangent(m, t2)),
		               det));
	}
	// pairing agrees with the double contraction -i_Y i_X dalpha
	for (int trial = 0; trial < 25; ++trial) {
		verify::Gen g(verify::trial_seed(37, "pair-contract", trial), cfg);
		VectorField x = g.tangent_field(m), y = g.tangent_field(m);
		RatFn contracted =
		    -interior(y, interior(x, m.d_alpha())).scalar();
		CHECK(ratfn_eq(pairing(m, x, y), contracted));
	}
}

TEST_CASE("bracket_tangent_split")
{
	DarbouxModel m(2);
	auto [h, rest] = bracket_tangent_split(m, m.frame().A[0], m.frame().B[0]);
	CHECK(ratfn_eq(h, m.scalar(1)));
	CHECK(rest.is_zero());

	auto [h2, rest2] =
	    bracket_tangent_split(m, m.frame().A[0], m.frame().A[1]);
	CHECK(h2.is_zero());
	CHECK(rest2.is_zero());

	// (x A_1, B_1): bracket is x Z exactly, so the split is (x, B_1)
	DarbouxModel m1(1);
	VectorField xa = m1.frame().A[0].scaled(m1.var(0));
	VectorField br = lie_bracket(xa, m1.frame().B[0]);
	CHECK(br == m1.reeb().scaled(m1.var(0)));
	auto [h3, rest3] = bracket_tangent_split(m1, xa, m1.frame().B[0]);
	auto [h4, rest4] = decompose(m1, br);
	CHECK(ratfn_eq(h3, m1.var(0)));
	CHECK(ratfn_eq(h3, h4));
	CHECK(rest3 == rest4);
	CHECK(rest3 == m1.frame().B[0]);

	CHECK_THROWS_AS(bracket_tangent_split(m, m.reeb(), m.frame().A[0]),
	                NotTangent);
}

TEST_CASE("matrix_action")
{
	DarbouxModel m(1);
	// H = 1 transports by the Reeb field
	verify::GenConfig cfg;
	cfg.n = 1;
	{
		verify::Gen g(verify::trial_seed(41, "act-one", 0), cfg);
		TangentCoords t = g.coords(m);
		TangentCoords moved = matrix_action(m, m.scalar(1), t);
		CHECK(ratfn_eq(moved.F[0], m.reeb().apply(t.F[0])));
		CHECK(ratfn_eq(moved.G[0], m.reeb().apply(t.G[0])));
	}
	// H = z on A_1 gives -(1/2) A_1
	TangentCoords a1{{m.scalar(1)}, {RatFn(1)}};
	TangentCoords acted = matrix_action(m, m.var(2), a1);
	CHECK(ratfn_eq(acted.F[0], m.scalar(1).scaled(Rat(-1, 2))));
	CHECK(acted.G[0].is_zero());
	CHECK(lie_bracket(hamiltonian_to_field(m, m.var(2)), m.frame().A[0]) ==
	      m.frame().A[0].scaled(m.scalar(1).scaled(Rat(-1, 2))));

	// partial traces per i, n = 3
	DarbouxModel m3(3);
	verify::GenConfig cfg3;
	cfg3.n = 3;
	for (int trial = 0; trial < 10; ++trial) {
		verify::Gen g(verify::trial_seed(43, "act-trace", trial), cfg3);
		RatFn h = g.hamiltonian();
		RatFn zh = m3.reeb().apply(h);
		for (int i = 0; i < 3; ++i) {
			const auto &a = m3.frame().A[i];
			const auto &b = m3.frame().B[i];
			CHECK(ratfn_eq(a.apply(b.apply(h)) - b.apply(a.apply(h)), zh));
		}
	}
}

TEST_CASE("density arithmetic")
{
	DarbouxModel m(1);
	Density d1(m.var(0), Rat(1, 2));
	Density d2(m.var(1), Rat(1, 2));
	CHECK((d1 + d2).weight() == Rat(1, 2));
	CHECK(ratfn_eq((d1 + d2).coeff(), m.var(0) + m.var(1)));
	Density prod = d1 * d2;
	CHECK(prod.weight() == Rat(1));
	CHECK(ratfn_eq(prod.coeff(), m.var(0) * m.var(1)));
	CHECK_THROWS_AS(d1 + Density(m.var(0), Rat(1)), WeightMismatch);
}

TEST_CASE("density_lie")
{
	DarbouxModel m(1);
	// X = Z: plain transport
	Density phi(m.var(0) * m.var(2), Rat(3, 4));
	Density moved = density_lie(m, m.reeb(), phi);
	CHECK(moved.weight() == Rat(3, 4));
	CHECK(ratfn_eq(moved.coeff(), m.var(0)));
	// X_z on Omega doubles it (n = 1)
	Density omega(m.scalar(1), Rat(1));
	Density scaled =
	    density_lie(m, hamiltonian_to_field(m, m.var(2)), omega);
	CHECK(scaled == Density(m.scalar(2), Rat(1)));
	// weight -1/(n+1) reproduces the Lagrange bracket
	verify::GenConfig cfg;
	cfg.n = 2;
	DarbouxModel m2(2);
	for (int trial = 0; trial < 25; ++trial) {
		verify::Gen g(verify::trial_seed(47, "density", trial), cfg);
		RatFn h1 = g.hamiltonian(), h2 = g.hamiltonian();
		Density lhs = density_lie(m2, hamiltonian_to_field(m2, h1),
		                          hamiltonian_density(m2, h2));
		CHECK(lhs == hamiltonian_density(m2, lagrange_bracket(m2, h1, h2)));
		CHECK(hamiltonian_density(m2, h2).weight() == Rat(-1, 3));
	}
	CHECK_THROWS_AS(density_lie(m, m.frame().A[0], phi), NotContact);
}

TEST_CASE("realize_tangent")
{
	DarbouxModel m(1);
	RealizedTangent zero = realize_tangent(m, VectorField(1));
	CHECK(zero.two_form.is_zero());
	CHECK(zero.weight_part.weight() == Rat(-1));

	// A_1 -> (y/2) dx^dy + dy^dz = alpha ^ (-dy)
	RealizedTangent ra = realize_tangent(m, m.frame().A[0]);
	DiffForm expected(1, 2);
	expected.add_component({0, 1}, m.var(1).scaled(Rat(1, 2)));
	expected.add_component({1, 2}, m.scalar(1));
	CHECK(ra.two_form == expected);
	CHECK(ra.two_form ==
	      wedge(m.alpha(), DiffForm::basis(1, {1}).scaled(m.scalar(-1))));
	CHECK(vanishes_on_distribution(m, ra.two_form));

	CHECK_THROWS_AS(realize_tangent(m, m.reeb()), NotTangent);

	// equivariance, one seeded instance per n
	for (int n = 1; n <= 2; ++n) {
		DarbouxModel mn(n);
		verify::GenConfig cfg;
		cfg.n = n;
		verify::Gen g(verify::trial_seed(53, "realize", n), cfg);
		RatFn h = g.hamiltonian();
		VectorField y = g.tangent_field(mn);
		RealizedTangent lhs = realized_lie(mn, h, realize_tangent(mn, y));
		RealizedTangent rhs = realize_tangent(
		    mn, lie_bracket(hamiltonian_to_field(mn, h), y));
		CHECK(realized_equal(lhs, rhs));
	}
}

TEST_CASE("realization is injective on the frame")
{
	for (int n = 1; n <= 2; ++n) {
		DarbouxModel m(n);
		RatFnMatrix rows;
		auto add_row = [&](const VectorField &t) {
			RealizedTangent r = realize_tangent(m, t);
			std::vector<RatFn> row;
			// flatten over all increasing pairs
			for (int a = 0; a < var_count(n); ++a)
				for (int b = a + 1; b < var_count(n); ++b)
					row.push_back(r.two_form.component({a, b}));
			rows.push_back(std::move(row));
		};
		for (int i = 0; i < n; ++i)
			add_row(m.frame().A[i]);
		for (int i = 0; i < n; ++i)
			add_row(m.frame().B[i]);
		CHECK(matrix_rank(rows) == 2 * n);
	}
}

TEST_CASE("rescale_contact_form")
{
	DarbouxModel m(1);
	RescaledContact ident = rescale_contact_form(m, m.scalar(1));
	CHECK(ident.alpha == m.alpha());
	CHECK(ident.omega_vol == m.omega_vol());

	RatFn f = m.scalar(1) + m.var(0) * m.var(0);
	RescaledContact rc = rescale_contact_form(m, f);
	CHECK(rc.alpha == m.alpha().scaled(f));
	CHECK(rc.omega_vol == m.omega_vol().scaled(f * f));
	CHECK(ratfn_eq(rc.hamiltonian_of(hamiltonian_to_field(m, m.var(2))),
	               f * m.var(2)));

	CHECK_THROWS_AS(rescale_contact_form(m, RatFn(1)), ZeroFunction);
}

TEST_CASE("rescale_check_integrand")
{
	DarbouxModel m(1);
	CHECK(rescale_check_integrand(m, m.scalar(1), m.var(2) + m.scalar(1)));
	RatFn f = m.scalar(1) + m.var(0) * m.var(0);
	RatFn h = m.scalar(1) + m.var(2) * m.var(2);
	CHECK(rescale_check_integrand(m, f, h));

	DarbouxModel m2(2);
	verify::GenConfig cfg;
	cfg.n = 2;
	cfg.max_degree = 2;
	for (int trial = 0; trial < 10; ++trial) {
		verify::Gen g(verify::trial_seed(59, "integrand", trial), cfg);
		CHECK(rescale_check_integrand(m2, RatFn(g.poly_nonzero()),
		                              RatFn(g.poly_nonzero())));
	}
	CHECK_THROWS_AS(rescale_check_integrand(m, RatFn(1), h), ZeroFunction);
	CHECK_THROWS_AS(rescale_check_integrand(m, f, RatFn(1)), ZeroFunction);
}

TEST_CASE("reeb_of")
{
	DarbouxModel m(1);
	CHECK(reeb_of(m, m.alpha()) == m.reeb());
	// alpha' = 2 alpha halves the Reeb field
	VectorField half_z = m.reeb().scaled(m.scalar(1).scaled(Rat(1, 2)));
	CHECK(reeb_of(m, m.alpha().scaled(m.scalar(2))) == half_z);
	// alpha' = (1+x^2) alpha, verified by substitution
	RatFn f = m.scalar(1) + m.var(0) * m.var(0);
	DiffForm alpha_p = m.alpha().scaled(f);
	VectorField z = reeb_of(m, alpha_p);
	CHECK(interior(z, ext_d(alpha_p)).is_zero());
	CHECK(ratfn_eq(interior(z, alpha_p).scalar(), m.scalar(1)));
	// dz alone is not contact (its differential vanishes)
	CHECK_THROWS_AS(reeb_of(m, DiffForm::basis(1, {2})), NotContact);
}

TEST_CASE("generic_contact_field")
{
	DarbouxModel m(1);
	CHECK(generic_contact_field(m, m.alpha(), m.scalar(1)) == m.reeb());
	// independence of the rescaling representative
	VectorField via_alpha = generic_contact_field(m, m.alpha(), m.var(2));
	VectorField via_double = generic_contact_field(
	    m, m.alpha().scaled(m.scalar(2)), m.var(2).scaled(Rat(2)));
	CHECK(via_alpha == via_double);
	CHECK(via_alpha == hamiltonian_to_field(m, m.var(2)));

	RatFn f = m.scalar(1) + m.var(0) * m.var(0);
	VectorField via_f =
	    generic_contact_field(m, m.alpha().scaled(f), f * m.var(0));
	CHECK(via_f == hamiltonian_to_field(m, m.var(0)));

	CHECK_THROWS_AS(
	    generic_contact_field(m, DiffForm::basis(1, {2}), m.scalar(1)),
	    NotContact);
}
