#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include "contactkit/contact.hpp"
#include "contactkit/verify.hpp"

#include <doctest.h>

using namespace contactkit;

namespace {

RatFn fn(const DarbouxModel &m, long v) { return m.scalar(v); }

} // namespace

TEST_CASE("wedge basics")
{
	DarbouxModel m(1);
	DiffForm dx = DiffForm::basis(1, {0});
	DiffForm dy = DiffForm::basis(1, {1});
	DiffForm dxdy = wedge(dx, dy);
	CHECK(dxdy.comps().size() == 1);
	CHECK(ratfn_eq(dxdy.comps().at({0, 1}), fn(m, 1)));
	// antisymmetry of 1-forms
	CHECK(wedge(dy, dx) == -dxdy);
	CHECK(wedge(m.alpha(), m.alpha()).is_zero());
	// alpha ^ dalpha = dx ^ dy ^ dz at n = 1
	DiffForm vol = wedge(m.alpha(), m.d_alpha());
	DiffForm expected(1, 3);
	expected.add_component({0, 1, 2}, fn(m, 1));
	CHECK(vol == expected);
	CHECK_THROWS_AS(wedge(dx, DiffForm::basis(2, {0})), DimensionMismatch);
	// degree sum beyond the top gives the zero form of that degree
	DiffForm overflow = wedge(m.omega_vol(), m.alpha());
	CHECK(overflow.is_zero());
	CHECK(overflow.degree() == 4);
}

TEST_CASE("wedge graded commutativity on random forms")
{
	verify::GenConfig cfg;
	cfg.n = 2;
	for (int trial = 0; trial < 50; ++trial) {
		verify::Gen g(verify::trial_seed(3, "wedge-comm", trial), cfg);
		DarbouxModel m(2);
		int p = static_cast<int>(g.uniform(3));
		int q = static_cast<int>(g.uniform(3));
		DiffForm a = g.form(m, p), b = g.form(m, q);
		DiffForm ab = wedge(a, b), ba = wedge(b, a);
		CHECK(ab == ((p * q) % 2 == 1 ? -ba : ba));
	}
}

TEST_CASE("exterior derivative")
{
	DarbouxModel m(1);
	// d(x dy) = dx ^ dy
	DiffForm xdy(1, 1);
	xdy.add_component({1}, m.var(0));
	DiffForm expected(1, 2);
	expected.add_component({0, 1}, fn(m, 1));
	CHECK(ext_d(xdy) == expected);
	// d alpha = sum dx_i ^ dy_i
	for (int n = 1; n <= 3; ++n) {
		DarbouxModel mn(n);
		DiffForm want(n, 2);
		for (int i = 0; i < n; ++i)
			want.add_component({i, n + i}, mn.scalar(1));
		CHECK(mn.d_alpha() == want);
		CHECK(ext_d(mn.d_alpha()).is_zero());
	}
	// top degree maps to the empty zero form
	CHECK(ext_d(m.omega_vol()).is_zero());
	CHECK(ext_d(m.omega_vol()).degree() == 4);
}

TEST_CASE("exterior derivative is an anti-derivation")
{
	verify::GenConfig cfg;
	cfg.n = 2;
	for (int trial = 0; trial < 50; ++trial) {
		verify::Gen g(verify::trial_seed(7, "d-leibniz", trial), cfg);
		DarbouxModel m(2);
		int p = static_cast<int>(g.uniform(3));
		int q = static_cast<int>(g.uniform(3));
		DiffForm a = g.form(m, p), b = g.form(m, q);
		DiffForm lhs = ext_d(wedge(a, b));
		DiffForm rhs = wedge(ext_d(a), b) +
		               (p % 2 == 1 ? -wedge(a, ext_d(b))
		                           : wedge(a, ext_d(b)));
		CHECK(lhs == rhs);
	}
}

TEST_CASE("interior product")
{
	DarbouxModel m(1);
	CHECK(ratfn_eq(interior(m.reeb(), m.alpha()).scalar(), fn(m, 1)));
	DiffForm once = interior(m.frame().B[0], m.d_alpha());
	CHECK(ratfn_eq(interior(m.frame().A[0], once).scalar(), fn(m, 1)));
	CHECK_THROWS_AS(interior(m.reeb(), DiffForm::function(m.var(0))),
	                DegreeError);
	// frame contractions of dalpha are the Kronecker delta
	DarbouxModel m2(2);
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) {
			RatFn ab = interior(m2.frame().A[i],
			                    interior(m2.frame().B[j], m2.d_alpha()))
			               .scalar();
			CHECK(ratfn_eq(ab, m2.scalar(i == j ? 1 : 0)));
			RatFn aa = interior(m2.frame().A[i],
			                    interior(m2.frame().A[j], m2.d_alpha()))
			               .scalar();
			CHECK(aa.is_zero());
			RatFn bb = interior(m2.frame().B[i],
			                    interior(m2.frame().B[j], m2.d_alpha()))
			               .scalar();
			CHECK(bb.is_zero());
		}
}

TEST_CASE("interior is an anti-derivation with i_X i_X = 0")
{
	verify::GenConfig cfg;
	cfg.n = 2;
	for (int trial = 0; trial < 50; ++trial) {
		verify::Gen g(verify::trial_seed(9, "interior-sq", trial), cfg);
		DarbouxModel m(2);
		VectorField x = g.vector_field(m);
		DiffForm w = g.form(m, 2 + static_cast<int>(g.uniform(2)));
		CHECK(interior(x, interior(x, w)).is_zero());
		// i_X(a ^ b) = i_X a ^ b + (-1)^|a| a ^ i_X b
		DiffForm a = g.form(m, 1), b = g.form(m, 2);
		DiffForm lhs = interior(x, wedge(a, b));
		DiffForm rhs = wedge(interior(x, a), b) - wedge(a, interior(x, b));
		CHECK(lhs == rhs);
	}
}

TEST_CASE("lie bracket")
{
	DarbouxModel m(1);
	CHECK(lie_bracket(m.frame().A[0], m.frame().B[0]) == m.reeb());
	VectorField a = m.frame().A[0];
	CHECK(lie_bracket(a, a).is_zero());
	// [X_x, X_y] = d/dz
	VectorField xx(1), xy(1);
	xx.set_coeff(1, fn(m, 1));
	xx.set_coeff(2, m.var(0).scaled(Rat(1, 2)));
	xy.set_coeff(0, fn(m, -1));
	xy.set_coeff(2, m.var(1).scaled(Rat(1, 2)));
	CHECK(lie_bracket(xx, xy) == m.reeb());
	CHECK_THROWS_AS(lie_bracket(a, VectorField(2)), DimensionMismatch);
}

TEST_CASE("lie derivative of forms")
{
	DarbouxModel m(1);
	CHECK(lie_derivative_form(m.reeb(), m.alpha()).is_zero());
	// L_{X_z} alpha = alpha with X_z = (x/2) d/dx + (y/2) d/dy + z d/dz
	VectorField xz(1);
	xz.set_coeff(0, m.var(0).scaled(Rat(1, 2)));
	xz.set_coeff(1, m.var(1).scaled(Rat(1, 2)));
	xz.set_coeff(2, m.var(2));
	CHECK(lie_derivative_form(xz, m.alpha()) == m.alpha());
	// Leibniz over a function factor, randomized
	verify::GenConfig cfg;
	cfg.n = 1;
	for (int trial = 0; trial < 50; ++trial) {
		verify::Gen g(verify::trial_seed(13, "lie-leibniz", trial), cfg);
		VectorField x = g.vector_field(m);
		RatFn f(g.poly());
		DiffForm w = g.form(m, 1 + static_cast<int>(g.uniform(2)));
		CHECK(lie_derivative_form(x, w.scaled(f)) ==
		      w.scaled(x.apply(f)) + lie_derivative_form(x, w).scaled(f));
	}
}

TEST_CASE("solve_linear")
{
	DarbouxModel m(1);
	RatFn one = fn(m, 1), zero(1);
	SUBCASE("identity")
	{
		RatFnMatrix id{{one, zero}, {zero, one}};
		std::vector<RatFn> rhs{m.var(0), m.var(2)};
		auto sol = solve_linear(id, rhs);
		CHECK(ratfn_eq(sol[0], rhs[0]));
		CHECK(ratfn_eq(sol[1], rhs[1]));
	}
	SUBCASE("symplectic 2x2")
	{
		RatFnMatrix j{{zero, one}, {-one, zero}};
		auto sol = solve_linear(j, {one, zero});
		// Mtx * sol = rhs pins (0, 1): row one reads x_2 = 1
		CHECK(sol[0].is_zero());
		CHECK(ratfn_eq(sol[1], one));
		CHECK(ratfn_eq(j[0][0] * sol[0] + j[0][1] * sol[1], one));
		CHECK((j[1][0] * sol[0] + j[1][1] * sol[1]).is_zero());
	}
	SUBCASE("singular")
	{
		RatFnMatrix sing{{one, one}, {one, one}};
		CHECK_THROWS_AS(solve_linear(sing, {one, zero}), SingularMatrix);
	}
	SUBCASE("rectangular consistent and inconsistent")
	{
		RatFnMatrix tall{{one, zero}, {zero, one}, {one, one}};
		auto sol = solve_linear(tall, {m.var(0), m.var(1),
		                               m.var(0) + m.var(1)});
		CHECK(ratfn_eq(sol[0], m.var(0)));
		CHECK(ratfn_eq(sol[1], m.var(1)));
		CHECK_THROWS_AS(solve_linear(tall, {one, one, one}),
		                InconsistentSystem);
	}
}

TEST_CASE("solve_linear against the frame Gram matrix of dalpha")
{
	for (int n = 1; n <= 2; ++n) {
		DarbouxModel m(n);
		std::vector<const VectorField *> frame;
		for (int i = 0; i < n; ++i)
			frame.push_back(&m.frame().A[i]);
		for (int i = 0; i < n; ++i)
			frame.push_back(&m.frame().B[i]);
		RatFnMatrix gram(2 * n, std::vector<RatFn>(2 * n, RatFn(n)));
		for (int i = 0; i < 2 * n; ++i)
			for (int j = 0; j < 2 * n; ++j)
				gram[i][j] = interior(*frame[i],
				                      interior(*frame[j], m.d_alpha()))
				                 .scalar();
		verify::GenConfig cfg;
		cfg.n = n;
		verify::Gen g(verify::trial_seed(17, "gram", n), cfg);
		DiffForm beta = g.form(m, 1);
		std::vector<RatFn> rhs;
		for (int i = 0; i < 2 * n; ++i)
			rhs.push_back(interior(*frame[i], beta).scalar());
		auto sol = solve_linear(gram, rhs);
		for (int i = 0; i < 2 * n; ++i) {
			RatFn acc(n);
			for (int j = 0; j < 2 * n; ++j)
				acc = acc + gram[i][j] * sol[j];
			CHECK(ratfn_eq(acc, rhs[i]));
		}
	}
}

TEST_CASE("matrix_rank")
{
	DarbouxModel m(1);
	RatFn one = fn(m, 1), zero(1);
	CHECK(matrix_rank({{one, zero}, {zero, one}}) == 2);
	CHECK(matrix_rank({{one, one}, {one, one}}) == 1);
	CHECK(matrix_rank({{zero, zero}}) == 0);
}
