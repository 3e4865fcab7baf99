#include "contactkit/linsolve.hpp"

#include <stdexcept>

namespace contactkit {

// Bareiss fraction-free elimination: rows are cleared to polynomials (each
// row scaled by the product of its denominators, a nonzero scalar), then
// every update (a*pivot - b*c)/prev divides exactly by Sylvester's
// identity, so intermediate entries stay polynomial minors instead of
// compounding fractions.
std::vector<RatFn> solve_linear(const RatFnMatrix &mtx,
                                const std::vector<RatFn> &rhs)
{
	const std::size_t rows = mtx.size();
	if (rows == 0 || rhs.size() != rows)
		throw DimensionMismatch("linear system shape mismatch");
	const std::size_t cols = mtx[0].size();
	for (const auto &row : mtx)
		if (row.size() != cols)
			throw DimensionMismatch("ragged matrix");
	if (rows < cols)
		throw DimensionMismatch("underdetermined system");
	const int n = mtx[0][0].dim();
	const Poly one = Poly::constant(n, Rat(1));

	std::vector<std::vector<Poly>> aug(rows);
	for (std::size_t r = 0; r < rows; ++r) {
		std::vector<const RatFn *> entries;
		entries.reserve(cols + 1);
		for (std::size_t c = 0; c < cols; ++c)
			entries.push_back(&mtx[r][c]);
		entries.push_back(&rhs[r]);
		aug[r].reserve(cols + 1);
		for (std::size_t c = 0; c <= cols; ++c) {
			Poly cleared = entries[c]->num();
			for (std::size_t o = 0; o <= cols; ++o)
				if (o != c && !entries[o]->is_poly())
					cleared = cleared * entries[o]->den();
			aug[r].push_back(std::move(cleared));
		}
	}

	// Jordan variant: rows above the pivot are reduced too, so after the
	// last column every diagonal entry equals the same determinant and the
	// solution components come out over one shared denominator.
	Poly prev = one;
	for (std::size_t col = 0; col < cols; ++col) {
		std::size_t sel = col;
		while (sel < rows && aug[sel][col].is_zero())
			++sel;
		if (sel == rows)
			throw SingularMatrix("no pivot in column " +
			                     std::to_string(col));
		std::swap(aug[sel], aug[col]);
		for (std::size_t r = 0; r < rows; ++r) {
			if (r == col)
				continue;
			for (std::size_t c = 0; c <= cols; ++c) {
				if (c == col)
					continue;
				Poly t = aug[col][col] * aug[r][c] -
				         aug[r][col] * aug[col][c];
				auto q = divide_exact(t, prev);
				if (!q)
					throw std::logic_error("fraction-free step not exact");
				aug[r][c] = std::move(*q);
			}
			aug[r][col] = Poly(n);
		}
		prev = aug[col][col];
	}

	for (std::size_t r = cols; r < rows; ++r)
		if (!aug[r][cols].is_zero())
			throw InconsistentSystem("inconsistent linear system");

	std::vector<RatFn> sol;
	sol.reserve(cols);
	for (std::size_t i = 0; i < cols; ++i)
		sol.emplace_back(aug[i][cols], aug[i][i]);
	return sol;
}

int matrix_rank(RatFnMatrix mtx)
{
	if (mtx.empty())
		return 0;
	const std::size_t rows = mtx.size();
	const std::size_t cols = mtx[0].size();
	int rank = 0;
	std::size_t pivot_row = 0;
	for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
		std::size_t sel = pivot_row;
		while (sel < rows && mtx[sel][col].is_zero())
			++sel;
		if (sel == rows)
			continue;
		std::swap(mtx[sel], mtx[pivot_row]);
		const RatFn pivot = mtx[pivot_row][col];
		for (std::size_t r = pivot_row + 1; r < rows; ++r) {
			if (mtx[r][col].is_zero())
				continue;
			RatFn factor = mtx[r][col] / pivot;
			for (std::size_t c = col; c < cols; ++c)
				mtx[r][c] = mtx[r][c] - factor * mtx[pivot_row][c];
		}
		++pivot_row;
		++rank;
	}
	return rank;
}

} // namespace contactkit
