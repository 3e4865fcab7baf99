#pragma once

#include "contactkit/contact.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>

namespace contactkit::verify {

/// Budget for one randomized stream. Identical configs produce identical
/// streams.
struct GenConfig
{
	std::uint64_t seed = 0;
	int n = 1;
	int max_degree = 3;
	int max_terms = 4;
	int coeff_bound = 9;
};

void validate(const GenConfig &cfg);

/// Deterministic value generator over one seeded stream.
class Gen {
  public:
	explicit Gen(const GenConfig &cfg) : Gen(cfg.seed, cfg) {}
	Gen(std::uint64_t seed, const GenConfig &cfg) : cfg_(cfg), rng_(seed)
	{
		validate(cfg_);
	}

	std::uint64_t uniform(std::uint64_t bound); // [0, bound)
	Rat coeff();                                // nonzero, |c| <= coeff_bound
	Monomial monomial();                        // degree <= max_degree
	Poly poly();                                // <= max_terms monomials
	Poly poly_nonzero();
	RatFn hamiltonian() { return RatFn(poly()); }
	RatFn ratfn(); // quotient of a poly by a nonzero poly

	/// 1 + p^2 when plausibly_positive (the shape used for rescalings that
	/// should avoid real zeros), else 1 + p; p nonconstant with zero
	/// constant term either way, so the result is formally nonzero.
	RatFn rescale_fn(bool plausibly_positive = true);

	VectorField vector_field(const DarbouxModel &m);
	VectorField tangent_field(const DarbouxModel &m);
	TangentCoords coords(const DarbouxModel &m);
	DiffForm form(const DarbouxModel &m, int degree);

	const GenConfig &config() const { return cfg_; }

  private:
	GenConfig cfg_;
	std::mt19937_64 rng_;
};

/// Deterministic polynomial stream head for a config; same config, same
/// polynomial.
Poly gen_poly(const GenConfig &cfg);

struct TrialFailure
{
	int trial = 0;
	std::uint64_t seed = 0;
	std::string message;
};

struct SuiteReport
{
	std::string suite;
	int trials = 0;
	std::vector<TrialFailure> failures;
	double elapsed_seconds = 0.0;
	bool ok() const { return failures.empty(); }
};

/// Per-trial derived seed; replaying it reproduces the trial exactly.
std::uint64_t trial_seed(std::uint64_t base_seed, std::string_view suite,
                         int trial);

/// All registered suite ids.
const std::vector<std::string> &suite_names();

/// One-line statement of the identity a suite checks; UnknownSuite for
/// unregistered ids.
const std::string &suite_description(const std::string &id);

/// Runs `trials` seeded instances of a named identity suite; every
/// comparison is exact. UnknownSuite for unregistered ids.
SuiteReport run_suite(const std::string &id, const GenConfig &cfg,
                      int trials);

/// Generic runner: builds the model once, derives one seed per trial, and
/// records a failure whenever `body` throws CheckFailed.
using TrialBody = std::function<void(Gen &, const DarbouxModel &)>;
SuiteReport run_trials(const std::string &name, const GenConfig &cfg,
                       int trials, const TrialBody &body);

/// Thrown by suite bodies on a failed comparison.
struct CheckFailed : std::runtime_error
{
	explicit CheckFailed(const std::string &w) : std::runtime_error(w) {}
};

} // namespace contactkit::verify
