#pragma once

#include "contactkit/exterior.hpp"
#include "contactkit/linsolve.hpp"

#include <utility>

namespace contactkit {

/// Contact Hamiltonian H = alpha(X). Invariantly a density of weight
/// -1/(n+1); as a scalar it is an ordinary rational function.
using ContactHamiltonian = RatFn;

/// Frame {A_1..A_n, B_1..B_n, Z} realizing the Heisenberg relations
/// [A_i,B_j] = delta_ij Z with A_i, B_j tangent and Z the Reeb field.
struct HeisenbergFrame
{
	explicit HeisenbergFrame(int n) : Z(n) {}
	std::vector<VectorField> A;
	std::vector<VectorField> B;
	VectorField Z;
};

/// Tensor density f * Omega^weight relative to the model volume form.
class Density {
  public:
	Density(RatFn coeff, Rat weight)
	    : coeff_(std::move(coeff)), weight_(std::move(weight))
	{}

	const RatFn &coeff() const { return coeff_; }
	const Rat &weight() const { return weight_; }

	Density operator+(const Density &o) const
	{
		if (weight_ != o.weight_)
			throw WeightMismatch("density addition across weights");
		return Density(coeff_ + o.coeff_, weight_);
	}
	Density operator*(const Density &o) const
	{
		return Density(coeff_ * o.coeff_, weight_ + o.weight_);
	}

	bool operator==(const Density &o) const
	{
		return weight_ == o.weight_ && ratfn_eq(coeff_, o.coeff_);
	}

  private:
	RatFn coeff_;
	Rat weight_;
};

/// Frame coordinates (F, G) of a tangent field X = sum F_i A_i + G_i B_i.
struct TangentCoords
{
	std::vector<RatFn> F;
	std::vector<RatFn> G;
};

bool operator==(const TangentCoords &a, const TangentCoords &b);

/// Image of a tangent field under the geometric realization: a 2-form
/// vanishing on the contact distribution tensored with a density of weight
/// -2/(n+1).
struct RealizedTangent
{
	DiffForm two_form;
	Density weight_part;
};

/// Equality after folding the density coefficient into the 2-form.
bool realized_equal(const RealizedTangent &a, const RealizedTangent &b);

/// The rescaled bundle alpha' = f alpha with its derived data.
struct RescaledContact
{
	DiffForm alpha;
	DiffForm d_alpha;
	DiffForm omega_vol;
	RatFn factor;

	/// Hamiltonian of X with respect to the rescaled form, alpha'(X).
	RatFn hamiltonian_of(const VectorField &x) const;
};

/// The standard model on R^{2n+1}: alpha = sum (x_i dy_i - y_i dx_i)/2 + dz
/// with its Reeb field, volume form and Heisenberg frame. All structural
/// invariants are checked at construction.
class DarbouxModel {
  public:
	explicit DarbouxModel(int n);

	int n() const { return n_; }
	const DiffForm &alpha() const { return alpha_; }
	const DiffForm &d_alpha() const { return d_alpha_; }
	const DiffForm &omega_vol() const { return omega_vol_; }
	const HeisenbergFrame &frame() const { return frame_; }
	const VectorField &reeb() const { return frame_.Z; }

	// handy scalars/constructors bound to this model's dimension
	RatFn scalar(long v) const { return RatFn::constant(n_, Rat(v)); }
	RatFn var(int v) const { return RatFn::variable(n_, v); }

  private:
	int n_;
	DiffForm alpha_;
	DiffForm d_alpha_;
	DiffForm omega_vol_;
	HeisenbergFrame frame_;
};

/// alpha(X); the Hamiltonian of a contact field, defined for any field.
ContactHamiltonian field_to_hamiltonian(const DarbouxModel &m,
                                        const VectorField &x);

/// H viewed invariantly: the density H alpha^{-1} of weight -1/(n+1).
Density hamiltonian_density(const DarbouxModel &m,
                            const ContactHamiltonian &h);

/// X_H = H Z - sum(A_i(H) B_i - B_i(H) A_i).
VectorField hamiltonian_to_field(const DarbouxModel &m,
                                 const ContactHamiltonian &h);

/// f_X with L_X alpha = f_X alpha, checked exactly; NotContact otherwise.
RatFn contact_factor(const DarbouxModel &m, const VectorField &x);

/// {H1,H2} = X_H1(H2) - Z(H1) H2.
ContactHamiltonian lagrange_bracket(const DarbouxModel &m,
                                    const ContactHamiltonian &h1,
                                    const ContactHamiltonian &h2);

/// Unique splitting X = X_H + Y with Y tangent; returns (H, Y).
std::pair<ContactHamiltonian, VectorField> decompose(const DarbouxModel &m,
                                                     const VectorField &x);

/// Frame coordinates of a tangent field; NotTangent when alpha(Y) != 0.
TangentCoords tangent_coords(const DarbouxModel &m, const VectorField &y);

/// sum F_i A_i + G_i B_i.
VectorField reconstruct_tangent(const DarbouxModel &m,
                                const TangentCoords &t);

/// H_{X,Y} = alpha([X,Y]) = -i_Y i_X d alpha for tangent X, Y; the skew
/// pairing with H_{A_i,B_i} = +1.
ContactHamiltonian pairing(const DarbouxModel &m, const VectorField &x,
                           const VectorField &y);

/// decompose([X,Y]) for tangent X, Y; the Hamiltonian part is pairing(X,Y).
std::pair<ContactHamiltonian, VectorField>
bracket_tangent_split(const DarbouxModel &m, const VectorField &x,
                      const VectorField &y);

/// First-order 2n x 2n matrix action of X_H on frame coordinates; equals
/// the coordinates of [X_H, Y].
TangentCoords matrix_action(const DarbouxModel &m,
                            const ContactHamiltonian &h,
                            const TangentCoords &t);

/// L_X(f Omega^w) = (X(f) + w(n+1) f_X f) Omega^w for contact X.
Density density_lie(const DarbouxModel &m, const VectorField &x,
                    const Density &phi);

/// Y -> (-alpha ^ i_Y d alpha) tensor alpha^{-2}; NotTangent otherwise.
RealizedTangent realize_tangent(const DarbouxModel &m, const VectorField &y);

/// Lie derivative of a realized tangent along X_H, Leibniz over the two
/// tensor factors.
RealizedTangent realized_lie(const DarbouxModel &m,
                             const ContactHamiltonian &h,
                             const RealizedTangent &rt);

/// Membership predicate for 2-forms vanishing on the contact distribution:
/// all double contractions with frame tangent fields vanish.
bool vanishes_on_distribution(const DarbouxModel &m, const DiffForm &w);

/// alpha' = f alpha with dalpha', Omega' = f^{n+1} Omega (verified
/// symbolically); ZeroFunction when f = 0.
RescaledContact rescale_contact_form(const DarbouxModel &m, const RatFn &f);

/// (fH)^{-(n+1)} f^{n+1} = H^{-(n+1)} against the volume coefficient —
/// the invariance of the integrand under rescaling.
bool rescale_check_integrand(const DarbouxModel &m, const RatFn &f,
                             const ContactHamiltonian &h);

/// Reeb field of a contact form on the model: i_Z' dalpha' = 0,
/// alpha'(Z') = 1, by exact linear solve; NotContact otherwise.
VectorField reeb_of(const DarbouxModel &m, const DiffForm &alpha_p);

/// The contact field X with alpha'(X) = H' for an arbitrary contact form
/// alpha' on the model; reduces to hamiltonian_to_field for the Darboux
/// alpha and is independent of the rescaling representative.
VectorField generic_contact_field(const DarbouxModel &m,
                                  const DiffForm &alpha_p, const RatFn &h_p);

} // namespace contactkit
