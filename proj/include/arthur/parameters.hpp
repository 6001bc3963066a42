#pragma once

#include "arthur/nilpotent.hpp"
#include "arthur/qmonomial.hpp"
#include "arthur/root_datum.hpp"

#include <vector>

namespace arthur {

/// Frobenius eigen-data modulo the center: one QMonomial per simple root of
/// the (dual) datum, coords[i] = a_i(t).
struct UnramifiedParameter {
    RootDatum datum;
    std::vector<QMonomial> coords;

    /// Throws ValidationError if coords.size() != rank.
    UnramifiedParameter(RootDatum d, std::vector<QMonomial> c);

    static UnramifiedParameter trivial(const RootDatum& d);

    QMonomial evaluate(const Root& r) const { return evaluate_root(r, coords); }

    friend bool operator==(const UnramifiedParameter&, const UnramifiedParameter&) = default;
};

/// Entry i is the q-exponent of a_i; i.e. coordinates of a real torus
/// element in the simple-root evaluation basis.
using ExponentVector = std::vector<Rational>;

/// Exponent vector nu written as sum c_i a_i^vee (coroots of the dual, i.e.
/// roots of the group). In rank one, c = 1/2 means evaluation q^1.
ExponentVector root_coordinates(const RootDatum& d, const ExponentVector& nu);
ExponentVector from_root_coordinates(const RootDatum& d, const ExponentVector& c);

/// psi = (phi, rho) with phi bounded and rho centralizing phi.
class ArthurParameter {
public:
    const UnramifiedParameter& phi() const { return phi_; }
    const SL2Data& rho() const { return rho_; }
    const RootDatum& datum() const { return phi_.datum; }

    friend ArthurParameter make_arthur_parameter(UnramifiedParameter phi, SL2Data rho);
    friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;

private:
    ArthurParameter(UnramifiedParameter phi, SL2Data rho) : phi_(std::move(phi)), rho_(std::move(rho)) {}

    UnramifiedParameter phi_;
    SL2Data rho_;
};

/// Throws ValidationError when phi has a nonzero exponent, when (H, S) fails
/// the structural checks (including H != 0 with S empty), or when some root
/// of S does not evaluate to 1 on phi.
ArthurParameter make_arthur_parameter(UnramifiedParameter phi, SL2Data rho);

/// phi_psi(Frob) = phi(Frob) * rho(diag(q^{1/2}, q^{-1/2})): coordinate i
/// picks up q^{d_i / 2}.
UnramifiedParameter phi_psi(const ArthurParameter& psi);

struct Phi0PhiPlus {
    UnramifiedParameter phi0; ///< unit parts
    ExponentVector phiplus;   ///< exponents
};

Phi0PhiPlus decompose_phi0_phiplus(const UnramifiedParameter& p);
UnramifiedParameter recompose(const UnramifiedParameter& phi0, const ExponentVector& phiplus);

bool is_tempered(const UnramifiedParameter& p);

/// Simple indices where nu vanishes. Throws ValidationError unless nu >= 0
/// entrywise.
LeviSubset defining_levi(const ExponentVector& nu, const RootDatum& d);

struct RecoveredPsi {
    UnramifiedParameter phi0;
    WeightedDynkinDiagram H;
    std::vector<int> word; ///< Weyl word used to make the exponents dominant
};

/// Inverse of phi_psi on its image, up to Weyl conjugacy. Throws
/// ValidationError ("not of Arthur type") when an exponent is not
/// half-integral or 2 * dominant exponents leave {0,1,2}.
RecoveredPsi recover_psi(const UnramifiedParameter& p);

} // namespace arthur
