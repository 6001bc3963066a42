#pragma once

#include "arthur/lfactors.hpp"
#include "arthur/parameters.hpp"

#include <optional>
#include <vector>

namespace arthur {

/// Packet-level tempered inducing data: the Levi and the Satake units of tau.
/// The generic flag is an assumption carried along, never computed.
struct TemperedDatum {
    LeviSubset theta;
    UnramifiedParameter unit_parameter;
    bool generic = true;
};

/// I(nu, tau) in the Langlands setting.
class StandardModuleDatum {
public:
    /// Throws ValidationError unless tau is tempered, nu has the right length,
    /// is zero on theta and strictly positive on the other simple roots
    /// (hence strictly positive on every nilradical root).
    StandardModuleDatum(TemperedDatum tau, ExponentVector nu, std::vector<int> weyl_word = {});

    const TemperedDatum& tau() const { return tau_; }
    const RootDatum& datum() const { return tau_.unit_parameter.datum; }
    const LeviSubset& theta() const { return tau_.theta; }
    /// Simple-root evaluation exponents.
    const ExponentVector& nu() const { return nu_; }
    /// nu as a combination of the coroots of the dual; rank one: 1/2 <-> q^1.
    ExponentVector nu_coordinates() const { return root_coordinates(datum(), nu_); }
    const std::vector<int>& weyl_word() const { return word_; }

    /// tau twisted by nu.
    UnramifiedParameter parameter() const { return recompose(tau_.unit_parameter, nu_); }

private:
    TemperedDatum tau_;
    ExponentVector nu_;
    std::vector<int> word_;
};

/// Standard module for a rank-one-style description: units plus nu given in
/// root coordinates (see nu_coordinates). theta is read off nu.
StandardModuleDatum standard_module_from_coordinates(const UnramifiedParameter& units, const ExponentVector& c,
                                                     bool generic = true);

/// Langlands data of an arbitrary unramified parameter: exponents made
/// dominant, the same word applied to the units.
StandardModuleDatum standard_module_from_langlands(const UnramifiedParameter& p, bool generic = true);

StandardModuleDatum standard_module_datum(const ArthurParameter& psi, bool generic = true);

struct IrreducibilityVerdict {
    bool irreducible = true;
    LocalLFactor denominator;          ///< L(1, r_tilde) eigen-data
    std::vector<Root> witnesses;       ///< roots whose factor vanishes at s = 1
};

IrreducibilityVerdict irreducibility_verdict(const StandardModuleDatum& sm);

enum class Genericity { Generic, NotGeneric, NotApplicable };
const char* to_text(Genericity g);

/// J(nu, tau) is generic iff I(nu, tau) is irreducible, provided tau is
/// generic; otherwise NotApplicable.
Genericity genericity_verdict(const StandardModuleDatum& sm);

/// Minimal root of S (root order) with b(H) = 2, trivial on phi0 and outside
/// theta. Throws ValidationError for trivial rho and InvariantViolation if
/// no root qualifies.
Root witness_root(const ArthurParameter& psi, const LeviSubset& theta);

enum class PacketKind { Tempered, NonTempered };
const char* to_text(PacketKind k);

struct VanishingCertificate {
    QMonomial eigenvalue;
    Rational s{1};
    friend bool operator==(const VanishingCertificate&, const VanishingCertificate&) = default;
};

struct PacketVerdict {
    PacketKind kind = PacketKind::Tempered;
    std::optional<Root> witness;
    std::optional<VanishingCertificate> certificate;
    LeviSubset levi;
    std::vector<int> weyl_word;            ///< dominantizing word
    std::vector<Root> dominant_S;          ///< S after the word
    std::vector<Root> full_product_roots;  ///< every root whose r_tilde factor vanishes at 1
    bool witness_vanishes = false;
    bool full_product_vanishes = false;
};

/// Tempered iff rho is trivial; otherwise NonTempered with a witness whose
/// r_tilde eigenvalue is exactly q. Both the witness computation and the
/// full product over the nilradical are evaluated and must agree
/// (InvariantViolation otherwise).
PacketVerdict classify_packet(const ArthurParameter& psi);

/// Same engine for a Langlands parameter p together with a set S of roots
/// carrying the nilpositive element, neither necessarily dominant. Every
/// root of S must have exponent 1 on p (ValidationError otherwise).
PacketVerdict classify_langlands(const UnramifiedParameter& p, const std::vector<Root>& S);

/// Throws InvariantViolation unless NonTempered comes with a witness and a
/// certificate of unit 1 and exponent 1.
void check_verdict(const PacketVerdict& v);

} // namespace arthur
