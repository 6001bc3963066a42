#pragma once

#include "arthur/rational.hpp"

#include <iosfwd>
#include <string>

namespace arthur {

/// An exact number zeta * q^a where zeta = exp(2 pi i * unit) is a root of
/// unity and q is a formal symbol standing for the residue-field cardinality.
///
/// The unit angle is kept reduced to [0, 1). Two monomials are equal iff both
/// components agree; since q is never specialised this is the only equality
/// that holds uniformly in q.
class QMonomial {
public:
    QMonomial() = default;
    QMonomial(Rational unit_angle, Rational exponent);

    static QMonomial one() { return {}; }
    static QMonomial q_power(Rational exponent) { return {Rational(0), exponent}; }
    static QMonomial root_of_unity(Rational angle) { return {angle, Rational(0)}; }

    const Rational& unit() const { return unit_; }
    const Rational& exponent() const { return exponent_; }

    bool is_one() const { return unit_ == 0 && exponent_ == 0; }
    bool has_trivial_unit() const { return unit_ == 0; }

    /// Strip the q-power, keeping the root of unity.
    QMonomial unit_part() const { return root_of_unity(unit_); }

    QMonomial inverse() const { return {-unit_, -exponent_}; }
    QMonomial pow(std::int64_t n) const { return {unit_ * n, exponent_ * n}; }

    QMonomial& operator*=(const QMonomial& other);
    friend QMonomial operator*(QMonomial a, const QMonomial& b) { return a *= b; }

    friend bool operator==(const QMonomial&, const QMonomial&) = default;

private:
    Rational unit_{0};
    Rational exponent_{0};
};

/// "1", "q", "q^(1/2)", "zeta[1/4]", "zeta[1/2]*q^(-1)".
std::string to_text(const QMonomial& m);
std::ostream& operator<<(std::ostream& os, const QMonomial& m);

} // namespace arthur
