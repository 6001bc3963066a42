#include "arthur/qmonomial.hpp"

#include <ostream>

namespace arthur {

QMonomial::QMonomial(Rational unit_angle, Rational exponent)
    : unit_(frac(unit_angle)), exponent_(exponent)
{
}

QMonomial& QMonomial::operator*=(const QMonomial& other)
{
    unit_ = frac(unit_ + other.unit_);
    exponent_ += other.exponent_;
    return *this;
}

std::string to_text(const QMonomial& m)
{
    std::string unit;
    if (m.unit() != 0)
        unit = "zeta[" + pretty(m.unit()) + "]";
    std::string power;
    if (m.exponent() == 1)
        power = "q";
    else if (m.exponent() != 0)
        power = "q^(" + pretty(m.exponent()) + ")";
    if (unit.empty() && power.empty())
        return "1";
    if (unit.empty())
        return power;
    if (power.empty())
        return unit;
    return unit + "*" + power;
}

std::ostream& operator<<(std::ostream& os, const QMonomial& m) { return os << to_text(m); }

} // namespace arthur
