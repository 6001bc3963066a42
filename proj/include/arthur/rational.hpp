#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace arthur {

/// Exact rational number over int64 with gcd-normalised storage (den > 0).
/// Intermediate products use 128-bit arithmetic; a result that does not fit
/// back into int64 throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Canonical form "num/den" with den > 0 and gcd 1; integers keep "/1".
std::string canonical(const Rational& r);

/// Short human form: "3", "-1/2".
std::string pretty(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Accepts "n" or "n/d" (optional sign, surrounding blanks ignored).
/// Throws ValidationError on anything else, including d == 0.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

} // namespace arthur
