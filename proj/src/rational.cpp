#include "arthur/rational.hpp"

#include "arthur/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace arthur {

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw ValidationError("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    auto g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                             static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o)
{
    return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0)
        throw ValidationError("rational division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    auto lhs = static_cast<__int128>(a.num_) * b.den_;
    auto rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string canonical(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string pretty(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return canonical(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << pretty(r); }

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError("not a rational number: '" + std::string(whole) + "'");
    return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto body = trim(text);
    auto slash = body.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(body, text));
    auto num = parse_int(body.substr(0, slash), text);
    auto den = parse_int(body.substr(slash + 1), text);
    if (den == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational frac(const Rational& r)
{
    // Floor division keeps the remainder in [0, den).
    auto n = r.numerator(), d = r.denominator();
    auto m = n % d;
    if (m < 0)
        m += d;
    return Rational(m, d);
}

} // namespace arthur
