#include "arthur/root_datum.hpp"

#include "arthur/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

namespace arthur {

void CartanSpec::validate() const
{
    auto fail = [this](const std::string& why) { throw ValidationError("invalid Cartan type " + name() + ": " + why); };
    switch (family) {
    case Family::A:
        if (rank < 1)
            fail("rank must be >= 1");
        break;
    case Family::B:
    case Family::C:
        if (rank < 2)
            fail("rank must be >= 2");
        break;
    case Family::D:
        if (rank < 3)
            fail("rank must be >= 3");
        break;
    case Family::G:
        if (rank != 2)
            fail("rank must be 2");
        break;
    default:
        throw ValidationError("unknown Cartan family");
    }
}

std::string CartanSpec::name() const
{
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Family parse_family(std::string_view letter)
{
    if (letter.size() == 1) {
        switch (letter.front()) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'G': return Family::G;
        default: break;
        }
    }
    throw ValidationError("unknown Cartan family '" + std::string(letter) + "' (expected A, B, C, D or G)");
}

CartanSpec parse_cartan(std::string_view name)
{
    if (name.size() < 2)
        throw ValidationError("bad Cartan type '" + std::string(name) + "'");
    CartanSpec spec{parse_family(name.substr(0, 1)), 0};
    auto digits = name.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 3)
        throw ValidationError("bad Cartan type '" + std::string(name) + "'");
    spec.rank = std::stoi(std::string(digits));
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------------------

Root Root::simple(std::size_t rank, std::size_t index)
{
    std::vector<int> c(rank, 0);
    c.at(index) = 1;
    return Root(std::move(c));
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_positive() const
{
    return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool Root::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const
{
    auto c = coeffs_;
    for (auto& x : c)
        x = -x;
    return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b)
{
    if (a.rank() != b.rank())
        throw ValidationError("root rank mismatch");
    auto c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeffs_[i];
    return Root(std::move(c));
}

std::string to_text(const Root& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        int c = r[i];
        if (c == 0)
            continue;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (std::abs(c) != 1)
            out += std::to_string(std::abs(c));
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Root& r) { return os << to_text(r); }

bool root_order_less(const Root& a, const Root& b)
{
    auto ha = a.height(), hb = b.height();
    if (ha != hb)
        return ha < hb;
    return b.coeffs() < a.coeffs();
}

// ---------------------------------------------------------------------------

LeviSubset::LeviSubset(std::vector<int> indices) : indices_(std::move(indices))
{
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() < 0)
        throw ValidationError("negative simple-root index in Levi subset");
}

LeviSubset LeviSubset::all(int rank)
{
    std::vector<int> idx(static_cast<std::size_t>(rank));
    std::iota(idx.begin(), idx.end(), 0);
    return LeviSubset(std::move(idx));
}

bool LeviSubset::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> standard_cartan(const CartanSpec& spec)
{
    auto n = static_cast<std::size_t>(spec.rank);
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        c[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
    switch (spec.family) {
    case Family::A:
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case Family::B:
        // a_n short: <a_{n-1}, a_n^vee> = -2.
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        c[n - 2][n - 1] = -2;
        break;
    case Family::C:
        // a_n long: <a_n, a_{n-1}^vee> = -2.
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        c[n - 1][n - 2] = -2;
        break;
    case Family::D:
        for (std::size_t i = 0; i + 2 < n; ++i)
            link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case Family::G:
        // a1 short, a2 long.
        c[0][1] = -1;
        c[1][0] = -3;
        break;
    }
    return c;
}

} // namespace

RootDatum::RootDatum(CartanSpec spec, std::vector<std::vector<int>> cartan)
    : spec_(spec), cartan_(std::move(cartan))
{
    generate_positive_roots();
}

RootDatum RootDatum::build(const CartanSpec& spec)
{
    spec.validate();
    return RootDatum(spec, standard_cartan(spec));
}

void RootDatum::generate_positive_roots()
{
    // Height-by-height closure: for a root b and simple a_j, the a_j-string
    // through b runs from b - p a_j to b + q a_j with p - q = <b, a_j^vee>.
    // Everything below b's height is already known, so p is computed by
    // walking down, and b + a_j is a root exactly when q > 0.
    std::set<Root> known;
    std::vector<Root> layer;
    for (int i = 0; i < rank(); ++i)
        layer.push_back(simple_root(i));
    while (!layer.empty()) {
        for (const auto& r : layer)
            known.insert(r);
        std::set<Root> next;
        for (const auto& b : layer) {
            for (int j = 0; j < rank(); ++j) {
                Root aj = simple_root(j);
                int p = 0;
                for (Root down = b - aj; known.count(down) != 0; down = down - aj)
                    ++p;
                int q = p - coroot_pairing(b, j);
                if (q > 0)
                    next.insert(b + aj);
            }
        }
        layer.assign(next.begin(), next.end());
    }
    positive_.assign(known.begin(), known.end());
    std::sort(positive_.begin(), positive_.end(), root_order_less);
}

bool RootDatum::is_positive_root(const Root& r) const { return index_of(r) >= 0; }

bool RootDatum::is_root(const Root& r) const { return is_positive_root(r) || is_positive_root(-r); }

int RootDatum::coroot_pairing(const Root& r, int j) const
{
    if (static_cast<int>(r.rank()) != rank())
        throw ValidationError("root rank does not match datum rank");
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        s += r[static_cast<std::size_t>(i)] * cartan(i, j);
    return s;
}

Root RootDatum::reflect(const Root& r, int j) const
{
    auto c = r.coeffs();
    c.at(static_cast<std::size_t>(j)) -= coroot_pairing(r, j);
    return Root(std::move(c));
}

int RootDatum::index_of(const Root& r) const
{
    if (static_cast<int>(r.rank()) != rank())
        return -1;
    auto it = std::lower_bound(positive_.begin(), positive_.end(), r, root_order_less);
    if (it != positive_.end() && *it == r)
        return static_cast<int>(it - positive_.begin());
    return -1;
}

RootDatum dual_datum(const RootDatum& d)
{
    auto n = static_cast<std::size_t>(d.rank());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = d.cartan_[j][i];
    CartanSpec spec = d.spec();
    if (spec.family == Family::B)
        spec.family = Family::C;
    else if (spec.family == Family::C)
        spec.family = Family::B;
    return RootDatum(spec, std::move(t));
}

// ---------------------------------------------------------------------------

QMonomial evaluate_root(const Root& r, std::span<const QMonomial> coords)
{
    if (r.rank() != coords.size())
        throw ValidationError("evaluate_root: root has " + std::to_string(r.rank()) + " coordinates, parameter has " +
                              std::to_string(coords.size()));
    QMonomial out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        out *= coords[i].pow(r[i]);
    return out;
}

int pair_with_H(const Root& r, std::span<const int> values)
{
    if (r.rank() != values.size())
        throw ValidationError("pair_with_H: dimension mismatch");
    int s = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += r[i] * values[i];
    return s;
}

Rational pair_with_H(const Root& r, std::span<const Rational> values)
{
    if (r.rank() != values.size())
        throw ValidationError("pair_with_H: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < values.size(); ++i)
        s += values[i] * r[i];
    return s;
}

LeviSplit levi_and_nilradical(const RootDatum& d, const LeviSubset& theta)
{
    if (!theta.empty() && theta.indices().back() >= d.rank())
        throw ValidationError("Levi subset index out of range");
    LeviSplit out;
    for (const auto& r : d.positive_roots()) {
        bool inside = true;
        for (int i = 0; i < d.rank(); ++i)
            if (r[static_cast<std::size_t>(i)] != 0 && !theta.contains(i))
                inside = false;
        (inside ? out.levi_roots : out.nilradical_roots).push_back(r);
    }
    return out;
}

std::vector<Rational> reflect_evaluations(const RootDatum& d, std::span<const Rational> v, int j)
{
    if (static_cast<int>(v.size()) != d.rank())
        throw ValidationError("reflect_evaluations: dimension mismatch");
    std::vector<Rational> out(v.begin(), v.end());
    auto vj = v[static_cast<std::size_t>(j)];
    for (int i = 0; i < d.rank(); ++i)
        out[static_cast<std::size_t>(i)] -= vj * d.cartan(i, j);
    return out;
}

std::vector<QMonomial> reflect_evaluations(const RootDatum& d, std::span<const QMonomial> t, int j)
{
    if (static_cast<int>(t.size()) != d.rank())
        throw ValidationError("reflect_evaluations: dimension mismatch");
    std::vector<QMonomial> out(t.begin(), t.end());
    auto tj = t[static_cast<std::size_t>(j)];
    for (int i = 0; i < d.rank(); ++i)
        out[static_cast<std::size_t>(i)] *= tj.pow(-d.cartan(i, j));
    return out;
}

std::vector<Rational> apply_word(const RootDatum& d, std::span<const Rational> v, std::span<const int> word)
{
    std::vector<Rational> out(v.begin(), v.end());
    for (int j : word)
        out = reflect_evaluations(d, out, j);
    return out;
}

std::vector<QMonomial> apply_word(const RootDatum& d, std::span<const QMonomial> t, std::span<const int> word)
{
    std::vector<QMonomial> out(t.begin(), t.end());
    for (int j : word)
        out = reflect_evaluations(d, out, j);
    return out;
}

Root apply_word(const RootDatum& d, Root r, std::span<const int> word)
{
    for (int j : word)
        r = d.reflect(r, j);
    return r;
}

Dominantized dominantize(const RootDatum& d, std::span<const Rational> v)
{
    Dominantized out{std::vector<Rational>(v.begin(), v.end()), {}};
    const auto limit = d.positive_roots().size();
    for (;;) {
        auto neg = std::find_if(out.vector.begin(), out.vector.end(), [](const Rational& x) { return x < 0; });
        if (neg == out.vector.end())
            break;
        int j = static_cast<int>(neg - out.vector.begin());
        out.vector = reflect_evaluations(d, out.vector, j);
        out.word.push_back(j);
        if (out.word.size() > limit)
            throw InvariantViolation("dominantize: word exceeded the number of positive roots");
    }
    return out;
}

} // namespace arthur
