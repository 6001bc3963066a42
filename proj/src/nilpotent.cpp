#include "arthur/nilpotent.hpp"

#include "arthur/errors.hpp"
#include "exact_linear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace arthur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw ValidationError("partition must be nonempty");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ValidationError("partition part " + std::to_string(parts_[i]) + " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ValidationError("partition " + to_text(*this) + " is not weakly decreasing");
    }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::is_very_even() const
{
    return std::all_of(parts_.begin(), parts_.end(), [this](int m) { return m % 2 == 0 && multiplicity(m) % 2 == 0; });
}

std::string to_text(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        out += (i ? "," : "") + std::to_string(p.parts()[i]);
    return out + "]";
}

WeightedDynkinDiagram::WeightedDynkinDiagram(std::vector<int> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] < 0 || values_[i] > 2)
            throw ValidationError("weighted Dynkin diagram entry " + std::to_string(i + 1) + " is " +
                                  std::to_string(values_[i]) + ", expected 0, 1 or 2");
}

bool WeightedDynkinDiagram::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

std::string to_text(const WeightedDynkinDiagram& w)
{
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "," : "") + std::to_string(w[i]);
    return out + ")";
}

// ---------------------------------------------------------------------------

namespace {

int defining_dimension(Family family, int rank)
{
    switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
    case Family::G: break;
    }
    throw ValidationError("no partition model for type G; supply (H, S) in expert mode");
}

} // namespace

void validate_partition(Family family, int rank, const Partition& p)
{
    CartanSpec{family, rank}.validate();
    const int dim = defining_dimension(family, rank);
    const std::string type = CartanSpec{family, rank}.name();
    if (p.total() != dim)
        throw ValidationError("partition " + to_text(p) + " sums to " + std::to_string(p.total()) + " but type " + type +
                              " needs a partition of " + std::to_string(dim));
    if (family == Family::A)
        return;
    // Orthogonal: even parts come in pairs. Symplectic: odd parts come in pairs.
    const int paired_parity = family == Family::C ? 1 : 0;
    for (int m : p.parts()) {
        if (m % 2 == paired_parity && p.multiplicity(m) % 2 != 0)
            throw ValidationError("partition " + to_text(p) + " is invalid for type " + type + ": " +
                                  (paired_parity ? "odd" : "even") + " part " + std::to_string(m) +
                                  " has odd multiplicity " + std::to_string(p.multiplicity(m)));
    }
}

std::vector<Partition> valid_partitions(Family family, int rank)
{
    const int dim = defining_dimension(family, rank);
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            Partition p(current);
            try {
                validate_partition(family, rank, p);
                out.push_back(std::move(p));
            } catch (const ValidationError&) {
            }
            return;
        }
        for (int m = std::min(remaining, max_part); m >= 1; --m) {
            current.push_back(m);
            rec(remaining - m, m);
            current.pop_back();
        }
    };
    rec(dim, dim);
    return out;
}

std::vector<int> neutral_weights(const Partition& p)
{
    std::vector<int> w;
    for (int m : p.parts())
        for (int k = m - 1; k >= 1 - m; k -= 2)
            w.push_back(k);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

WeightedDynkinDiagram wdd_from_partition(Family family, int rank, const Partition& p)
{
    validate_partition(family, rank, p);
    const auto h = neutral_weights(p);
    const auto n = static_cast<std::size_t>(rank);
    std::vector<int> d(n);
    if (family == Family::A) {
        for (std::size_t i = 0; i < n; ++i)
            d[i] = h[i] - h[i + 1];
    } else {
        // h[0..n) is the non-negative half of the symmetric weight multiset.
        for (std::size_t i = 0; i + 1 < n; ++i)
            d[i] = h[i] - h[i + 1];
        switch (family) {
        case Family::B: d[n - 1] = h[n - 1]; break;
        case Family::C: d[n - 1] = 2 * h[n - 1]; break;
        case Family::D: d[n - 1] = h[n - 2] + h[n - 1]; break;
        default: break;
        }
    }
    for (int v : d)
        if (v < 0 || v > 2)
            throw InvariantViolation("diagram of " + to_text(p) + " has entry " + std::to_string(v));
    return WeightedDynkinDiagram(std::move(d));
}

// ---------------------------------------------------------------------------
// Defining representation of the classical Lie algebras.
//
// Positions are ordered so that the diagonal torus is dominant for the upper
// triangular Borel: type A uses e_0..e_n; types B, C, D use e_0..e_{n-1},
// then (type B only) a zero weight, then -e_{n-1}..-e_0. Position p pairs with
// N-1-p under the form.

namespace {

struct DefiningRep {
    Family family;
    int rank;
    int dim;
    int coords; // length of weight vectors
    std::vector<std::vector<int>> weight; // per position
    IntMatrix form;                       // empty for type A

    DefiningRep(Family fam, int n) : family(fam), rank(n), dim(defining_dimension(fam, n))
    {
        coords = family == Family::A ? rank + 1 : rank;
        weight.assign(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(coords), 0));
        for (int p = 0; p < dim; ++p) {
            auto& w = weight[static_cast<std::size_t>(p)];
            if (family == Family::A)
                w[static_cast<std::size_t>(p)] = 1;
            else if (p < rank)
                w[static_cast<std::size_t>(p)] = 1;
            else if (dim - 1 - p < rank)
                w[static_cast<std::size_t>(dim - 1 - p)] = -1;
        }
        if (family != Family::A) {
            form = IntMatrix::Zero(dim, dim);
            for (int p = 0; p < dim; ++p)
                form(p, dim - 1 - p) = (family == Family::C && p >= rank) ? -1 : 1;
        }
    }

    std::vector<int> simple_root_weight(int i) const
    {
        std::vector<int> w(static_cast<std::size_t>(coords), 0);
        auto at = [&w](int k) -> int& { return w[static_cast<std::size_t>(k)]; };
        if (family == Family::A || i + 1 < rank) {
            at(i) = 1;
            at(i + 1) = -1;
            return w;
        }
        switch (family) {
        case Family::B: at(i) = 1; break;
        case Family::C: at(i) = 2; break;
        case Family::D:
            at(i - 1) = 1;
            at(i) = 1;
            break;
        default: break;
        }
        return w;
    }

    std::vector<int> root_weight(const Root& r) const
    {
        std::vector<int> w(static_cast<std::size_t>(coords), 0);
        for (int i = 0; i < rank; ++i) {
            auto s = simple_root_weight(i);
            for (std::size_t k = 0; k < w.size(); ++k)
                w[k] += r[static_cast<std::size_t>(i)] * s[k];
        }
        return w;
    }

    /// Projection of a matrix unit onto the Lie algebra of the form.
    IntMatrix project(const IntMatrix& m) const
    {
        if (family == Family::A)
            return m;
        return m - form.transpose() * m.transpose() * form;
    }

    IntMatrix root_vector(const std::vector<int>& w) const
    {
        for (int p = 0; p < dim; ++p) {
            for (int q = 0; q < dim; ++q) {
                bool match = true;
                for (int k = 0; k < coords && match; ++k)
                    match = weight[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] -
                                weight[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] ==
                            w[static_cast<std::size_t>(k)];
                if (!match)
                    continue;
                IntMatrix unit = IntMatrix::Zero(dim, dim);
                unit(p, q) = 1;
                IntMatrix x = project(unit);
                std::int64_t g = 0;
                for (Eigen::Index k = 0; k < x.size(); ++k)
                    g = std::gcd(g, x.data()[k]);
                if (g == 0)
                    continue;
                return x / g;
            }
        }
        throw InvariantViolation("no root vector of the requested weight");
    }

    IntMatrix neutral_element(const Partition& p) const
    {
        auto h = neutral_weights(p);
        IntMatrix out = IntMatrix::Zero(dim, dim);
        if (family == Family::A) {
            for (int i = 0; i < dim; ++i)
                out(i, i) = h[static_cast<std::size_t>(i)];
            return out;
        }
        for (int i = 0; i < dim; ++i) {
            std::int64_t v = 0;
            for (int k = 0; k < rank; ++k)
                v += weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(k)];
            out(i, i) = v;
        }
        return out;
    }
};

IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) { return x * y - y * x; }

} // namespace

MatrixTriple oracle_matrix_triple(Family family, int rank, const Partition& p)
{
    validate_partition(family, rank, p);
    if (rank > kMaxMatrixRank)
        throw ValidationError("matrix construction supports rank <= " + std::to_string(kMaxMatrixRank));

    const DefiningRep rep(family, rank);
    const auto datum = RootDatum::build({family, rank});
    const auto H = wdd_from_partition(family, rank, p);
    const IntMatrix h = rep.neutral_element(p);

    struct Candidate {
        Root root;
        IntMatrix up, down;
    };
    std::vector<Candidate> level_two;
    for (const auto& r : datum.positive_roots())
        if (pair_with_H(r, H) == 2)
            level_two.push_back({r, rep.root_vector(rep.root_weight(r)), rep.root_vector(rep.root_weight(-r))});

    // [e, f] commutes with h, so only entries (p, q) with h_p = h_q can be
    // nonzero; those are the only equations that need solving.
    std::vector<std::pair<int, int>> level_zero;
    for (int p = 0; p < rep.dim; ++p)
        for (int q = 0; q < rep.dim; ++q)
            if (h(p, p) == h(q, q))
                level_zero.emplace_back(p, q);
    std::vector<Rational> target;
    for (auto [p, q] : level_zero)
        target.emplace_back(h(p, q));

    std::vector<std::size_t> chosen;
    std::optional<MatrixTriple> found;

    // e = sum of the chosen root vectors; look for f in the -2 eigenspace of
    // ad h with [e, f] = h, taking the particular solution with free
    // variables set to zero.
    auto try_chosen = [&]() -> bool {
        IntMatrix e = IntMatrix::Zero(rep.dim, rep.dim);
        for (auto i : chosen)
            e += level_two[i].up;
        detail::RationalMatrix a(target.size(), std::vector<Rational>(level_two.size()));
        for (std::size_t c = 0; c < level_two.size(); ++c) {
            IntMatrix col = bracket(e, level_two[c].down);
            for (std::size_t k = 0; k < level_zero.size(); ++k)
                a[k][c] = col(level_zero[k].first, level_zero[k].second);
        }
        auto coeffs = detail::solve_particular(a, target);
        if (!coeffs)
            return false;
        IntMatrix f = IntMatrix::Zero(rep.dim, rep.dim);
        for (std::size_t c = 0; c < level_two.size(); ++c) {
            const auto& y = (*coeffs)[c];
            if (!is_integer(y))
                return false;
            f += y.numerator() * level_two[c].down;
        }
        MatrixTriple t{e, h, f, rep.form, {}};
        for (auto i : chosen)
            t.support.push_back(level_two[i].root);
        found = std::move(t);
        return true;
    };

    // Supports in increasing size; within a size, lexicographic in root order.
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t size) -> bool {
        if (chosen.size() == size)
            return try_chosen();
        for (std::size_t i = start; i < level_two.size(); ++i) {
            chosen.push_back(i);
            if (search(i + 1, size))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    if (H.is_zero()) {
        found = MatrixTriple{IntMatrix::Zero(rep.dim, rep.dim), h, IntMatrix::Zero(rep.dim, rep.dim), rep.form, {}};
    } else {
        for (std::size_t size = 1; size <= level_two.size() && !found; ++size)
            search(0, size);
    }
    if (!found)
        throw InvariantViolation("no sl2-triple found for " + to_text(p) + " in type " + datum.spec().name());

    const auto& t = *found;
    if (bracket(t.h, t.e) != 2 * t.e || bracket(t.h, t.f) != -2 * t.f || bracket(t.e, t.f) != t.h)
        throw InvariantViolation("sl2 relations fail for " + to_text(p));
    return *found;
}

SL2Data sl2_data_from_partition(Family family, int rank, const Partition& p)
{
    auto triple = oracle_matrix_triple(family, rank, p);
    SL2Data out{wdd_from_partition(family, rank, p), std::move(triple.support)};
    std::sort(out.S.begin(), out.S.end(), root_order_less);
    return out;
}

void validate_sl2_data(const RootDatum& d, const SL2Data& s)
{
    std::vector<std::string> problems;
    if (static_cast<int>(s.H.size()) != d.rank())
        problems.push_back("H has " + std::to_string(s.H.size()) + " entries, datum rank is " + std::to_string(d.rank()));
    for (const auto& r : s.S) {
        if (static_cast<int>(r.rank()) != d.rank() || !d.is_positive_root(r)) {
            problems.push_back("S element " + to_text(r) + " is not a positive root of " + d.spec().name());
            continue;
        }
        if (s.H.size() == r.rank()) {
            int v = pair_with_H(r, s.H);
            if (v != 2)
                problems.push_back("S element " + to_text(r) + " has pairing " + std::to_string(v) + " with H, expected 2");
        }
    }
    if (s.H.is_zero() && !s.S.empty())
        problems.push_back("H is zero but S is nonempty");
    if (!s.H.is_zero() && s.S.empty())
        problems.push_back("H is nonzero but S is empty");
    if (problems.empty())
        return;
    std::ostringstream msg;
    msg << "invalid SL2 data:";
    for (const auto& p : problems)
        msg << "\n  - " << p;
    throw ValidationError(msg.str());
}

} // namespace arthur
