#include "arthur/lfactors.hpp"

#include "arthur/errors.hpp"

#include <algorithm>

namespace arthur {

std::vector<Root> GradedNilradical::all_roots() const
{
    std::vector<Root> out;
    for (const auto& [level, roots] : levels)
        out.insert(out.end(), roots.begin(), roots.end());
    return out;
}

GradedNilradical grade_nilradical(const RootDatum& d, const LeviSubset& theta)
{
    GradedNilradical g{theta, {}};
    for (const auto& r : levi_and_nilradical(d, theta).nilradical_roots) {
        int level = 0;
        for (int i = 0; i < d.rank(); ++i)
            if (!theta.contains(i))
                level += r[static_cast<std::size_t>(i)];
        g.levels[level].push_back(r);
    }
    return g;
}

const char* to_text(Orientation o) { return o == Orientation::R ? "r" : "r_tilde"; }

namespace {

void append(LocalLFactor& l, const std::vector<Root>& roots, const UnramifiedParameter& p)
{
    for (const auto& r : roots) {
        if (r.rank() != p.coords.size())
            throw ValidationError("root " + to_text(r) + " does not belong to the parameter's datum");
        auto v = p.evaluate(r);
        l.eigenvalues.push_back(l.orientation == Orientation::RTilde ? v : v.inverse());
        l.roots.push_back(r);
    }
}

} // namespace

LocalLFactor l_factor(const GradedNilradical& g, const UnramifiedParameter& p, Orientation o)
{
    LocalLFactor l{{}, {}, o};
    for (const auto& [level, roots] : g.levels)
        append(l, roots, p);
    return l;
}

LocalLFactor l_factor_level(const GradedNilradical& g, int level, const UnramifiedParameter& p, Orientation o)
{
    LocalLFactor l{{}, {}, o};
    if (auto it = g.levels.find(level); it != g.levels.end())
        append(l, it->second, p);
    return l;
}

Vanishing inverse_vanishes_at(const LocalLFactor& l, const Rational& s)
{
    Vanishing v;
    for (std::size_t i = 0; i < l.eigenvalues.size(); ++i)
        if (l.eigenvalues[i].has_trivial_unit() && l.eigenvalues[i].exponent() == s)
            v.witnesses.push_back(i);
    v.vanishes = !v.witnesses.empty();
    return v;
}

std::vector<Rational> pole_locations(const LocalLFactor& l)
{
    std::vector<Rational> poles;
    for (const auto& e : l.eigenvalues)
        if (e.has_trivial_unit())
            poles.push_back(e.exponent());
    std::sort(poles.begin(), poles.end());
    return poles;
}

CoefficientRatio local_coefficient_ratio(const RootDatum& d, const LeviSubset& theta, const UnramifiedParameter& p)
{
    if (!(p.datum == d))
        throw ValidationError("parameter datum " + p.datum.spec().name() + " differs from " + d.spec().name());
    auto g = grade_nilradical(d, theta);
    for (const auto& r : g.all_roots()) {
        if (p.evaluate(r).exponent() <= 0)
            throw ValidationError("not in the Langlands setting: exponent of " + to_text(r) + " is " +
                                  pretty(p.evaluate(r).exponent()) + ", not positive");
    }
    CoefficientRatio out;
    out.numerator = l_factor(g, p, Orientation::R);
    out.denominator = l_factor(g, p, Orientation::RTilde);
    if (auto num = inverse_vanishes_at(out.numerator, 0); num.vanishes)
        throw InvariantViolation("L(0, r)^{-1} vanishes at root " + to_text(out.numerator.roots[num.witnesses.front()]));
    out.denominator_vanishing = inverse_vanishes_at(out.denominator, 1);
    out.verdict = out.denominator_vanishing.vanishes ? RatioClass::Zero : RatioClass::Nonzero;
    return out;
}

} // namespace arthur
