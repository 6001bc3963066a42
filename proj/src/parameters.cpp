#include "arthur/parameters.hpp"

#include "arthur/errors.hpp"
#include "exact_linear.hpp"

#include <algorithm>
#include <sstream>

namespace arthur {

UnramifiedParameter::UnramifiedParameter(RootDatum d, std::vector<QMonomial> c)
    : datum(std::move(d)), coords(std::move(c))
{
    if (coords.size() != static_cast<std::size_t>(datum.rank())) {
        std::ostringstream msg;
        msg << "parameter has " << coords.size() << " coordinates, datum " << datum.spec().name() << " needs "
            << datum.rank();
        throw ValidationError(msg.str());
    }
}

UnramifiedParameter UnramifiedParameter::trivial(const RootDatum& d)
{
    return {d, std::vector<QMonomial>(static_cast<std::size_t>(d.rank()))};
}

ExponentVector from_root_coordinates(const RootDatum& d, const ExponentVector& c)
{
    if (c.size() != static_cast<std::size_t>(d.rank()))
        throw ValidationError("coordinate vector length does not match rank");
    ExponentVector nu(c.size());
    for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j)
            nu[static_cast<std::size_t>(i)] += Rational(d.cartan(i, j)) * c[static_cast<std::size_t>(j)];
    return nu;
}

ExponentVector root_coordinates(const RootDatum& d, const ExponentVector& nu)
{
    if (nu.size() != static_cast<std::size_t>(d.rank()))
        throw ValidationError("exponent vector length does not match rank");
    detail::RationalMatrix a(nu.size(), std::vector<Rational>(nu.size()));
    for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.cartan(i, j);
    auto c = detail::solve_unique(std::move(a), nu);
    if (!c)
        throw InvariantViolation("Cartan matrix is singular");
    return *c;
}

ArthurParameter make_arthur_parameter(UnramifiedParameter phi, SL2Data rho)
{
    for (std::size_t i = 0; i < phi.coords.size(); ++i) {
        if (phi.coords[i].exponent() != 0) {
            std::ostringstream msg;
            msg << "phi is unbounded: coordinate a" << i + 1 << " = " << to_text(phi.coords[i])
                << " has nonzero q-exponent";
            throw ValidationError(msg.str());
        }
    }
    validate_sl2_data(phi.datum, rho);
    for (const auto& r : rho.S) {
        auto value = phi.evaluate(r);
        if (!value.is_one())
            throw ValidationError("centralizer condition fails: root " + to_text(r) + " evaluates to " +
                                  to_text(value) + " on phi, not 1");
    }
    return {std::move(phi), std::move(rho)};
}

UnramifiedParameter phi_psi(const ArthurParameter& psi)
{
    auto coords = psi.phi().coords;
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] *= QMonomial::q_power(Rational(psi.rho().H[i], 2));
    return {psi.datum(), std::move(coords)};
}

Phi0PhiPlus decompose_phi0_phiplus(const UnramifiedParameter& p)
{
    std::vector<QMonomial> units;
    ExponentVector exps;
    for (const auto& c : p.coords) {
        units.push_back(c.unit_part());
        exps.push_back(c.exponent());
    }
    return {UnramifiedParameter(p.datum, std::move(units)), std::move(exps)};
}

UnramifiedParameter recompose(const UnramifiedParameter& phi0, const ExponentVector& phiplus)
{
    if (phiplus.size() != phi0.coords.size())
        throw ValidationError("exponent vector length does not match parameter");
    auto coords = phi0.coords;
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] *= QMonomial::q_power(phiplus[i]);
    return {phi0.datum, std::move(coords)};
}

bool is_tempered(const UnramifiedParameter& p)
{
    return std::all_of(p.coords.begin(), p.coords.end(), [](const QMonomial& c) { return c.exponent() == 0; });
}

LeviSubset defining_levi(const ExponentVector& nu, const RootDatum& d)
{
    if (nu.size() != static_cast<std::size_t>(d.rank()))
        throw ValidationError("exponent vector length does not match rank");
    std::vector<int> theta;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] < 0)
            throw ValidationError("defining_levi needs a dominant exponent vector; entry a" + std::to_string(i + 1) +
                                  " is " + pretty(nu[i]));
        if (nu[i] == 0)
            theta.push_back(static_cast<int>(i));
    }
    return LeviSubset(std::move(theta));
}

RecoveredPsi recover_psi(const UnramifiedParameter& p)
{
    auto [phi0, exps] = decompose_phi0_phiplus(p);
    ExponentVector doubled;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        auto two_a = exps[i] * 2;
        if (!is_integer(two_a))
            throw ValidationError("not of Arthur type: exponent of a" + std::to_string(i + 1) + " is " +
                                  pretty(exps[i]) + ", not half-integral");
        doubled.push_back(two_a);
    }
    auto dom = dominantize(p.datum, doubled);
    std::vector<int> h;
    for (std::size_t i = 0; i < dom.vector.size(); ++i) {
        const auto& v = dom.vector[i];
        if (v > 2)
            throw ValidationError("not of Arthur type: doubled dominant exponent at a" + std::to_string(i + 1) +
                                  " is " + pretty(v) + ", outside {0,1,2}");
        h.push_back(static_cast<int>(v.numerator()));
    }
    auto units = apply_word(p.datum, phi0.coords, dom.word);
    return {UnramifiedParameter(p.datum, std::move(units)), WeightedDynkinDiagram(std::move(h)), std::move(dom.word)};
}

} // namespace arthur
