#include "arthur/classifier.hpp"

#include "arthur/errors.hpp"

#include <algorithm>

namespace arthur {

StandardModuleDatum::StandardModuleDatum(TemperedDatum tau, ExponentVector nu, std::vector<int> weyl_word)
    : tau_(std::move(tau)), nu_(std::move(nu)), word_(std::move(weyl_word))
{
    if (!is_tempered(tau_.unit_parameter))
        throw ValidationError("tempered datum has a nonzero q-exponent");
    if (nu_.size() != static_cast<std::size_t>(datum().rank()))
        throw ValidationError("nu has the wrong length");
    for (int i = 0; i < datum().rank(); ++i) {
        const auto& v = nu_[static_cast<std::size_t>(i)];
        const auto label = "a" + std::to_string(i + 1);
        if (tau_.theta.contains(i) && v != 0)
            throw ValidationError("nu is " + pretty(v) + " at " + label + ", which lies in theta");
        if (!tau_.theta.contains(i) && v <= 0)
            throw ValidationError("nu is " + pretty(v) + " at " + label + ", must be strictly positive off theta");
    }
}

StandardModuleDatum standard_module_from_coordinates(const UnramifiedParameter& units, const ExponentVector& c,
                                                     bool generic)
{
    auto nu = from_root_coordinates(units.datum, c);
    auto theta = defining_levi(nu, units.datum);
    return StandardModuleDatum(TemperedDatum{std::move(theta), units, generic}, std::move(nu));
}

StandardModuleDatum standard_module_from_langlands(const UnramifiedParameter& p, bool generic)
{
    auto [phi0, exps] = decompose_phi0_phiplus(p);
    auto dom = dominantize(p.datum, exps);
    UnramifiedParameter units(p.datum, apply_word(p.datum, phi0.coords, dom.word));
    auto theta = defining_levi(dom.vector, p.datum);
    return StandardModuleDatum(TemperedDatum{std::move(theta), std::move(units), generic}, std::move(dom.vector),
                               std::move(dom.word));
}

StandardModuleDatum standard_module_datum(const ArthurParameter& psi, bool generic)
{
    return standard_module_from_langlands(phi_psi(psi), generic);
}

IrreducibilityVerdict irreducibility_verdict(const StandardModuleDatum& sm)
{
    auto ratio = local_coefficient_ratio(sm.datum(), sm.theta(), sm.parameter());
    IrreducibilityVerdict out;
    out.irreducible = ratio.verdict == RatioClass::Nonzero;
    for (auto i : ratio.denominator_vanishing.witnesses)
        out.witnesses.push_back(ratio.denominator.roots[i]);
    out.denominator = std::move(ratio.denominator);
    return out;
}

const char* to_text(Genericity g)
{
    switch (g) {
    case Genericity::Generic: return "generic";
    case Genericity::NotGeneric: return "not-generic";
    case Genericity::NotApplicable: return "not-applicable";
    }
    return "?";
}

Genericity genericity_verdict(const StandardModuleDatum& sm)
{
    if (!sm.tau().generic)
        return Genericity::NotApplicable;
    return irreducibility_verdict(sm).irreducible ? Genericity::Generic : Genericity::NotGeneric;
}

const char* to_text(PacketKind k) { return k == PacketKind::Tempered ? "tempered" : "non-tempered"; }

namespace {

std::optional<Root> find_witness(const std::vector<Root>& S, const UnramifiedParameter& dominant_p,
                                 const LeviSubset& theta)
{
    auto split = levi_and_nilradical(dominant_p.datum, theta);
    std::optional<Root> best;
    for (const auto& r : S) {
        auto v = dominant_p.evaluate(r);
        if (v.exponent() != 1 || !v.has_trivial_unit())
            continue;
        if (std::find(split.levi_roots.begin(), split.levi_roots.end(), r) != split.levi_roots.end())
            continue;
        if (!best || root_order_less(r, *best))
            best = r;
    }
    return best;
}

} // namespace

Root witness_root(const ArthurParameter& psi, const LeviSubset& theta)
{
    if (psi.rho().is_trivial())
        throw ValidationError("tempered parameter has no witness");
    auto w = find_witness(psi.rho().S, phi_psi(psi), theta);
    if (!w)
        throw InvariantViolation("no root of S qualifies as a witness");
    return *w;
}

PacketVerdict classify_langlands(const UnramifiedParameter& p, const std::vector<Root>& S)
{
    const auto& d = p.datum;
    for (const auto& r : S) {
        if (r.rank() != static_cast<std::size_t>(d.rank()) || !d.is_root(r))
            throw ValidationError(to_text(r) + " is not a root of " + d.spec().name());
        if (p.evaluate(r).exponent() != 1)
            throw ValidationError("root " + to_text(r) + " of S has exponent " + pretty(p.evaluate(r).exponent()) +
                                  " on the parameter, expected 1");
    }

    auto sm = standard_module_from_langlands(p);
    auto dominant_p = sm.parameter();

    PacketVerdict v;
    v.levi = sm.theta();
    v.weyl_word = sm.weyl_word();
    for (const auto& r : S)
        v.dominant_S.push_back(apply_word(d, r, v.weyl_word));
    std::sort(v.dominant_S.begin(), v.dominant_S.end(), root_order_less);

    if (is_tempered(p)) {
        if (!S.empty())
            throw InvariantViolation("tempered parameter with nonempty S");
        v.kind = PacketKind::Tempered;
        return v;
    }
    if (S.empty())
        throw ValidationError("non-tempered parameter needs a nonempty S");

    v.kind = PacketKind::NonTempered;
    v.witness = find_witness(v.dominant_S, dominant_p, v.levi);
    if (!v.witness)
        throw InvariantViolation("no root of the dominant S is phi0-trivial and outside the Levi");

    auto g = grade_nilradical(d, v.levi);
    auto denom = l_factor(g, dominant_p, Orientation::RTilde);
    auto at = std::find(denom.roots.begin(), denom.roots.end(), *v.witness);
    if (at == denom.roots.end())
        throw InvariantViolation("witness " + to_text(*v.witness) + " is not a nilradical root");
    auto eigen = denom.eigenvalues[static_cast<std::size_t>(at - denom.roots.begin())];
    v.certificate = VanishingCertificate{eigen, Rational(1)};
    v.witness_vanishes = eigen.has_trivial_unit() && eigen.exponent() == 1;

    auto full = inverse_vanishes_at(denom, 1);
    v.full_product_vanishes = full.vanishes;
    for (auto i : full.witnesses)
        v.full_product_roots.push_back(denom.roots[i]);

    if (v.witness_vanishes != v.full_product_vanishes)
        throw InvariantViolation("witness and full-product vanishing disagree");
    check_verdict(v);
    return v;
}

PacketVerdict classify_packet(const ArthurParameter& psi)
{
    auto p = phi_psi(psi);
    if (psi.rho().is_trivial() && !is_tempered(p))
        throw InvariantViolation("trivial rho but phi_psi is not tempered");
    return classify_langlands(p, psi.rho().S);
}

void check_verdict(const PacketVerdict& v)
{
    if (v.kind == PacketKind::Tempered)
        return;
    if (!v.witness || !v.certificate)
        throw InvariantViolation("non-tempered verdict without witness or certificate");
    if (!(v.certificate->eigenvalue == QMonomial::q_power(1)) || v.certificate->s != 1)
        throw InvariantViolation("certificate eigenvalue is " + to_text(v.certificate->eigenvalue) + ", expected q");
    if (!v.witness_vanishes || !v.full_product_vanishes)
        throw InvariantViolation("non-tempered verdict without vanishing");
}

} // namespace arthur
