#include "arthur/report.hpp"

#include "arthur/classifier.hpp"
#include "arthur/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace arthur {

using nlohmann::json;

namespace {

// -- json helpers ---------------------------------------------------------

json to_json(const Rational& r) { return canonical(r); }
json to_json(const Root& r) { return r.coeffs(); }
json to_json(const QMonomial& m) { return {{"exponent", canonical(m.exponent())}, {"unit", canonical(m.unit())}}; }

template <typename T>
json to_json(const std::vector<T>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

template <typename T>
json to_json(const std::optional<T>& v)
{
    return v ? to_json(*v) : json(nullptr);
}

void from_json_value(const json& j, Rational& r) { r = parse_rational(j.get<std::string>()); }
void from_json_value(const json& j, Root& r) { r = Root(j.get<std::vector<int>>()); }
void from_json_value(const json& j, QMonomial& m)
{
    m = QMonomial(parse_rational(j.at("unit").get<std::string>()), parse_rational(j.at("exponent").get<std::string>()));
}
void from_json_value(const json& j, int& v) { v = j.get<int>(); }

template <typename T>
void from_json_value(const json& j, std::vector<T>& v)
{
    v.clear();
    for (const auto& x : j) {
        T t;
        from_json_value(x, t);
        v.push_back(std::move(t));
    }
}

template <typename T>
void from_json_value(const json& j, std::optional<T>& v)
{
    if (j.is_null()) {
        v.reset();
        return;
    }
    T t;
    from_json_value(j, t);
    v = std::move(t);
}

// -- text helpers ---------------------------------------------------------

std::string text_of(const Rational& r) { return pretty(r); }
std::string text_of(const Root& r) { return to_text(r); }
std::string text_of(const QMonomial& m) { return to_text(m); }
std::string labels(const std::vector<int>& idx, const char* letter, const char* open, const char* close)
{
    std::string s = open;
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? ", " : "") + (letter + std::to_string(idx[i] + 1));
    return s + close;
}

template <typename T>
std::string list(const std::vector<T>& v, const char* open = "(", const char* close = ")")
{
    std::string s = open;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + text_of(v[i]);
    return s + close;
}

std::string list_names(const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i)
        s += (i ? ", " : "") + names[i];
    return s;
}

std::string rho_label(const Scenario& s)
{
    switch (s.rho.kind) {
    case RhoSpec::Kind::Trivial: return "trivial";
    case RhoSpec::Kind::Partition: return to_text(s.rho.partition);
    case RhoSpec::Kind::Expert: return "expert";
    }
    return "?";
}

} // namespace

Report run_scenario(const Scenario& s, bool certify)
{
    auto psi = build_arthur_parameter(s);
    const auto& d = psi.datum();

    Report r;
    r.label = s.label;
    r.group = s.group.name();
    r.dual = d.spec().name();
    r.generic_assumption = s.generic_assumption;
    r.rho = rho_label(s);
    r.very_even = s.rho.kind == RhoSpec::Kind::Partition && d.spec().family == Family::D && s.rho.partition.is_very_even();
    r.H = psi.rho().H.values();
    r.S = psi.rho().S;

    auto p = phi_psi(psi);
    r.phi_psi = p.coords;
    auto [phi0, plus] = decompose_phi0_phiplus(p);
    for (const auto& u : phi0.coords)
        r.phi0_units.push_back(u.unit());
    r.phiplus = plus;
    r.tempered = is_tempered(p);

    auto sm = standard_module_datum(psi, s.generic_assumption);
    auto dominant = sm.parameter();
    r.weyl_word = sm.weyl_word();
    r.dominant_parameter = dominant.coords;
    r.levi = sm.theta().indices();
    r.nu = sm.nu_coordinates();
    r.nu_evaluations = sm.nu();

    auto v = classify_packet(psi);
    if (v.levi != sm.theta() || v.weyl_word != sm.weyl_word())
        throw InvariantViolation("classifier and standard module disagree on the Levi");
    r.verdict = to_text(v.kind);
    r.witness = v.witness;
    if (v.certificate) {
        r.certificate_eigenvalue = v.certificate->eigenvalue;
        r.certificate_s = v.certificate->s;
    }
    r.dominant_S = v.dominant_S;
    r.full_product_roots = v.full_product_roots;

    auto irr = irreducibility_verdict(sm);
    r.irreducible = irr.irreducible;
    r.irreducibility_witnesses = irr.witnesses;
    r.genericity = to_text(genericity_verdict(sm));
    if ((v.kind == PacketKind::NonTempered) == irr.irreducible)
        throw InvariantViolation("packet verdict and irreducibility verdict disagree");

    auto g = grade_nilradical(d, sm.theta());
    for (const auto& [level, roots] : g.levels) {
        auto l = l_factor_level(g, level, dominant, Orientation::RTilde);
        r.levels.push_back({level, roots, l.eigenvalues});
    }
    auto lr = l_factor(g, dominant, Orientation::R);
    auto lt = l_factor(g, dominant, Orientation::RTilde);
    r.poles_r = pole_locations(lr);
    r.poles_r_tilde = pole_locations(lt);

    if (v.kind == PacketKind::NonTempered && s.generic_assumption)
        r.interpretation = "L(1, r_tilde . phi_psi)^-1 vanishes at the witness; the standard module is reducible, "
                           "its Langlands quotient is not generic, so Pi(phi_psi) has no generic member";
    else if (v.kind == PacketKind::NonTempered)
        r.interpretation = "L(1, r_tilde . phi_psi)^-1 vanishes at the witness; the standard module is reducible; "
                           "tau is not assumed generic, so no genericity conclusion is drawn";
    else
        r.interpretation = "phi_psi is tempered; Pi(phi_psi) is a tempered L-packet";

    r.certified = certify;
    if (certify) {
        r.multiset_r = lr.eigenvalues;
        r.multiset_r_tilde = lt.eigenvalues;
    }
    return r;
}

std::string emit_machine(const Report& r)
{
    json j;
    j["label"] = r.label;
    j["group"] = r.group;
    j["dual"] = r.dual;
    j["generic_assumption"] = r.generic_assumption;
    j["rho"] = {{"kind", r.rho}, {"very_even", r.very_even}, {"H", r.H}, {"S", to_json(r.S)}};
    j["phi_psi"] = to_json(r.phi_psi);
    j["phi0_units"] = to_json(r.phi0_units);
    j["phiplus"] = to_json(r.phiplus);
    j["tempered"] = r.tempered;
    j["standard_module"] = {{"weyl_word", r.weyl_word},
                            {"dominant_parameter", to_json(r.dominant_parameter)},
                            {"levi", r.levi},
                            {"nu", to_json(r.nu)},
                            {"nu_evaluations", to_json(r.nu_evaluations)}};
    j["verdict"] = {{"kind", r.verdict},
                    {"witness", to_json(r.witness)},
                    {"certificate",
                     r.certificate_eigenvalue
                         ? json{{"eigenvalue", to_json(*r.certificate_eigenvalue)}, {"s", to_json(r.certificate_s)}}
                         : json(nullptr)},
                    {"dominant_S", to_json(r.dominant_S)},
                    {"full_product_roots", to_json(r.full_product_roots)}};
    j["irreducibility"] = {{"irreducible", r.irreducible}, {"witnesses", to_json(r.irreducibility_witnesses)}};
    j["genericity"] = r.genericity;
    json levels = json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"level", l.level}, {"roots", to_json(l.roots)}, {"eigenvalues", to_json(l.eigenvalues)}});
    j["l_factor"] = {{"levels", levels}, {"poles_r", to_json(r.poles_r)}, {"poles_r_tilde", to_json(r.poles_r_tilde)}};
    j["interpretation"] = r.interpretation;
    if (r.certified)
        j["certify"] = {{"r", to_json(r.multiset_r)}, {"r_tilde", to_json(r.multiset_r_tilde)}};
    return j.dump(2) + "\n";
}

Report parse_machine_report(std::string_view text)
{
    try {
        auto j = json::parse(text);
        Report r;
        r.label = j.at("label").get<std::string>();
        r.group = j.at("group").get<std::string>();
        r.dual = j.at("dual").get<std::string>();
        r.generic_assumption = j.at("generic_assumption").get<bool>();
        const auto& rho = j.at("rho");
        r.rho = rho.at("kind").get<std::string>();
        r.very_even = rho.at("very_even").get<bool>();
        from_json_value(rho.at("H"), r.H);
        from_json_value(rho.at("S"), r.S);
        from_json_value(j.at("phi_psi"), r.phi_psi);
        from_json_value(j.at("phi0_units"), r.phi0_units);
        from_json_value(j.at("phiplus"), r.phiplus);
        r.tempered = j.at("tempered").get<bool>();
        const auto& sm = j.at("standard_module");
        from_json_value(sm.at("weyl_word"), r.weyl_word);
        from_json_value(sm.at("dominant_parameter"), r.dominant_parameter);
        from_json_value(sm.at("levi"), r.levi);
        from_json_value(sm.at("nu"), r.nu);
        from_json_value(sm.at("nu_evaluations"), r.nu_evaluations);
        const auto& v = j.at("verdict");
        r.verdict = v.at("kind").get<std::string>();
        from_json_value(v.at("witness"), r.witness);
        if (!v.at("certificate").is_null()) {
            QMonomial e;
            from_json_value(v.at("certificate").at("eigenvalue"), e);
            r.certificate_eigenvalue = e;
            from_json_value(v.at("certificate").at("s"), r.certificate_s);
        }
        from_json_value(v.at("dominant_S"), r.dominant_S);
        from_json_value(v.at("full_product_roots"), r.full_product_roots);
        r.irreducible = j.at("irreducibility").at("irreducible").get<bool>();
        from_json_value(j.at("irreducibility").at("witnesses"), r.irreducibility_witnesses);
        r.genericity = j.at("genericity").get<std::string>();
        for (const auto& l : j.at("l_factor").at("levels")) {
            LevelFactor f;
            f.level = l.at("level").get<int>();
            from_json_value(l.at("roots"), f.roots);
            from_json_value(l.at("eigenvalues"), f.eigenvalues);
            r.levels.push_back(std::move(f));
        }
        from_json_value(j.at("l_factor").at("poles_r"), r.poles_r);
        from_json_value(j.at("l_factor").at("poles_r_tilde"), r.poles_r_tilde);
        r.interpretation = j.at("interpretation").get<std::string>();
        if (j.contains("certify")) {
            r.certified = true;
            from_json_value(j["certify"].at("r"), r.multiset_r);
            from_json_value(j["certify"].at("r_tilde"), r.multiset_r_tilde);
        }
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("report: ") + e.what());
    }
}

std::string emit_text(const Report& r)
{
    std::ostringstream os;
    os << "scenario: " << (r.label.empty() ? "(unlabelled)" : r.label) << "\n";
    os << "  group " << r.group << ", dual " << r.dual << ", generic assumption "
       << (r.generic_assumption ? "yes" : "no") << "\n";
    os << "  rho: " << r.rho << (r.very_even ? " (very even)" : "") << "  H = " << to_text(WeightedDynkinDiagram(r.H))
       << "  S = " << list(r.S, "{", "}") << "\n";
    os << "  phi_psi: " << list(r.phi_psi) << "\n";
    os << "  phi0 units: " << list(r.phi0_units) << "  phi+: " << list(r.phiplus) << "\n";
    os << "  tempered: " << (r.tempered ? "yes" : "no") << "\n";
    os << "  standard module: levi " << labels(r.levi, "a", "{", "}") << ", nu " << list(r.nu) << " (evaluations "
       << list(r.nu_evaluations) << ")";
    if (!r.weyl_word.empty())
        os << ", word " << labels(r.weyl_word, "s", "", "");
    os << "\n";
    os << "  verdict: " << r.verdict;
    if (r.witness)
        os << ", witness " << to_text(*r.witness);
    if (r.certificate_eigenvalue)
        os << ", eigenvalue " << to_text(*r.certificate_eigenvalue) << " at s = " << pretty(r.certificate_s);
    os << "\n";
    if (!r.full_product_roots.empty())
        os << "  full product vanishes at " << list(r.full_product_roots, "{", "}") << "\n";
    os << "  standard module " << (r.irreducible ? "irreducible" : "reducible") << "; Langlands quotient "
       << r.genericity << "\n";
    for (const auto& l : r.levels)
        os << "  r_tilde level " << l.level << ": " << list(l.eigenvalues, "{", "}") << " on " << list(l.roots, "{", "}")
           << "\n";
    os << "  poles of L(s, r): " << list(r.poles_r, "[", "]") << "  of L(s, r_tilde): " << list(r.poles_r_tilde, "[", "]")
       << "\n";
    if (r.certified)
        os << "  multiset r: " << list(r.multiset_r, "{", "}") << "\n  multiset r_tilde: "
           << list(r.multiset_r_tilde, "{", "}") << "\n";
    os << "  " << r.interpretation << "\n";
    return os.str();
}

GlobalReport ramanujan_report(const PlaceFamily& f)
{
    if (f.places.empty())
        throw ValidationError("places: family needs at least one place");
    GlobalReport g;
    g.label = f.label;
    bool theorem = true;
    for (const auto& place : f.places) {
        Report r;
        try {
            r = run_scenario(place.scenario);
        } catch (const ValidationError& e) {
            throw ValidationError("place " + place.label + ": " + e.what());
        }
        g.places.push_back({place.label, r.verdict, r.witness, place.scenario.generic_assumption});
        if (r.verdict != "tempered")
            g.nontempered_places.push_back(place.label);
        theorem = theorem && place.scenario.generic_assumption;
    }
    for (const auto& id : f.assumptions)
        g.assumptions.push_back(id + ": " + assumption_statement(id));
    g.mode = theorem ? "theorem" : "descriptive";

    auto has = [&](std::string_view id) {
        return std::find(f.assumptions.begin(), f.assumptions.end(), id) != f.assumptions.end();
    };
    std::ostringstream c;
    if (!theorem) {
        c << "descriptive only: the generic assumption is absent at some place, so no temperedness theorem is "
             "invoked; ";
        if (g.nontempered_places.empty())
            c << "every listed place is tempered";
        else
            c << "non-tempered at " << list_names(g.nontempered_places);
    } else if (g.nontempered_places.empty()) {
        c << "tempered at all listed places";
        if (has(kAssumptionRigidity))
            c << "; under " << kAssumptionRigidity << ", tempered everywhere";
    } else {
        c << "non-tempered at " << list_names(g.nontempered_places)
          << ": a packet with a generic member must be tempered, so local genericity fails there and the family "
             "cannot come from a locally generic cuspidal representation";
        if (has(kAssumptionUnramifiedArthur))
            c << " under " << kAssumptionUnramifiedArthur;
        else
            c << " (this needs " << kAssumptionUnramifiedArthur << ", which is not assumed)";
    }
    g.conclusion = c.str();
    return g;
}

std::string emit_machine(const GlobalReport& g)
{
    json places = json::array();
    for (const auto& p : g.places)
        places.push_back({{"label", p.label},
                          {"verdict", p.verdict},
                          {"witness", to_json(p.witness)},
                          {"generic_assumption", p.generic_assumption}});
    json j{{"label", g.label},
           {"mode", g.mode},
           {"places", places},
           {"nontempered_places", g.nontempered_places},
           {"assumptions", g.assumptions},
           {"conclusion", g.conclusion}};
    return j.dump(2) + "\n";
}

GlobalReport parse_machine_global(std::string_view text)
{
    try {
        auto j = json::parse(text);
        GlobalReport g;
        g.label = j.at("label").get<std::string>();
        g.mode = j.at("mode").get<std::string>();
        for (const auto& p : j.at("places")) {
            PlaceVerdict v;
            v.label = p.at("label").get<std::string>();
            v.verdict = p.at("verdict").get<std::string>();
            from_json_value(p.at("witness"), v.witness);
            v.generic_assumption = p.at("generic_assumption").get<bool>();
            g.places.push_back(std::move(v));
        }
        g.nontempered_places = j.at("nontempered_places").get<std::vector<std::string>>();
        g.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        g.conclusion = j.at("conclusion").get<std::string>();
        return g;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("global report: ") + e.what());
    }
}

std::string emit_text(const GlobalReport& g)
{
    std::ostringstream os;
    os << "family: " << (g.label.empty() ? "(unlabelled)" : g.label) << " [" << g.mode << " mode]\n";
    for (const auto& p : g.places) {
        os << "  " << p.label << ": " << p.verdict;
        if (p.witness)
            os << " (witness " << to_text(*p.witness) << ")";
        if (!p.generic_assumption)
            os << " [no generic assumption]";
        os << "\n";
    }
    if (!g.assumptions.empty()) {
        os << "assumptions:\n";
        for (const auto& a : g.assumptions)
            os << "  " << a << "\n";
    }
    os << "conclusion: " << g.conclusion << "\n";
    return os.str();
}

} // namespace arthur
