#include "arthur/scenario.hpp"

#include "arthur/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace arthur {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ValidationError(path + ": " + what);
}

const json& field(const json& j, const std::string& path, const char* key)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int as_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected a list of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], index(path, i)));
    return out;
}

Rational as_rational(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (!j.is_string())
        fail(path, "expected a rational \"k/m\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

template <typename F>
auto with_path(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

RhoSpec parse_rho(const json& j, const std::string& path)
{
    RhoSpec rho;
    if (j.is_string()) {
        if (j.get<std::string>() != "trivial")
            fail(path, "expected \"trivial\", {\"partition\": ...} or {\"expert\": ...}");
        return rho;
    }
    if (!j.is_object() || j.size() != 1)
        fail(path, "expected \"trivial\", {\"partition\": ...} or {\"expert\": ...}");
    if (j.contains("partition")) {
        auto p = join(path, "partition");
        auto parts = as_int_list(j["partition"], p);
        rho.kind = RhoSpec::Kind::Partition;
        rho.partition = with_path(p, [&] { return Partition(parts); });
        return rho;
    }
    if (j.contains("expert")) {
        auto p = join(path, "expert");
        const auto& e = j["expert"];
        auto h = as_int_list(field(e, p, "H"), join(p, "H"));
        rho.kind = RhoSpec::Kind::Expert;
        rho.H = with_path(join(p, "H"), [&] { return WeightedDynkinDiagram(h); });
        const auto& s = field(e, p, "S");
        if (!s.is_array())
            fail(join(p, "S"), "expected a list of coefficient vectors");
        for (std::size_t i = 0; i < s.size(); ++i)
            rho.S.emplace_back(as_int_list(s[i], index(join(p, "S"), i)));
        return rho;
    }
    fail(path, "expected \"trivial\", {\"partition\": ...} or {\"expert\": ...}");
}

Scenario parse_scenario_json(const json& j, const std::string& path)
{
    if (!j.is_object())
        fail(path.empty() ? "scenario" : path, "expected an object");
    Scenario s;
    if (j.contains("label")) {
        if (!j["label"].is_string())
            fail(join(path, "label"), "expected a string");
        s.label = j["label"].get<std::string>();
    }
    const auto& g = field(j, path, "group");
    auto gp = join(path, "group");
    const auto& fam = field(g, gp, "family");
    if (!fam.is_string())
        fail(join(gp, "family"), "expected a family letter");
    s.group.family = with_path(join(gp, "family"), [&] { return parse_family(fam.get<std::string>()); });
    s.group.rank = as_int(field(g, gp, "rank"), join(gp, "rank"));
    with_path(gp, [&] { s.group.validate(); return 0; });

    auto up = join(path, "phi_units");
    if (j.contains("phi_units")) {
        const auto& u = j["phi_units"];
        if (!u.is_array())
            fail(up, "expected a list of unit angles");
        for (std::size_t i = 0; i < u.size(); ++i) {
            auto a = as_rational(u[i], index(up, i));
            if (a < 0 || a >= 1)
                fail(index(up, i), "unit angle " + pretty(a) + " outside [0,1)");
            s.phi_units.push_back(a);
        }
    } else {
        s.phi_units.assign(static_cast<std::size_t>(s.group.rank), Rational(0));
    }
    if (s.phi_units.size() != static_cast<std::size_t>(s.group.rank))
        fail(up, "has " + std::to_string(s.phi_units.size()) + " entries, rank is " + std::to_string(s.group.rank));

    s.rho = parse_rho(field(j, path, "rho"), join(path, "rho"));
    if (s.rho.kind == RhoSpec::Kind::Expert) {
        auto hp = join(path, "rho.expert.H");
        if (s.rho.H.size() != static_cast<std::size_t>(s.group.rank))
            fail(hp, "has " + std::to_string(s.rho.H.size()) + " entries, rank is " + std::to_string(s.group.rank));
        for (std::size_t i = 0; i < s.rho.S.size(); ++i)
            if (s.rho.S[i].rank() != static_cast<std::size_t>(s.group.rank))
                fail(index(join(path, "rho.expert.S"), i), "wrong length");
    }

    if (j.contains("generic_assumption")) {
        if (!j["generic_assumption"].is_boolean())
            fail(join(path, "generic_assumption"), "expected true or false");
        s.generic_assumption = j["generic_assumption"].get<bool>();
    }
    for (const auto& [key, value] : j.items())
        if (key != "label" && key != "group" && key != "phi_units" && key != "rho" && key != "generic_assumption")
            fail(join(path, key), "unknown field");
    return s;
}

json parse_text(std::string_view text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(what + ": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw ValidationError(file.string() + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Scenario parse_scenario(std::string_view json_text)
{
    return parse_scenario_json(parse_text(json_text, "scenario"), "");
}

Scenario load_scenario(const std::filesystem::path& file)
{
    try {
        return parse_scenario(read_file(file));
    } catch (const ValidationError& e) {
        throw ValidationError(file.filename().string() + ": " + e.what());
    }
}

std::string emit_scenario(const Scenario& s)
{
    json j;
    j["label"] = s.label;
    j["group"] = {{"family", std::string(1, static_cast<char>(s.group.family))}, {"rank", s.group.rank}};
    j["phi_units"] = json::array();
    for (const auto& u : s.phi_units)
        j["phi_units"].push_back(canonical(u));
    switch (s.rho.kind) {
    case RhoSpec::Kind::Trivial: j["rho"] = "trivial"; break;
    case RhoSpec::Kind::Partition: j["rho"] = {{"partition", s.rho.partition.parts()}}; break;
    case RhoSpec::Kind::Expert: {
        json roots = json::array();
        for (const auto& r : s.rho.S)
            roots.push_back(r.coeffs());
        j["rho"] = {{"expert", {{"H", s.rho.H.values()}, {"S", roots}}}};
        break;
    }
    }
    j["generic_assumption"] = s.generic_assumption;
    return j.dump(2);
}

ArthurParameter build_arthur_parameter(const Scenario& s)
{
    auto dual = with_path("group", [&] { return dual_datum(build_root_datum(s.group)); });
    std::vector<QMonomial> units;
    for (const auto& a : s.phi_units)
        units.push_back(QMonomial::root_of_unity(a));
    UnramifiedParameter phi(dual, std::move(units));

    SL2Data rho{WeightedDynkinDiagram::zero(dual.rank()), {}};
    switch (s.rho.kind) {
    case RhoSpec::Kind::Trivial: break;
    case RhoSpec::Kind::Partition:
        rho = with_path("rho.partition", [&] {
            if (dual.spec().family == Family::G)
                throw ValidationError("no partition model for type G; use expert mode");
            validate_partition(dual.spec().family, dual.rank(), s.rho.partition);
            return sl2_data_from_partition(dual.spec().family, dual.rank(), s.rho.partition);
        });
        break;
    case RhoSpec::Kind::Expert: rho = SL2Data{s.rho.H, s.rho.S}; break;
    }
    auto path = s.rho.kind == RhoSpec::Kind::Expert ? std::string("rho.expert") : std::string("phi_units");
    return with_path(path, [&] { return make_arthur_parameter(std::move(phi), std::move(rho)); });
}

std::string assumption_statement(std::string_view id)
{
    if (id == kAssumptionUnramifiedArthur)
        return "at almost all finite places v, pi_v lies in the L-packet of phi_psi_v, where psi_v is the local "
               "Arthur parameter of pi_v";
    if (id == kAssumptionRigidity)
        return "a cuspidal automorphic representation that is tempered at almost all places is tempered at every "
               "place";
    throw ValidationError("unknown assumption '" + std::string(id) + "'");
}

PlaceFamily parse_place_family(std::string_view json_text, const std::filesystem::path& base_dir)
{
    auto j = parse_text(json_text, "family");
    if (!j.is_object())
        fail("family", "expected an object");
    PlaceFamily f;
    if (j.contains("label") && j["label"].is_string())
        f.label = j["label"].get<std::string>();
    if (j.contains("assumptions")) {
        const auto& a = j["assumptions"];
        if (!a.is_array())
            fail("assumptions", "expected a list");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_string())
                fail(index("assumptions", i), "expected a string");
            auto id = a[i].get<std::string>();
            with_path(index("assumptions", i), [&] { return assumption_statement(id); });
            f.assumptions.push_back(id);
        }
    }
    const auto& places = field(j, "", "places");
    if (!places.is_array() || places.empty())
        fail("places", "family needs at least one place");
    for (std::size_t i = 0; i < places.size(); ++i) {
        auto p = index("places", i);
        const auto& e = places[i];
        Place place;
        const auto& label = field(e, p, "label");
        if (!label.is_string())
            fail(join(p, "label"), "expected a string");
        place.label = label.get<std::string>();
        if (e.contains("scenario")) {
            place.scenario = parse_scenario_json(e["scenario"], join(p, "scenario"));
        } else if (e.contains("scenario_file")) {
            auto file = base_dir / e["scenario_file"].get<std::string>();
            place.scenario = with_path(join(p, "scenario_file"), [&] { return load_scenario(file); });
        } else {
            fail(p, "needs \"scenario\" or \"scenario_file\"");
        }
        f.places.push_back(std::move(place));
    }
    return f;
}

PlaceFamily load_place_family(const std::filesystem::path& file)
{
    return parse_place_family(read_file(file), file.parent_path());
}

} // namespace arthur
