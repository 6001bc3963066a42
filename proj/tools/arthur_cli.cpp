// Command-line front end: check / batch / global / orbits.
//
// Exit status: 0 ok, 1 bad input, 2 internal invariant violated.

#include "arthur/errors.hpp"
#include "arthur/nilpotent.hpp"
#include "arthur/report.hpp"
#include "arthur/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace arthur;

namespace {

enum Exit { kOk = 0, kInput = 1, kInvariant = 2 };

struct Outcome {
    int code = kOk;
    std::string out;
    std::string err;
};

template <typename F>
Outcome guarded(F&& f)
{
    Outcome o;
    try {
        o.out = f();
    } catch (const ValidationError& e) {
        o.code = kInput;
        o.err = std::string("error: ") + e.what() + "\n";
    } catch (const InvariantViolation& e) {
        o.code = kInvariant;
        o.err = std::string("invariant violated: ") + e.what() + "\n";
    } catch (const std::overflow_error& e) {
        o.code = kInput;
        o.err = std::string("error: ") + e.what() + "\n";
    }
    return o;
}

int finish(const Outcome& o)
{
    std::cout << o.out;
    std::cerr << o.err;
    return o.code;
}

std::string render(const Report& r, bool machine) { return machine ? emit_machine(r) : emit_text(r); }

std::string list_orbits(const std::string& family_letter, int rank)
{
    CartanSpec g{parse_family(family_letter), rank};
    g.validate();
    auto dual = dual_datum(build_root_datum(g)).spec();
    if (dual.family == Family::G)
        throw ValidationError("no partition model for type G");
    std::ostringstream os;
    os << "group " << g.name() << ", dual " << dual.name() << "\n";
    for (const auto& p : valid_partitions(dual.family, dual.rank)) {
        os << "  " << to_text(p) << "  H = " << to_text(wdd_from_partition(dual.family, dual.rank, p));
        if (dual.rank <= kMaxMatrixRank) {
            auto s = sl2_data_from_partition(dual.family, dual.rank, p);
            os << "  S = {";
            for (std::size_t i = 0; i < s.S.size(); ++i)
                os << (i ? ", " : "") << to_text(s.S[i]);
            os << "}";
        }
        if (dual.family == Family::D && p.is_very_even())
            os << "  (very even)";
        os << "\n";
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unramified Arthur parameters: phi_psi, standard modules, L-factors and temperedness verdicts"};
    app.require_subcommand(1);

    std::string format = "text";
    bool certify = false;
    app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--certify", certify, "include the full eigenvalue multisets");

    std::string scenario_file;
    auto* check = app.add_subcommand("check", "classify one scenario");
    check->add_option("scenario", scenario_file)->required()->check(CLI::ExistingFile);

    std::string dir;
    bool serial = false;
    auto* batch = app.add_subcommand("batch", "classify every *.json scenario in a directory");
    batch->add_option("dir", dir)->required()->check(CLI::ExistingDirectory);
    batch->add_flag("--serial", serial, "do not evaluate scenarios concurrently");

    std::string family_file;
    auto* global = app.add_subcommand("global", "aggregate verdicts over a family of places");
    global->add_option("family", family_file)->required()->check(CLI::ExistingFile);

    std::string orbit_family;
    int orbit_rank = 0;
    auto* orbits = app.add_subcommand("orbits", "list partitions and diagrams for the dual of a group");
    orbits->add_option("family", orbit_family)->required();
    orbits->add_option("rank", orbit_rank)->required();

    for (auto* sub : {check, batch, global}) {
        sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
        sub->add_flag("--certify", certify, "include the full eigenvalue multisets");
    }

    CLI11_PARSE(app, argc, argv);
    const bool machine = format == "machine";

    if (*check)
        return finish(guarded([&] { return render(run_scenario(load_scenario(scenario_file), certify), machine); }));

    if (*global) {
        return finish(guarded([&] {
            auto g = ramanujan_report(load_place_family(family_file));
            return machine ? emit_machine(g) : emit_text(g);
        }));
    }

    if (*orbits)
        return finish(guarded([&] { return list_orbits(orbit_family, orbit_rank); }));

    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());

    auto one = [&](const fs::path& f) {
        auto o = guarded([&] { return render(run_scenario(load_scenario(f), certify), machine); });
        if (!o.err.empty())
            o.err = f.filename().string() + ": " + o.err;
        return o;
    };
    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(serial ? std::launch::deferred : std::launch::async, one, f));
    int code = kOk;
    for (auto& j : jobs) {
        auto o = j.get();
        std::cout << o.out;
        std::cerr << o.err;
        code = std::max(code, o.code);
    }
    return code;
}
