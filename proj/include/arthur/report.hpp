#pragma once

#include "arthur/scenario.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arthur {

struct LevelFactor {
    int level = 0;
    std::vector<Root> roots;
    std::vector<QMonomial> eigenvalues; ///< r_tilde orientation, same order as roots

    friend bool operator==(const LevelFactor&, const LevelFactor&) = default;
};

/// Everything run_scenario computes, in plain data. Enough to re-check the
/// verdict with the lfactors module alone: the dominant parameter, the Levi
/// and the witness.
struct Report {
    std::string label;
    std::string group;
    std::string dual;
    bool generic_assumption = true;

    std::string rho; ///< "trivial", "[2,1]" or "expert"
    bool very_even = false;
    std::vector<int> H;
    std::vector<Root> S;

    std::vector<QMonomial> phi_psi;
    std::vector<Rational> phi0_units;
    std::vector<Rational> phiplus;
    bool tempered = true;

    std::vector<int> weyl_word;
    std::vector<QMonomial> dominant_parameter;
    std::vector<int> levi;
    std::vector<Rational> nu;             ///< coroot coordinates
    std::vector<Rational> nu_evaluations; ///< simple-root exponents

    std::string verdict; ///< "tempered" | "non-tempered"
    std::optional<Root> witness;
    std::optional<QMonomial> certificate_eigenvalue;
    Rational certificate_s{1};
    std::vector<Root> dominant_S;
    std::vector<Root> full_product_roots;

    bool irreducible = true;
    std::vector<Root> irreducibility_witnesses;
    std::string genericity;

    std::vector<LevelFactor> levels;
    std::vector<Rational> poles_r;
    std::vector<Rational> poles_r_tilde;
    std::string interpretation;

    bool certified = false;
    std::vector<QMonomial> multiset_r;       ///< only with certify
    std::vector<QMonomial> multiset_r_tilde; ///< only with certify

    friend bool operator==(const Report&, const Report&) = default;
};

/// Throws ValidationError on bad input and InvariantViolation if the engine
/// contradicts itself.
Report run_scenario(const Scenario& s, bool certify = false);

/// Canonical JSON: sorted keys, rationals "num/den", two-space indent.
std::string emit_machine(const Report& r);
Report parse_machine_report(std::string_view text);
std::string emit_text(const Report& r);

struct PlaceVerdict {
    std::string label;
    std::string verdict;
    std::optional<Root> witness;
    bool generic_assumption = true;

    friend bool operator==(const PlaceVerdict&, const PlaceVerdict&) = default;
};

struct GlobalReport {
    std::string label;
    std::string mode; ///< "theorem" | "descriptive"
    std::vector<PlaceVerdict> places;
    std::vector<std::string> nontempered_places;
    std::vector<std::string> assumptions; ///< "id: statement"
    std::string conclusion;

    friend bool operator==(const GlobalReport&, const GlobalReport&) = default;
};

GlobalReport ramanujan_report(const PlaceFamily& f);

std::string emit_machine(const GlobalReport& g);
GlobalReport parse_machine_global(std::string_view text);
std::string emit_text(const GlobalReport& g);

} // namespace arthur
