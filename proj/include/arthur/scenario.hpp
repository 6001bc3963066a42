#pragma once

#include "arthur/nilpotent.hpp"
#include "arthur/parameters.hpp"
#include "arthur/root_datum.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace arthur {

struct RhoSpec {
    enum class Kind { Trivial, Partition, Expert };
    Kind kind = Kind::Trivial;
    Partition partition;      ///< Kind::Partition
    WeightedDynkinDiagram H;  ///< Kind::Expert
    std::vector<Root> S;      ///< Kind::Expert

    friend bool operator==(const RhoSpec&, const RhoSpec&) = default;
};

/// One unramified place. group is G itself; the engine works on its dual.
/// phi_units[i] is the unit angle k/m of a_i on the dual side.
struct Scenario {
    std::string label;
    CartanSpec group;
    std::vector<Rational> phi_units;
    RhoSpec rho;
    bool generic_assumption = true;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// JSON scenario:
///   {"label": "...", "group": {"family": "A", "rank": 1},
///    "phi_units": ["0", "1/2"],
///    "rho": "trivial" | {"partition": [2]} | {"expert": {"H": [2], "S": [[1]]}},
///    "generic_assumption": true}
/// Errors are ValidationError prefixed with the field path, e.g.
/// "rho.partition: odd part 3 has odd multiplicity 1".
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& file);
std::string emit_scenario(const Scenario& s);

/// The Arthur parameter on the dual datum. Partitions are validated for the
/// dual type. Throws ValidationError with a field path.
ArthurParameter build_arthur_parameter(const Scenario& s);

struct Place {
    std::string label;
    Scenario scenario;
};

/// Known assumption identifiers for global reports.
inline constexpr std::string_view kAssumptionUnramifiedArthur = "unramified-arthur-packets";
inline constexpr std::string_view kAssumptionRigidity = "rigidity";

/// Statement attached to an assumption identifier; throws ValidationError
/// for unknown identifiers.
std::string assumption_statement(std::string_view id);

struct PlaceFamily {
    std::string label;
    std::vector<Place> places;
    std::vector<std::string> assumptions;
};

/// {"label": ..., "assumptions": [...], "places": [{"label": "v2", "scenario": {...}}
///  or {"label": "v3", "scenario_file": "relative/path.json"}]}
/// scenario_file is resolved against base_dir. Throws ValidationError on an
/// empty family.
PlaceFamily parse_place_family(std::string_view json_text, const std::filesystem::path& base_dir = {});
PlaceFamily load_place_family(const std::filesystem::path& file);

} // namespace arthur
