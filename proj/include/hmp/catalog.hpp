#pragma once

// The complete three-dimensional case analysis: every family of closed
// 3-dimensional infra-solvmanifolds of type (R) carrying the flat, nil or sol
// geometry, with the parameterized linearizations of their self-maps, the
// holonomy action each family fixes, and the resulting positivity verdicts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmp/bigint.hpp"
#include "hmp/holonomy.hpp"
#include "hmp/json_io.hpp"
#include "hmp/matrix.hpp"
#include "hmp/spectral.hpp"

namespace hmp {

enum class Applicability {
    applicable,             // the positivity test applies parameter by parameter
    excluded_by_holonomy,   // holonomy admits no fixed-point-free automorphism
    excluded_structurally,  // every admissible map is singular or nonexistent
};

enum class VerdictKind { positive, conditions_fail, not_applicable };

std::string to_string(Applicability a);
std::string to_string(VerdictKind v);

enum class Parity { any, even, odd };

struct ParamSpec {
    std::string name;
    Parity parity = Parity::any;
    bool optional = false;
    long def = 0;      // default when optional and absent
    std::string note;  // human-readable constraint
};

// Parameter assignment for one family member.
using HomParams = std::map<std::string, long>;

struct CatalogEntry {
    std::string name;
    std::string geometry;  // "flat", "nil" or "sol"
    int dimension = 3;
    std::string section;        // position in the case analysis, e.g. "4.1.2"
    std::string holonomy_name;  // builtin finite group name
    Applicability applicability = Applicability::applicable;
    std::vector<std::string> cases;  // empty when there is no case split
    // Parameter schema per case; key "" for entries without a case split.
    std::map<std::string, std::vector<ParamSpec>> param_schema;
    // Optional projection override for scan exceptions (default: the
    // required parameters of the case, in schema order).
    std::map<std::string, std::vector<std::string>> projection;

    FiniteGroup holonomy() const;
    // Validates the case name ("" only for caseless entries).
    const std::vector<ParamSpec>& params_for(const std::string& case_name) const;
    std::vector<std::string> projection_for(const std::string& case_name) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& name);

// Checks names, parities and family constraints; fills optional defaults.
HomParams validate_params(const CatalogEntry& e, const std::string& case_name,
                          const HomParams& given);

// The 3x3 integer linearization of the family member. Throws
// no_such_homomorphism_error when the defining relations are contradictory.
IntMatrix build_linearization(const CatalogEntry& e, const std::string& case_name,
                              const HomParams& params);

// The holonomy automorphism the family pairs with its maps. Throws
// schema_error for entries excluded by holonomy.
Endomorphism holonomy_action(const CatalogEntry& e, const std::string& case_name);

struct VerdictResult {
    std::string entry;
    std::string section;
    std::string case_name;  // "" when there is no case split
    HomParams params;
    std::optional<IntMatrix> matrix;
    std::optional<SpectralReport> report;
    bool cond3 = false;  // holonomy action fixes only the identity
    VerdictKind verdict = VerdictKind::not_applicable;
    std::optional<Rat> known_density;  // exact density when the analysis pins one down
    std::string witness;
};

VerdictResult verdict(const CatalogEntry& e, const std::string& case_name,
                      const HomParams& given);

struct ScanRange {
    std::string name;
    long lo = 0, hi = 0;  // inclusive
};

struct ScanResult {
    std::string entry;
    std::string case_name;
    std::vector<std::string> projection;  // coordinate names of the exceptions
    unsigned long scanned = 0;            // tuples enumerated
    unsigned long valid = 0;              // tuples passing validation
    unsigned long positive = 0;           // valid tuples with a positive verdict
    // Projected tuples of the valid, non-positive members: sorted, unique.
    std::vector<std::vector<long>> exceptions;
};

// Exhaustive verdicts over a box: one range per required parameter of the
// case (exactly those), optional parameters pinned to their defaults.
// Deterministic for any jobs value; jobs <= 0 picks hardware concurrency.
ScanResult scan(const CatalogEntry& e, const std::string& case_name,
                const std::vector<ScanRange>& box, int jobs = 1);

Json verdict_to_json(const VerdictResult& v);
Json scan_to_json(const ScanResult& s);
Json list_entries();

}  // namespace hmp
