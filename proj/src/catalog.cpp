#include "hmp/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hmp/errors.hpp"
#include "hmp/parallel.hpp"
#include "hmp/polynomial.hpp"

namespace hmp {

std::string to_string(Applicability a) {
    switch (a) {
        case Applicability::applicable: return "applicable";
        case Applicability::excluded_by_holonomy: return "excluded_by_holonomy";
        case Applicability::excluded_structurally: return "excluded_structurally";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::positive: return "positive";
        case VerdictKind::conditions_fail: return "conditions_fail";
        case VerdictKind::not_applicable: return "not_applicable";
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::any: return "any";
        case Parity::even: return "even";
        case Parity::odd: return "odd";
    }
    throw std::logic_error("unreachable");
}

ParamSpec req(const char* name, Parity parity = Parity::any, const char* note = "") {
    return {name, parity, false, 0, note};
}

ParamSpec opt(const char* name, long def, const char* note) {
    return {name, Parity::any, true, def, note};
}

CatalogEntry excluded(const char* name, const char* geometry, const char* section,
                      const char* holonomy) {
    CatalogEntry e;
    e.name = name;
    e.geometry = geometry;
    e.section = section;
    e.holonomy_name = holonomy;
    e.applicability = Applicability::excluded_by_holonomy;
    e.param_schema[""] = {};
    return e;
}

}  // namespace

FiniteGroup CatalogEntry::holonomy() const { return FiniteGroup::builtin(holonomy_name); }

const std::vector<ParamSpec>& CatalogEntry::params_for(const std::string& case_name) const {
    if (cases.empty()) {
        if (!case_name.empty()) throw schema_error(name + " has no case split");
        return param_schema.at("");
    }
    for (const std::string& c : cases)
        if (c == case_name) return param_schema.at(case_name);
    std::string wanted;
    for (const std::string& c : cases) wanted += (wanted.empty() ? "" : ", ") + c;
    if (case_name.empty()) throw schema_error(name + " requires a case: one of " + wanted);
    throw schema_error("unknown case '" + case_name + "' for " + name + "; expected one of " + wanted);
}

std::vector<std::string> CatalogEntry::projection_for(const std::string& case_name) const {
    const std::vector<ParamSpec>& specs = params_for(case_name);
    const auto it = projection.find(cases.empty() ? std::string() : case_name);
    if (it != projection.end()) return it->second;
    std::vector<std::string> names;
    for (const ParamSpec& s : specs)
        if (!s.optional) names.push_back(s.name);
    return names;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;

        {
            CatalogEntry e;  // torus: any integer matrix arises
            e.name = "G1";
            e.geometry = "flat";
            e.section = "4.1";
            e.holonomy_name = "trivial";
            e.param_schema[""] = {req("d11"), req("d12"), req("d13"), req("d21"), req("d22"),
                                  req("d23"), req("d31"), req("d32"), req("d33")};
            v.push_back(e);
        }
        v.push_back(excluded("G2", "flat", "4.1", "Z2"));
        {
            CatalogEntry e;
            e.name = "G3";
            e.geometry = "flat";
            e.section = "4.1.1";
            e.holonomy_name = "Z3";
            e.param_schema[""] = {req("l"), req("m2"), req("n2")};
            // Positivity depends on (m2, n2) only.
            e.projection[""] = {"m2", "n2"};
            v.push_back(e);
        }
        v.push_back(excluded("G4", "flat", "4.1", "Z4"));
        v.push_back(excluded("G5", "flat", "4.1", "Z6"));
        {
            CatalogEntry e;
            e.name = "G6";
            e.geometry = "flat";
            e.section = "4.1.2";
            e.holonomy_name = "Z2xZ2";
            e.cases = {"a", "b"};
            e.param_schema["a"] = {req("k3", Parity::even), req("m1", Parity::odd), req("n2")};
            e.param_schema["b"] = {req("k2", Parity::odd), req("m3", Parity::even), req("n1")};
            v.push_back(e);
        }
        v.push_back(excluded("B1", "flat", "4.1", "Z2"));
        v.push_back(excluded("B2", "flat", "4.1", "Z2"));
        {
            CatalogEntry e;
            e.name = "B3";
            e.geometry = "flat";
            e.section = "4.1.3";
            e.holonomy_name = "Z2xZ2";
            e.applicability = Applicability::excluded_structurally;
            e.cases = {"a", "b"};
            e.param_schema["a"] = {req("k1", Parity::even), req("n2"), req("n3")};
            e.param_schema["b"] = {req("k1", Parity::odd), req("k3", Parity::even),
                                   req("m3", Parity::even), req("n3")};
            v.push_back(e);
        }
        {
            CatalogEntry e;
            e.name = "B4";
            e.geometry = "flat";
            e.section = "4.1.4";
            e.holonomy_name = "Z2xZ2";
            e.applicability = Applicability::excluded_structurally;
            e.cases = {"a", "b"};
            e.param_schema["a"] = {req("k1", Parity::even), req("k2", Parity::odd),
                                   req("m1", Parity::odd), req("n2")};
            e.param_schema["b"] = {req("n1")};
            v.push_back(e);
        }
        {
            CatalogEntry e;
            e.name = "NilI";
            e.geometry = "nil";
            e.section = "4.2.1";
            e.holonomy_name = "trivial";
            e.param_schema[""] = {req("a"), req("b"), req("c"), req("d"),
                                  opt("k", 1, "k >= 1")};
            v.push_back(e);
        }
        v.push_back(excluded("NilII", "nil", "4.2", "Z2"));
        v.push_back(excluded("NilIV", "nil", "4.2", "Z2"));
        {
            CatalogEntry e;
            e.name = "NilVIII";
            e.geometry = "nil";
            e.section = "4.2.2";
            e.holonomy_name = "Z2xZ2";
            e.cases = {"a", "b"};
            e.param_schema["a"] = {req("m2"), req("n1"),
                                   opt("k", 4, "k > 0 and k = 0 mod 4")};
            e.param_schema["b"] = {req("m2"), req("n3"),
                                   opt("k", 4, "k > 0 and k = 0 mod 4")};
            v.push_back(e);
        }
        v.push_back(excluded("NilX", "nil", "4.2", "Z2"));
        {
            CatalogEntry e;
            e.name = "NilXIII_a";
            e.geometry = "nil";
            e.section = "4.2.3";
            e.holonomy_name = "Z3";
            e.param_schema[""] = {req("m1"), opt("k", 3, "k >= 1 and k = 0 or 2 mod 3")};
            v.push_back(e);
        }
        {
            CatalogEntry e;
            e.name = "NilXIII_b";
            e.geometry = "nil";
            e.section = "4.2.4";
            e.holonomy_name = "Z3";
            e.param_schema[""] = {req("m2"), opt("k", 3, "k >= 1 and k = 0 or 1 mod 3")};
            v.push_back(e);
        }
        v.push_back(excluded("NilXVI", "nil", "4.2", "Z6"));
        {
            CatalogEntry e;
            e.name = "SolPi1";
            e.geometry = "sol";
            e.section = "4.3.1";
            e.holonomy_name = "trivial";
            e.param_schema[""] = {
                req("u11"), req("u12"), req("u21"), req("u22"),
                req("zeta", Parity::any, "zeta = 1 needs U A = A U, zeta = -1 needs U A = A^-1 U, anything else forces U = 0"),
                opt("A11", 2, "gluing matrix: det 1, trace > 2"),
                opt("A12", 1, ""), opt("A21", 1, ""), opt("A22", 1, "")};
            v.push_back(e);
        }
        v.push_back(excluded("SolPi2plus", "sol", "4.3", "Z2"));
        v.push_back(excluded("SolPi2minus", "sol", "4.3", "Z2"));
        v.push_back(excluded("SolPi3", "sol", "4.3", "Z2"));
        {
            CatalogEntry e;
            e.name = "SolPi6";
            e.geometry = "sol";
            e.section = "4.3.2";
            e.holonomy_name = "Z2xZ2";
            e.applicability = Applicability::excluded_structurally;
            e.param_schema[""] = {req("u11"), req("u12"), req("u21"), req("u22")};
            v.push_back(e);
        }
        return v;
    }();
    return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e;
    throw schema_error("unknown catalog entry '" + name + "'");
}

namespace {

void check_family_constraints(const CatalogEntry& e, const HomParams& p) {
    auto at = [&](const char* n) { return p.at(n); };
    if (e.name == "NilI") {
        if (at("k") < 1) throw schema_error("k must be >= 1");
    } else if (e.name == "NilVIII") {
        const long k = at("k");
        if (k <= 0 || k % 4 != 0) throw schema_error("k must be a positive multiple of 4");
    } else if (e.name == "NilXIII_a") {
        const long k = at("k");
        if (k < 1 || k % 3 == 1) throw schema_error("k must be >= 1 and = 0 or 2 mod 3");
    } else if (e.name == "NilXIII_b") {
        const long k = at("k");
        if (k < 1 || k % 3 == 2) throw schema_error("k must be >= 1 and = 0 or 1 mod 3");
    } else if (e.name == "SolPi1") {
        const IntMatrix a{{at("A11"), at("A12")}, {at("A21"), at("A22")}};
        if (det(a) != 1 || trace(a) <= 2)
            throw schema_error("gluing matrix must have det 1 and trace > 2");
        const IntMatrix u{{at("u11"), at("u12")}, {at("u21"), at("u22")}};
        const long zeta = at("zeta");
        if (zeta == 1) {
            if (!(u * a == a * u)) throw schema_error("zeta = 1 requires U A = A U");
        } else if (zeta == -1) {
            if (!(u * a == unimodular_inverse(a) * u))
                throw schema_error("zeta = -1 requires U A = A^-1 U");
        } else {
            if (!(u == IntMatrix(2, 2)))
                throw schema_error("zeta outside {1, -1} forces U = 0");
        }
    }
}

}  // namespace

HomParams validate_params(const CatalogEntry& e, const std::string& case_name,
                          const HomParams& given) {
    const std::vector<ParamSpec>& specs = e.params_for(case_name);
    for (const auto& [name, value] : given) {
        (void)value;
        const bool known = std::any_of(specs.begin(), specs.end(),
                                       [&](const ParamSpec& s) { return s.name == name; });
        if (!known)
            throw schema_error("unknown parameter '" + name + "' for " + e.name +
                               (case_name.empty() ? "" : " case " + case_name));
    }
    HomParams out;
    for (const ParamSpec& s : specs) {
        const auto it = given.find(s.name);
        long val = 0;
        if (it != given.end()) {
            val = it->second;
        } else if (s.optional) {
            val = s.def;
        } else {
            throw schema_error("missing required parameter '" + s.name + "'");
        }
        if (s.parity == Parity::even && val % 2 != 0)
            throw schema_error("parameter '" + s.name + "' must be even");
        if (s.parity == Parity::odd && val % 2 == 0)
            throw schema_error("parameter '" + s.name + "' must be odd");
        out[s.name] = val;
    }
    check_family_constraints(e, out);
    return out;
}

IntMatrix build_linearization(const CatalogEntry& e, const std::string& case_name,
                              const HomParams& params) {
    e.params_for(case_name);  // validates the case name
    if (e.applicability == Applicability::excluded_by_holonomy)
        throw schema_error(e.name + " carries no linearization family");
    auto at = [&](const char* n) { return Int(params.at(n)); };
    const std::string& n = e.name;
    IntMatrix m(3, 3);
    if (n == "G1") {
        m(0, 0) = at("d11"), m(0, 1) = at("d12"), m(0, 2) = at("d13");
        m(1, 0) = at("d21"), m(1, 1) = at("d22"), m(1, 2) = at("d23");
        m(2, 0) = at("d31"), m(2, 1) = at("d32"), m(2, 2) = at("d33");
    } else if (n == "G3") {
        m(0, 0) = 3 * at("l") + 2;
        m(1, 1) = at("m2"), m(1, 2) = at("n2") - at("m2");
        m(2, 1) = at("n2"), m(2, 2) = -at("m2");
    } else if (n == "G6" && case_name == "a") {
        m(0, 2) = divexact(at("k3"), 2);
        m(1, 0) = at("m1");
        m(2, 1) = 2 * at("n2") - 1;
    } else if (n == "G6" && case_name == "b") {
        m(0, 1) = at("k2");
        m(1, 2) = divexact(at("m3"), 2);
        m(2, 0) = 2 * at("n1") - 1;
    } else if (n == "B3" && case_name == "a") {
        m(0, 0) = at("k1");
        m(2, 1) = 2 * at("n2"), m(2, 2) = at("n3");
    } else if (n == "B3" && case_name == "b") {
        m(0, 0) = at("k1"), m(0, 2) = divexact(at("k3"), 2);
        m(1, 2) = divexact(at("m3"), 2);
        m(2, 2) = at("n3");
    } else if (n == "B4" && case_name == "a") {
        m(0, 0) = at("k1"), m(0, 1) = at("k2");
        m(1, 0) = at("m1");
        m(2, 1) = 2 * at("n2") - 1;
    } else if (n == "B4" && case_name == "b") {
        throw no_such_homomorphism_error("B4 case b: the defining relations are contradictory");
    } else if (n == "NilI") {
        m(0, 0) = at("a") * at("d") - at("b") * at("c");
        m(1, 1) = at("a"), m(1, 2) = at("b");
        m(2, 1) = at("c"), m(2, 2) = at("d");
    } else if (n == "NilVIII" && case_name == "a") {
        m(0, 1) = at("m2");
        m(1, 0) = 2 * at("n1") + 1;
        m(2, 2) = -at("m2") * (2 * at("n1") + 1);
    } else if (n == "NilVIII" && case_name == "b") {
        m(0, 1) = at("m2");
        m(1, 2) = 2 * at("n3") + 1;
        m(2, 0) = at("m2") * (2 * at("n3") + 1);
    } else if (n == "NilXIII_a") {
        m(0, 0) = at("m1"), m(0, 1) = -2 * at("m1");
        m(1, 0) = -at("m1"), m(1, 1) = -at("m1");
        m(2, 2) = -3 * at("m1") * at("m1");
    } else if (n == "NilXIII_b") {
        m(0, 0) = -2 * at("m2"), m(0, 1) = at("m2");
        m(1, 0) = -at("m2"), m(1, 1) = -at("m2");
        m(2, 2) = 3 * at("m2") * at("m2");
    } else if (n == "SolPi1") {
        m(0, 0) = at("u11"), m(0, 1) = at("u12");
        m(1, 0) = at("u21"), m(1, 1) = at("u22");
        m(2, 2) = at("zeta");
    } else if (n == "SolPi6") {
        m(0, 0) = at("u11"), m(0, 1) = at("u12");
        m(1, 0) = at("u21"), m(1, 1) = at("u22");
    } else {
        throw std::logic_error("no linearization recorded for " + n);
    }
    return m;
}

Endomorphism holonomy_action(const CatalogEntry& e, const std::string& case_name) {
    e.params_for(case_name);  // validates the case name
    if (e.applicability == Applicability::excluded_by_holonomy)
        throw schema_error("holonomy " + e.holonomy_name +
                           " admits no fixed-point-free automorphism");
    const FiniteGroup g = e.holonomy();
    if (e.holonomy_name == "trivial") return Endomorphism(g, {0});
    if (e.holonomy_name == "Z3") return Endomorphism(g, {0, 2, 1});
    if (e.holonomy_name == "Z2xZ2")
        return Endomorphism(g, case_name == "b" ? std::vector<int>{0, 3, 1, 2}
                                                : std::vector<int>{0, 2, 3, 1});
    throw std::logic_error("no holonomy action recorded for " + e.name);
}

VerdictResult verdict(const CatalogEntry& e, const std::string& case_name,
                      const HomParams& given) {
    VerdictResult r;
    r.entry = e.name;
    r.section = e.section;
    r.case_name = case_name;
    r.params = validate_params(e, case_name, given);
    if (e.applicability == Applicability::excluded_by_holonomy) {
        r.verdict = VerdictKind::not_applicable;
        r.witness = "holonomy " + e.holonomy_name +
                    " admits no fixed-point-free automorphism; condition (3) cannot hold";
        return r;
    }
    try {
        r.matrix = build_linearization(e, case_name, r.params);
    } catch (const no_such_homomorphism_error&) {
        r.verdict = VerdictKind::not_applicable;
        r.witness = "no such homomorphism: the defining relations are contradictory";
        return r;
    }
    r.report = check_conditions(*r.matrix);
    r.cond3 = gfix(holonomy_action(e, case_name)).size() == 1;
    if (e.applicability == Applicability::excluded_structurally) {
        if (r.report->det_value != 0)
            throw std::logic_error(e.name + ": structurally excluded entry with det != 0");
        r.verdict = VerdictKind::not_applicable;
        r.witness = "linearization is always singular (det = 0)";
        return r;
    }
    if (r.report->cond1 && r.report->cond2 && r.cond3) {
        r.verdict = VerdictKind::positive;
        r.witness = "conditions (1), (2) and (3) hold";
        if (e.name == "NilI") {
            const bool minus_one = char_poly(*r.matrix).eval(Int(-1)) == 0;
            r.known_density = minus_one ? make_rat(1, 2) : Rat(1);
        } else if (e.name == "SolPi1" && r.params.at("zeta") == -1) {
            r.known_density = make_rat(1, 2);
        }
    } else {
        r.verdict = VerdictKind::conditions_fail;
        r.witness = r.report->witness;
        if (!r.cond3) r.witness += "; condition (3) fails";
    }
    return r;
}

ScanResult scan(const CatalogEntry& e, const std::string& case_name,
                const std::vector<ScanRange>& box, int jobs) {
    const std::vector<ParamSpec>& specs = e.params_for(case_name);
    std::vector<ParamSpec> required;
    for (const ParamSpec& s : specs)
        if (!s.optional) required.push_back(s);
    if (box.size() != required.size())
        throw schema_error("scan needs exactly one range per required parameter");
    std::vector<std::pair<long, long>> ranges(required.size());
    std::vector<bool> have(required.size(), false);
    for (const ScanRange& r : box) {
        bool found = false;
        for (std::size_t i = 0; i < required.size(); ++i) {
            if (required[i].name != r.name) continue;
            if (have[i]) throw schema_error("duplicate range for '" + r.name + "'");
            if (r.lo > r.hi) throw schema_error("empty range for '" + r.name + "'");
            ranges[i] = {r.lo, r.hi};
            have[i] = true;
            found = true;
        }
        if (!found)
            throw schema_error("range for unknown or optional parameter '" + r.name + "'");
    }

    unsigned long total = 1;
    for (const auto& [lo, hi] : ranges) total *= static_cast<unsigned long>(hi - lo + 1);

    ScanResult out;
    out.entry = e.name;
    out.case_name = case_name;
    out.projection = e.projection_for(case_name);
    out.scanned = total;

    // Row-major decode in schema order, last parameter fastest.
    auto tuple_at = [&](unsigned long idx) {
        std::vector<long> t(required.size());
        for (std::size_t i = required.size(); i-- > 0;) {
            const auto width = static_cast<unsigned long>(ranges[i].second - ranges[i].first + 1);
            t[i] = ranges[i].first + static_cast<long>(idx % width);
            idx /= width;
        }
        return t;
    };

    enum : unsigned char { invalid = 0, positive = 1, exception = 2 };
    std::vector<unsigned char> code(total, invalid);
    parallel_for(total, jobs, [&](unsigned long idx) {
        const std::vector<long> t = tuple_at(idx);
        HomParams p;
        for (std::size_t i = 0; i < required.size(); ++i) p[required[i].name] = t[i];
        try {
            const VerdictResult v = verdict(e, case_name, p);
            code[idx] = v.verdict == VerdictKind::positive ? positive : exception;
        } catch (const schema_error&) {
            // tuple violates a parity or family constraint: not a member
        }
    });

    std::vector<std::size_t> proj_idx;
    for (const std::string& pn : out.projection) {
        const auto it = std::find_if(required.begin(), required.end(),
                                     [&](const ParamSpec& s) { return s.name == pn; });
        if (it == required.end())
            throw std::logic_error("projection names a parameter without a range: " + pn);
        proj_idx.push_back(static_cast<std::size_t>(it - required.begin()));
    }
    for (unsigned long idx = 0; idx < total; ++idx) {
        if (code[idx] == invalid) continue;
        ++out.valid;
        if (code[idx] == positive) {
            ++out.positive;
            continue;
        }
        const std::vector<long> t = tuple_at(idx);
        std::vector<long> pt(proj_idx.size());
        for (std::size_t i = 0; i < proj_idx.size(); ++i) pt[i] = t[proj_idx[i]];
        out.exceptions.push_back(std::move(pt));
    }
    std::sort(out.exceptions.begin(), out.exceptions.end());
    out.exceptions.erase(std::unique(out.exceptions.begin(), out.exceptions.end()),
                         out.exceptions.end());
    return out;
}

Json verdict_to_json(const VerdictResult& v) {
    Json j;
    j["entry"] = v.entry;
    j["section"] = v.section;
    j["case"] = v.case_name.empty() ? Json(nullptr) : Json(v.case_name);
    Json params = Json::object();
    for (const auto& [name, value] : v.params) params[name] = value;
    j["params"] = params;
    j["matrix"] = v.matrix ? matrix_to_json(*v.matrix) : Json(nullptr);
    j["report"] = v.report ? report_to_json(*v.report) : Json(nullptr);
    j["cond3"] = v.cond3;
    j["verdict"] = to_string(v.verdict);
    j["known_density"] = v.known_density ? rat_to_json(*v.known_density) : Json(nullptr);
    j["witness"] = v.witness;
    return j;
}

Json scan_to_json(const ScanResult& s) {
    Json j;
    j["entry"] = s.entry;
    j["case"] = s.case_name.empty() ? Json(nullptr) : Json(s.case_name);
    j["projection"] = s.projection;
    j["scanned"] = s.scanned;
    j["valid"] = s.valid;
    j["positive"] = s.positive;
    Json ex = Json::array();
    for (const std::vector<long>& t : s.exceptions) ex.push_back(t);
    j["exceptions"] = ex;
    return j;
}

Json list_entries() {
    Json arr = Json::array();
    for (const CatalogEntry& e : catalog()) {
        Json j;
        j["entry"] = e.name;
        j["geometry"] = e.geometry;
        j["dimension"] = e.dimension;
        j["section"] = e.section;
        j["holonomy"] = e.holonomy_name;
        j["applicability"] = to_string(e.applicability);
        j["cases"] = e.cases;
        auto specs_json = [](const std::vector<ParamSpec>& specs) {
            Json list = Json::array();
            for (const ParamSpec& s : specs) {
                Json ps;
                ps["name"] = s.name;
                ps["parity"] = parity_name(s.parity);
                ps["optional"] = s.optional;
                if (s.optional) ps["default"] = s.def;
                if (!s.note.empty()) ps["note"] = s.note;
                list.push_back(ps);
            }
            return list;
        };
        if (e.cases.empty()) {
            j["params"] = specs_json(e.param_schema.at(""));
        } else {
            Json by_case = Json::object();
            for (const std::string& c : e.cases) by_case[c] = specs_json(e.param_schema.at(c));
            j["params"] = by_case;
        }
        arr.push_back(j);
    }
    return arr;
}

}  // namespace hmp
