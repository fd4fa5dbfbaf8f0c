// Command line front end. Every subcommand prints one JSON document on
// stdout. Exit codes: 0 success, 1 internal error, 2 schema/usage error,
// 3 class materialization refused by the oracle bound.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmp/catalog.hpp"
#include "hmp/density.hpp"
#include "hmp/errors.hpp"
#include "hmp/json_io.hpp"
#include "hmp/matrix.hpp"
#include "hmp/periodic.hpp"
#include "hmp/spectral.hpp"

namespace {

using hmp::Int;
using hmp::Json;

// Inline JSON when the argument starts with '[' or '{', stdin for "-",
// otherwise a file path.
Json load_json_arg(const std::string& arg) {
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
        text = arg;
    } else if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw hmp::schema_error("cannot open '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw hmp::schema_error("malformed JSON in '" + arg + "'");
    return j;
}

hmp::IntMatrix load_matrix(const std::string& arg) {
    Json j = load_json_arg(arg);
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    return hmp::matrix_from_json(j);
}

long parse_long(const std::string& text) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw hmp::schema_error("not an integer: '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

hmp::HomParams parse_params(const std::string& text) {
    hmp::HomParams out;
    if (text.empty()) return out;
    for (const std::string& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw hmp::schema_error("expected name=value, got '" + item + "'");
        out[item.substr(0, eq)] = parse_long(item.substr(eq + 1));
    }
    return out;
}

std::vector<hmp::ScanRange> parse_box(const std::string& text) {
    std::vector<hmp::ScanRange> out;
    if (text.empty()) return out;
    for (const std::string& item : split(text, ',')) {
        const auto eq = item.find('=');
        const auto dots = item.find("..", eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || dots == std::string::npos)
            throw hmp::schema_error("expected name=lo..hi, got '" + item + "'");
        out.push_back({item.substr(0, eq), parse_long(item.substr(eq + 1, dots - eq - 1)),
                       parse_long(item.substr(dots + 2))});
    }
    return out;
}

// --bound wins over HMP_ORACLE_BOUND; default_class_bound() otherwise.
Int resolve_bound(const std::string& flag_value) {
    std::string text = flag_value;
    if (text.empty())
        if (const char* env = std::getenv("HMP_ORACLE_BOUND")) text = env;
    if (text.empty()) return hmp::default_class_bound();
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw hmp::schema_error("bound must be an integer: '" + text + "'");
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide positivity of the lower density of homotopy minimal periods "
                 "for self-maps of 3-dimensional infra-solvmanifolds of type (R)"};
    app.require_subcommand(1);

    auto* sp = app.add_subcommand(
        "spectral", "certify the unit-circle spectrum of an integer matrix (exact)");
    std::string sp_matrix;
    sp->add_option("-m,--matrix", sp_matrix, "matrix: inline JSON, file path, or '-'")
        ->required();
    sp->callback([&] { emit(hmp::report_to_json(hmp::check_conditions(load_matrix(sp_matrix)))); });

    auto* vd = app.add_subcommand("verdict", "positivity verdict for one family member");
    std::string vd_entry, vd_case, vd_params;
    vd->add_option("-e,--entry", vd_entry, "catalog entry name")->required();
    vd->add_option("--case", vd_case, "case letter for entries with a case split");
    vd->add_option("-p,--params", vd_params, "parameters, e.g. 'm2=1,n2=0'");
    vd->callback([&] {
        const hmp::CatalogEntry& e = hmp::find_entry(vd_entry);
        emit(hmp::verdict_to_json(hmp::verdict(e, vd_case, parse_params(vd_params))));
    });

    auto* sc = app.add_subcommand("scan", "exhaustive verdicts over a parameter box");
    std::string sc_entry, sc_case, sc_box;
    int sc_jobs = 1;
    sc->add_option("-e,--entry", sc_entry, "catalog entry name")->required();
    sc->add_option("--case", sc_case, "case letter for entries with a case split");
    sc->add_option("-b,--box", sc_box, "ranges, e.g. 'k3=-4..4,m1=-3..3,n2=-2..2'");
    sc->add_option("-j,--jobs", sc_jobs, "worker threads (<= 0: hardware concurrency)");
    sc->callback([&] {
        const hmp::CatalogEntry& e = hmp::find_entry(sc_entry);
        emit(hmp::scan_to_json(hmp::scan(e, sc_case, parse_box(sc_box), sc_jobs)));
    });

    auto* hp = app.add_subcommand(
        "hper", "decide NP_k != 0 for k = 1..kmax from the linearization");
    std::string hp_matrix, hp_bound;
    unsigned long hp_kmax = 0, hp_classes = 0;
    int hp_jobs = 1;
    hp->add_option("-m,--matrix", hp_matrix, "matrix: inline JSON, file path, or '-'")
        ->required();
    hp->add_option("-K,--kmax", hp_kmax, "largest level to decide")->required();
    hp->add_option("-j,--jobs", hp_jobs, "worker threads (<= 0: hardware concurrency)");
    hp->add_option("--classes", hp_classes,
                   "also materialize the Reidemeister classes at this level");
    hp->add_option("--bound", hp_bound,
                   "class materialization bound (default: HMP_ORACLE_BOUND or 1000000)");
    hp->callback([&] {
        const hmp::IntMatrix d = load_matrix(hp_matrix);
        const std::vector<hmp::LevelResult> levels = hmp::hper_levels(d, hp_kmax, hp_jobs);
        Json j;
        j["kmax"] = hp_kmax;
        Json in_hper = Json::array();
        Json lv = Json::array();
        for (const hmp::LevelResult& r : levels) {
            if (r.np_nonzero) in_hper.push_back(r.k);
            lv.push_back(hmp::level_result_to_json(r));
        }
        j["hper"] = in_hper;
        j["levels"] = lv;
        if (hp_classes > 0) {
            const hmp::CosetSystem sys =
                hmp::reidemeister_classes(d, hp_classes, resolve_bound(hp_bound));
            Json c;
            c["k"] = sys.k;
            c["class_count"] = hmp::int_to_json(sys.class_count);
            Json divs = Json::array();
            for (const Int& x : sys.diag) divs.push_back(hmp::int_to_json(x));
            c["elementary_divisors"] = divs;
            Json reps = Json::array();
            for (const std::vector<Int>& rep : sys.representatives()) {
                Json row = Json::array();
                for (const Int& x : rep) row.push_back(hmp::int_to_json(x));
                reps.push_back(row);
            }
            c["representatives"] = reps;
            j["classes"] = c;
        }
        emit(j);
    });

    auto* de = app.add_subcommand(
        "density", "exact empirical density of a period set inside a window");
    std::string de_from;
    unsigned long de_window = 0;
    unsigned de_tail = 10;
    de->add_option("--from", de_from,
                   "period set: hper output (object with 'hper') or a plain array; "
                   "inline JSON, file path, or '-'")
        ->required();
    de->add_option("-n,--window", de_window, "window size (default: 'kmax' from the input)");
    de->add_option("--tail-percent", de_tail, "tail window percentage (default 10)");
    de->callback([&] {
        Json j = load_json_arg(de_from);
        unsigned long window = de_window;
        if (j.is_object()) {
            if (window == 0 && j.contains("kmax") && j["kmax"].is_number_unsigned())
                window = j["kmax"].get<unsigned long>();
            if (!j.contains("hper"))
                throw hmp::schema_error("expected an object with an 'hper' array");
            j = j["hper"];
        }
        if (!j.is_array()) throw hmp::schema_error("expected an array of periods");
        std::vector<unsigned long> s;
        for (const Json& v : j) {
            if (!v.is_number_integer() && !v.is_number_unsigned())
                throw hmp::schema_error("periods must be integers");
            const long x = v.get<long>();
            if (x < 1) throw hmp::schema_error("periods must be >= 1");
            s.push_back(static_cast<unsigned long>(x));
        }
        if (window == 0) throw hmp::schema_error("window size required (-n)");
        emit(hmp::estimate_to_json(hmp::empirical_density(s, window, de_tail)));
    });

    auto* th = app.add_subcommand(
        "thresholds", "empirical thresholds, the period bound N and the density bound 1/N!");
    std::string th_matrix;
    unsigned long th_kmax = 50, th_order = 1, th_members = 0;
    th->add_option("-m,--matrix", th_matrix, "matrix: inline JSON, file path, or '-'")
        ->required();
    th->add_option("-K,--kmax", th_kmax, "scan levels up to kmax (default 50)");
    th->add_option("--holonomy-order", th_order,
                   "order of the induced holonomy automorphism (default 1)");
    th->add_option("--members", th_members, "materialize this many progression members");
    th->callback([&] {
        const hmp::IntMatrix d = load_matrix(th_matrix);
        const unsigned long boost =
            hmp::empirical_threshold(d, th_kmax, hmp::ThresholdKind::boost_index);
        const unsigned long domination =
            hmp::empirical_threshold(d, th_kmax, hmp::ThresholdKind::domination);
        const unsigned long coverage = std::max(boost, domination);
        const unsigned long n = hmp::compute_N(d.rows(), th_order, coverage);
        const hmp::ProgressionBound pb = hmp::lower_bound(n, th_members);
        Json j;
        j["kmax"] = th_kmax;
        j["boost_index_threshold"] = boost;
        j["domination_threshold"] = domination;
        j["coverage_threshold"] = coverage;
        j["holonomy_order"] = th_order;
        j["period_bound"] = n;
        j["density_lower_bound"] = hmp::rat_to_json(pb.density);
        j["progression"] = hmp::bound_to_json(pb);
        emit(j);
    });

    auto* ct = app.add_subcommand("catalog", "the family catalog");
    auto* ct_list = ct->add_subcommand("list", "list every entry");
    bool ct_table = false;
    ct_list->add_flag("--table", ct_table, "human-readable table instead of JSON");
    ct_list->callback([&] {
        if (!ct_table) {
            emit(hmp::list_entries());
            return;
        }
        std::cout << std::left << std::setw(12) << "entry" << std::setw(6) << "geo"
                  << std::setw(8) << "section" << std::setw(9) << "holonomy"
                  << std::setw(23) << "applicability" << "cases\n";
        for (const hmp::CatalogEntry& e : hmp::catalog()) {
            std::string cases;
            for (const std::string& c : e.cases) cases += (cases.empty() ? "" : ",") + c;
            std::cout << std::left << std::setw(12) << e.name << std::setw(6) << e.geometry
                      << std::setw(8) << e.section << std::setw(9) << e.holonomy_name
                      << std::setw(23) << hmp::to_string(e.applicability) << cases << "\n";
        }
    });
    ct->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hmp::oracle_bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hmp::schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hmp::singular_level_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
