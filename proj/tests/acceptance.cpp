// Acceptance checks: one line per criterion, nonzero exit when any fails.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hmp/arith.hpp"
#include "hmp/catalog.hpp"
#include "hmp/density.hpp"
#include "hmp/holonomy.hpp"
#include "hmp/matrix.hpp"
#include "hmp/periodic.hpp"
#include "hmp/polynomial.hpp"
#include "hmp/spectral.hpp"

using namespace hmp;

namespace {

int failures = 0;

void criterion(const char* tag, const char* what, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", tag, what, secs,
                note.empty() ? "" : " ", note.c_str());
    if (!ok) ++failures;
}

HomParams params(std::initializer_list<std::pair<const std::string, long>> kv) {
    return HomParams(kv);
}

bool c1_flat_g3() {
    const auto start = std::chrono::steady_clock::now();
    const ScanResult r =
        scan(find_entry("G3"), "", {{"l", -3, 3}, {"m2", -3, 3}, {"n2", -3, 3}});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::vector<std::vector<long>> expected = {
        {-1, -1}, {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    return r.scanned == 343 && r.valid == 343 && r.positive == 294 &&
           r.exceptions == expected && secs < 1.0;
}

bool c2_flat_g6() {
    const ScanResult r =
        scan(find_entry("G6"), "a", {{"k3", -4, 4}, {"m1", -3, 3}, {"n2", -2, 2}});
    std::set<std::vector<long>> expected;
    for (long m1 : {-3L, -1L, 1L, 3L})
        for (long n2 = -2; n2 <= 2; ++n2) expected.insert({0, m1, n2});
    for (long k3 : {-2L, 2L})
        for (long m1 : {-1L, 1L})
            for (long n2 : {0L, 1L}) expected.insert({k3, m1, n2});
    const std::vector<std::vector<long>> want(expected.begin(), expected.end());
    return r.scanned == 315 && r.valid == 100 && r.positive == 72 && r.exceptions == want;
}

bool c3_excluded_families() {
    bool ok = true;
    // structurally excluded: exhaustive boxes produce no positive member
    const ScanResult b3a =
        scan(find_entry("B3"), "a", {{"k1", -4, 4}, {"n2", -4, 4}, {"n3", -4, 4}});
    ok = ok && b3a.scanned == 729 && b3a.valid == 405 && b3a.positive == 0;
    const ScanResult b3b = scan(find_entry("B3"), "b",
                                {{"k1", -4, 4}, {"k3", -4, 4}, {"m3", -4, 4}, {"n3", -4, 4}});
    ok = ok && b3b.valid == 900 && b3b.positive == 0;
    const ScanResult b4a = scan(find_entry("B4"), "a",
                                {{"k1", -4, 4}, {"k2", -4, 4}, {"m1", -4, 4}, {"n2", -4, 4}});
    ok = ok && b4a.valid == 720 && b4a.positive == 0;
    const ScanResult b4b = scan(find_entry("B4"), "b", {{"n1", -4, 4}});
    ok = ok && b4b.valid == 9 && b4b.positive == 0;
    const ScanResult sol6 = scan(find_entry("SolPi6"), "",
                                 {{"u11", -4, 4}, {"u12", -4, 4}, {"u21", -4, 4}, {"u22", -4, 4}});
    ok = ok && sol6.valid == 6561 && sol6.positive == 0;

    const VerdictResult b3 =
        verdict(find_entry("B3"), "a", params({{"k1", 2}, {"n2", 1}, {"n3", 1}}));
    ok = ok && b3.verdict == VerdictKind::not_applicable &&
         b3.witness == "linearization is always singular (det = 0)";
    const VerdictResult b4 = verdict(find_entry("B4"), "b", params({{"n1", 0}}));
    ok = ok && b4.verdict == VerdictKind::not_applicable &&
         b4.witness == "no such homomorphism: the defining relations are contradictory";

    // holonomy-excluded: no fixed-point-free automorphism exists, and the
    // verdict says so
    const char* excluded[] = {"G2",    "G4",    "G5",         "B1",          "B2",
                              "NilII", "NilIV", "NilX",       "NilXVI",      "SolPi2plus",
                              "SolPi2minus",    "SolPi3"};
    int seen = 0;
    for (const char* name : excluded) {
        const CatalogEntry& e = find_entry(name);
        if (e.applicability != Applicability::excluded_by_holonomy) return false;
        if (!fixed_point_free_autos(e.holonomy()).empty()) return false;
        const VerdictResult v = verdict(e, "", {});
        if (v.verdict != VerdictKind::not_applicable) return false;
        if (v.witness.find("admits no fixed-point-free automorphism") == std::string::npos)
            return false;
        ++seen;
    }
    return ok && seen == 12;
}

bool c4_determinant_formulas() {
    for (long l = -5; l <= 5; ++l)
        for (long m2 = -5; m2 <= 5; ++m2)
            for (long n2 = -5; n2 <= 5; ++n2) {
                const Int d = det(build_linearization(
                    find_entry("G3"), "", params({{"l", l}, {"m2", m2}, {"n2", n2}})));
                if (d != Int(-(3 * l + 2) * (m2 * m2 - m2 * n2 + n2 * n2))) return false;
            }
    for (long k3 = -4; k3 <= 4; k3 += 2)
        for (long m1 = -5; m1 <= 5; m1 += 2)
            for (long n2 = -5; n2 <= 5; ++n2) {
                const Int a = det(build_linearization(
                    find_entry("G6"), "a", params({{"k3", k3}, {"m1", m1}, {"n2", n2}})));
                if (a != Int((k3 / 2) * m1 * (2 * n2 - 1))) return false;
                const Int b = det(build_linearization(
                    find_entry("G6"), "b", params({{"k2", m1}, {"m3", k3}, {"n1", n2}})));
                if (b != Int(m1 * (k3 / 2) * (2 * n2 - 1))) return false;
            }
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            for (long c = -5; c <= 5; ++c)
                for (long dd = -5; dd <= 5; ++dd) {
                    const Int m = det(build_linearization(
                        find_entry("NilI"), "",
                        params({{"a", a}, {"b", b}, {"c", c}, {"d", dd}, {"k", 1}})));
                    if (m != Int(a * dd - b * c) * Int(a * dd - b * c)) return false;
                }
    for (long m2 = -5; m2 <= 5; ++m2)
        for (long n = -5; n <= 5; ++n) {
            const long q = m2 * (2 * n + 1);
            const Int va = det(build_linearization(
                find_entry("NilVIII"), "a", params({{"m2", m2}, {"n1", n}, {"k", 4}})));
            const Int vb = det(build_linearization(
                find_entry("NilVIII"), "b", params({{"m2", m2}, {"n3", n}, {"k", 4}})));
            if (va != Int(q) * Int(q) || vb != Int(q) * Int(q)) return false;
        }
    for (long m = -5; m <= 5; ++m) {
        const Int nine_m4 = Int(9) * Int(m) * Int(m) * Int(m) * Int(m);
        if (det(build_linearization(find_entry("NilXIII_a"), "",
                                    params({{"m1", m}, {"k", 3}}))) != nine_m4)
            return false;
        if (det(build_linearization(find_entry("NilXIII_b"), "",
                                    params({{"m2", m}, {"k", 3}}))) != nine_m4)
            return false;
    }
    // sol families: det(U) * zeta for the torus part, always 0 for SolPi6
    for (long p = -3; p <= 3; ++p)
        for (long q = -3; q <= 3; ++q) {
            const Int flip = det(build_linearization(
                find_entry("SolPi1"), "",
                params({{"u11", p}, {"u12", q}, {"u21", -p - q}, {"u22", -p},
                        {"zeta", -1}})));
            if (flip != Int(p * p - p * q - q * q)) return false;
            const Int same = det(build_linearization(
                find_entry("SolPi1"), "",
                params({{"u11", p + 2 * q}, {"u12", q}, {"u21", q}, {"u22", p + q},
                        {"zeta", 1}})));
            if (same != Int((p + 2 * q) * (p + q) - q * q)) return false;
        }
    for (long u = -3; u <= 3; ++u)
        if (det(build_linearization(
                find_entry("SolPi6"), "",
                params({{"u11", u}, {"u12", 1}, {"u21", 0}, {"u22", -u}}))) != 0)
            return false;
    // structurally singular flat families
    for (long k1 = -4; k1 <= 4; k1 += 2) {
        if (det(build_linearization(find_entry("B3"), "a",
                                    params({{"k1", k1}, {"n2", 2}, {"n3", -3}}))) != 0)
            return false;
        if (det(build_linearization(
                find_entry("B3"), "b",
                params({{"k1", k1 + 1}, {"k3", 2}, {"m3", -4}, {"n3", 1}}))) != 0)
            return false;
        if (det(build_linearization(
                find_entry("B4"), "a",
                params({{"k1", k1}, {"k2", 3}, {"m1", -1}, {"n2", 2}}))) != 0)
            return false;
    }
    return true;
}

bool c5_hper_sets() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<unsigned long> all30, no2;
    for (unsigned long k = 1; k <= 30; ++k) {
        all30.push_back(k);
        if (k != 2) no2.push_back(k);
    }
    const bool ok = hper_enumerate(IntMatrix{{2}}, 30) == all30 &&
                    hper_enumerate(IntMatrix{{-2}}, 30) == no2;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && secs < 5.0;
}

bool c6_domination_implies_periods() {
    std::mt19937_64 gen(606060);
    auto entry = [&] { return Int(-3 + static_cast<long>(gen() % 7)); };
    int accepted = 0, attempts = 0;
    while (accepted < 200 && attempts < 20000) {
        ++attempts;
        const std::size_t n = 2 + gen() % 2;
        IntMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d(i, j) = entry();
        const SpectralReport rep = check_conditions(d);
        if (!rep.cond1 || !rep.cond2) continue;
        ++accepted;
        for (unsigned long k = 1; k <= 40; ++k) {
            if (!class_count_dominates(d, k)) continue;
            if (!np_nonzero(d, k)) return false;
        }
    }
    return accepted == 200;
}

bool c7_boost_partition() {
    const IntMatrix pool[] = {IntMatrix{{-2}}, IntMatrix{{2}}, IntMatrix{{3, 1}, {1, 2}},
                              IntMatrix{{-1, 1}, {0, 2}}, IntMatrix{{0, -1}, {1, 0}}};
    int cross_checked = 0;
    for (const IntMatrix& d : pool) {
        const IntMatrix eye = IntMatrix::identity(d.rows());
        for (unsigned long k = 1; k <= 10; ++k) {
            const Int dk = det(eye - mat_pow(d, k));
            if (dk == 0) continue;
            // factorization of the level matrix through every divisor level
            for (unsigned long l : proper_divisors(k)) {
                const Int dl = det(eye - mat_pow(d, l));
                if (det(geometric_sum_matrix(d, k, l)) * dl != dk) return false;
            }
            if (cmp_abs(dk, Int(500)) > 0) continue;
            // each boost image must hit exactly |det(I - D^l)| classes
            const CosetSystem sys = reidemeister_classes(d, k);
            const auto reps = sys.representatives();
            for (std::size_t i = 0; i < sys.boost_levels.size(); ++i) {
                Int hit = 0;
                for (const auto& rep : reps)
                    if (boost_member(sys, sys.boost_levels[i], rep)) hit += 1;
                if (hit != sys.boost_image_sizes[i]) return false;
            }
            ++cross_checked;
        }
    }
    return cross_checked >= 20;
}

bool c8_progression_bound() {
    for (unsigned long n = 1; n <= 8; ++n) {
        const ProgressionBound b = lower_bound(n, 4);
        if (b.modulus != factorial(n)) return false;
        if (b.density * Rat(b.modulus) != Rat(1)) return false;
        for (const Int& m : b.first_members)
            if (!divisible(m - 1, b.modulus)) return false;
    }
    // the expanding circle map: threshold 2, so every odd period is promised
    const IntMatrix d{{2}};
    const SpectralReport rep = check_conditions(d);
    const unsigned long n = compute_N(1, 1, 1);
    if (n != 2) return false;
    for (unsigned long k = 1; k <= 199; k += 2) {
        if (!period_guaranteed(rep, n, k)) return false;
        if (!np_nonzero(d, k)) return false;
    }
    return true;
}

bool c9_float_cross_validation() {
    std::mt19937_64 gen(909090);
    auto entry = [&] { return -5 + static_cast<long>(gen() % 11); };
    int near_circle = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + gen() % 6;
        IntMatrix d(n, n);
        Eigen::MatrixXd fd(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long v = entry();
                d(i, j) = v;
                fd(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    static_cast<double>(v);
            }
        if (Int(static_cast<long>(std::llround(fd.determinant()))) != det(d)) return false;

        const Eigen::EigenSolver<Eigen::MatrixXd> solver(fd);
        double min_gap = 1e9;
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
            min_gap = std::min(min_gap, std::abs(std::abs(solver.eigenvalues()[i]) - 1.0));
        const UnitCircleAnalysis exact = unit_circle_analysis(char_poly(d));
        const bool presence = exact.has_eigenvalue_one || !exact.cyclotomic_factors.empty() ||
                              exact.residual_unit_circle_roots;
        // wide dead band: certify agreement only where floats are unambiguous
        if (min_gap > 1e-6 && presence) return false;
        if (min_gap < 1e-10) {
            if (!presence) return false;
            ++near_circle;
        }
    }
    if (near_circle == 0) return false;  // the sample must exercise both sides

    // exact characteristic polynomial matches the closed form for G3
    for (long l = -3; l <= 3; ++l)
        for (long m2 = -3; m2 <= 3; ++m2)
            for (long n2 = -3; n2 <= 3; ++n2) {
                const IntMatrix d = build_linearization(
                    find_entry("G3"), "", params({{"l", l}, {"m2", m2}, {"n2", n2}}));
                const Int q = Int(m2 * m2 - m2 * n2 + n2 * n2);
                const IntPolynomial want =
                    IntPolynomial({Int(-(3 * l + 2)), Int(1)}) *
                    IntPolynomial({-q, Int(0), Int(1)});
                if (char_poly(d) != want) return false;
            }
    return true;
}

bool c10_known_densities() {
    const VerdictResult half = verdict(find_entry("NilI"), "",
                                       params({{"a", 0}, {"b", 1}, {"c", 2}, {"d", 1}}));
    if (half.verdict != VerdictKind::positive || !half.known_density ||
        *half.known_density != make_rat(1, 2))
        return false;
    const VerdictResult full = verdict(find_entry("NilI"), "",
                                       params({{"a", 2}, {"b", 1}, {"c", 1}, {"d", 3}}));
    if (full.verdict != VerdictKind::positive || !full.known_density ||
        *full.known_density != Rat(1))
        return false;
    const VerdictResult flip = verdict(
        find_entry("SolPi1"), "",
        params({{"u11", 1}, {"u12", 2}, {"u21", -3}, {"u22", -1}, {"zeta", -1}}));
    if (flip.verdict != VerdictKind::positive || !flip.known_density ||
        *flip.known_density != make_rat(1, 2))
        return false;
    const VerdictResult fail = verdict(
        find_entry("SolPi1"), "",
        params({{"u11", 2}, {"u12", 1}, {"u21", 1}, {"u22", 1}, {"zeta", 1}}));
    return fail.verdict == VerdictKind::conditions_fail && !fail.known_density;
}

}  // namespace

int main() {
    criterion("C1", "flat G3 family: exact exception set over [-3,3]^3", c1_flat_g3);
    criterion("C2", "flat G6 family: exact exception set, case a", c2_flat_g6);
    criterion("C3", "excluded families stay non-positive with stated witnesses",
              c3_excluded_families);
    criterion("C4", "linearization determinants match the closed forms",
              c4_determinant_formulas);
    criterion("C5", "minimal period sets of the circle maps of degree +-2", c5_hper_sets);
    criterion("C6", "class-count domination forces new periodic classes",
              c6_domination_implies_periods);
    criterion("C7", "boost images partition consistently across levels", c7_boost_partition);
    criterion("C8", "progression bound: density 1/N! and membership", c8_progression_bound);
    criterion("C9", "exact spectral analysis agrees with floating point",
              c9_float_cross_validation);
    criterion("C10", "known exact densities for the nil and sol showcases",
              c10_known_densities);
    return failures;
}
