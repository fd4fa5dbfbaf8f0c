#include "hmp/periodic.hpp"

#include <bit>
#include <stdexcept>

#include "hmp/arith.hpp"
#include "hmp/errors.hpp"
#include "hmp/parallel.hpp"

namespace hmp {

namespace {

void require_linearization(const IntMatrix& d) {
    if (!d.is_square() || d.rows() == 0)
        throw schema_error("linearization must be a nonempty square matrix");
}

void require_level(unsigned long k) {
    if (k < 1) throw schema_error("iteration level must be >= 1");
}

}  // namespace

std::vector<Int> CosetSystem::reduce(const std::vector<Int>& v) const {
    if (v.size() != d.rows()) throw schema_error("vector length does not match the linearization");
    std::vector<Int> w = mat_vec(snf.U, v);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Int r;
        mpz_mod(r.get_mpz_t(), w[i].get_mpz_t(), diag[i].get_mpz_t());
        w[i] = r;
    }
    return w;
}

std::vector<Int> CosetSystem::rep_vector(const std::vector<Int>& label) const {
    if (label.size() != d.rows()) throw schema_error("label length does not match the linearization");
    return mat_vec(u_inverse, label);
}

std::vector<std::vector<Int>> CosetSystem::labels() const {
    const std::size_t m = diag.size();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(m, 0);
    bool done = false;
    while (!done) {
        out.push_back(cur);
        done = true;
        for (std::size_t i = m; i-- > 0;) {
            cur[i] += 1;
            if (cur[i] < diag[i]) {
                done = false;
                break;
            }
            cur[i] = 0;
        }
    }
    return out;
}

std::vector<std::vector<Int>> CosetSystem::representatives() const {
    std::vector<std::vector<Int>> out;
    for (const auto& label : labels()) out.push_back(rep_vector(label));
    return out;
}

CosetSystem reidemeister_classes(const IntMatrix& d, unsigned long k, const Int& bound) {
    require_linearization(d);
    require_level(k);
    CosetSystem sys;
    sys.d = d;
    sys.k = k;
    const IntMatrix id = IntMatrix::identity(d.rows());
    sys.level_matrix = id - mat_pow(d, k);
    const Int dv = det(sys.level_matrix);
    if (dv == 0) throw singular_level_error("det(I - D^k) = 0 at level " + std::to_string(k));
    sys.class_count = abs(dv);
    if (sys.class_count > bound)
        throw oracle_bound_error("level " + std::to_string(k) + " has " + sys.class_count.get_str() +
                                 " classes, above the bound " + bound.get_str());
    sys.snf = smith_normal_form(sys.level_matrix);
    sys.diag = sys.snf.diagonal();
    sys.u_inverse = unimodular_inverse(sys.snf.U);
    for (unsigned long l : proper_divisors(k)) {
        sys.boost_levels.push_back(l);
        sys.boost_matrices.push_back(geometric_sum_matrix(d, k, l));
        sys.boost_image_sizes.push_back(abs(det(id - mat_pow(d, l))));
    }
    return sys;
}

bool boost_member(const CosetSystem& sys, unsigned long l, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < sys.boost_levels.size(); ++i)
        if (sys.boost_levels[i] == l) return lattice_solvable(sys.boost_matrices[i], v);
    throw schema_error("level " + std::to_string(l) + " is not a proper divisor of " +
                       std::to_string(sys.k));
}

LevelResult np_level(const IntMatrix& d, unsigned long k) {
    require_linearization(d);
    require_level(k);
    LevelResult res;
    res.k = k;
    const IntMatrix id = IntMatrix::identity(d.rows());
    const Int dv = det(id - mat_pow(d, k));
    if (dv == 0) {
        res.status = LevelStatus::singular;
        return res;
    }
    res.class_count = abs(dv);
    // Boost images from non-maximal divisor levels factor through a maximal
    // one, so the union over maximal proper divisors is the whole covered set.
    const std::vector<unsigned long> mpd = maximal_proper_divisors(k);
    const std::size_t subsets = std::size_t(1) << mpd.size();
    std::vector<IntMatrix> lattice(subsets);
    Int covered = 0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        const std::size_t low = mask & (~mask + 1);
        const std::size_t rest = mask ^ low;
        if (rest == 0) {
            lattice[mask] =
                geometric_sum_matrix(d, k, mpd[static_cast<std::size_t>(std::countr_zero(mask))]);
        } else {
            lattice[mask] = lattice_intersection(lattice[low], lattice[rest]);
        }
        // The intersection lattice contains (I - D^k) Z^m, so its index
        // divides the class count and the quotient is the subset's coverage.
        const Int idx = lattice_index(lattice[mask]);
        if (!divisible(res.class_count, idx))
            throw std::logic_error("boost image index does not divide the class count");
        const Int h = divexact(res.class_count, idx);
        covered += (std::popcount(mask) & 1) ? h : -h;
    }
    res.covered = covered;
    res.np_nonzero = covered < res.class_count;
    return res;
}

bool np_nonzero(const IntMatrix& d, unsigned long k) { return np_level(d, k).np_nonzero; }

std::vector<LevelResult> hper_levels(const IntMatrix& d, unsigned long kmax, int jobs) {
    require_linearization(d);
    require_level(kmax);
    std::vector<LevelResult> out(kmax);
    parallel_for(kmax, jobs, [&](unsigned long i) { out[i] = np_level(d, i + 1); });
    return out;
}

std::vector<unsigned long> hper_enumerate(const IntMatrix& d, unsigned long kmax, int jobs) {
    std::vector<unsigned long> out;
    for (const LevelResult& r : hper_levels(d, kmax, jobs))
        if (r.np_nonzero) out.push_back(r.k);
    return out;
}

bool boost_index_nontrivial(const IntMatrix& d, unsigned long k, unsigned long l) {
    require_linearization(d);
    if (l < 1 || l >= k || k % l != 0)
        throw schema_error("boost level must be a proper divisor of the target level");
    const IntMatrix id = IntMatrix::identity(d.rows());
    const Int dl = det(id - mat_pow(d, l));
    if (dl == 0) throw singular_level_error("det(I - D^l) = 0 at level " + std::to_string(l));
    const Int dk = det(id - mat_pow(d, k));
    // B_l (I - D^l) = I - D^k exactly, so det B_l is the ratio.
    if (!divisible(dk, dl)) throw std::logic_error("det(I - D^k) not divisible by det(I - D^l)");
    return cmp_abs(divexact(dk, dl), Int(1)) > 0;
}

bool class_count_dominates(const IntMatrix& d, unsigned long k) {
    require_linearization(d);
    require_level(k);
    const IntMatrix id = IntMatrix::identity(d.rows());
    const Int dk = abs(det(id - mat_pow(d, k)));
    if (dk == 0) return false;
    Int sum = 0;
    for (unsigned long l : proper_divisors(k)) sum += abs(det(id - mat_pow(d, l)));
    return dk > sum;
}

unsigned long empirical_threshold(const IntMatrix& d, unsigned long kmax, ThresholdKind kind) {
    require_linearization(d);
    if (kmax < 2) throw schema_error("kmax must be >= 2");
    const SpectralReport rep = check_conditions(d);
    if (!rep.cond1 || !rep.cond2) throw schema_error("conditions (1) and (2) must hold");
    const IntMatrix id = IntMatrix::identity(d.rows());
    auto passes = [&](unsigned long k) {
        if (det(id - mat_pow(d, k)) == 0) return false;
        // A nonsingular level forces every divisor level nonsingular, so the
        // checks below cannot hit a singular boost level.
        if (kind == ThresholdKind::domination) return class_count_dominates(d, k);
        for (unsigned long l : proper_divisors(k))
            if (!boost_index_nontrivial(d, k, l)) return false;
        return true;
    };
    for (unsigned long n = 1; n < kmax; ++n) {
        bool ok = true;
        for (unsigned long k = 2; k <= kmax && ok; ++k)
            if (smallest_prime_factor(k) > n && !passes(k)) ok = false;
        if (ok) return n;
    }
    return kmax;
}

bool period_guaranteed(const SpectralReport& report, unsigned long n_threshold, unsigned long k) {
    if (!report.cond1 || !report.cond2) throw schema_error("conditions (1) and (2) must hold");
    require_level(k);
    return k == 1 || smallest_prime_factor(k) > n_threshold;
}

Json level_result_to_json(const LevelResult& r) {
    Json j;
    j["k"] = r.k;
    j["status"] = r.status == LevelStatus::ok ? "ok" : "singular";
    j["class_count"] = int_to_json(r.class_count);
    j["covered"] = int_to_json(r.covered);
    j["np_nonzero"] = r.np_nonzero;
    return j;
}

}  // namespace hmp
