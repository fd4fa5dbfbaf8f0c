#pragma once

// Periodic point class data for an integer linearization D: Reidemeister
// classes at iteration level k are the cosets Z^m / (I - D^k) Z^m, boosting
// from a divisor level l enters through the geometric sum
// B_l = I + D^l + ... + D^(k-l), and NP_k != 0 exactly when some class at
// level k escapes every boost image from a proper divisor level.

#include <vector>

#include "hmp/bigint.hpp"
#include "hmp/json_io.hpp"
#include "hmp/matrix.hpp"
#include "hmp/snf.hpp"
#include "hmp/spectral.hpp"

namespace hmp {

// Coordinates on Z^m / (I - D^k) Z^m plus the boost data from every proper
// divisor level. Only built when det(I - D^k) != 0.
struct CosetSystem {
    IntMatrix d;             // the linearization
    unsigned long k = 1;     // iteration level
    IntMatrix level_matrix;  // I - D^k
    Int class_count;         // |det(I - D^k)|
    SNFDecomposition snf;    // of level_matrix
    std::vector<Int> diag;   // elementary divisors (all >= 1 here)
    IntMatrix u_inverse;     // exact inverse of snf.U

    std::vector<unsigned long> boost_levels;  // proper divisors of k, ascending
    std::vector<IntMatrix> boost_matrices;    // B_l per boost level
    std::vector<Int> boost_image_sizes;       // |det(I - D^l)| per boost level

    // Canonical label of an integer vector: (U v) mod diag, componentwise.
    std::vector<Int> reduce(const std::vector<Int>& v) const;
    // Integer representative with reduce(rep_vector(label)) == label.
    std::vector<Int> rep_vector(const std::vector<Int>& label) const;
    // All class labels, mixed-radix ascending (last coordinate fastest).
    std::vector<std::vector<Int>> labels() const;
    // One integer representative per label, same order.
    std::vector<std::vector<Int>> representatives() const;
};

inline Int default_class_bound() { return Int(1000000); }

// Builds the coset system at level k. Throws singular_level_error when
// det(I - D^k) = 0, and oracle_bound_error when more classes than `bound`
// would have to be materialized.
CosetSystem reidemeister_classes(const IntMatrix& d, unsigned long k,
                                 const Int& bound = default_class_bound());

// Whether v lies in the boost image from level l, i.e. in B_l Z^m (which
// already contains (I - D^k) Z^m). l must be a proper divisor of k.
bool boost_member(const CosetSystem& sys, unsigned long l, const std::vector<Int>& v);

enum class LevelStatus { ok, singular };

struct LevelResult {
    unsigned long k = 1;
    LevelStatus status = LevelStatus::ok;
    Int class_count;  // 0 when singular
    Int covered;      // classes hit by boosts from proper divisor levels
    bool np_nonzero = false;
};

// Decides NP_k != 0 by counting the union of the boost images from the
// maximal proper divisor levels (inclusion-exclusion over exact lattice
// intersections). Never enumerates class representatives, so the cost is
// polynomial in m and log of the class count.
LevelResult np_level(const IntMatrix& d, unsigned long k);

bool np_nonzero(const IntMatrix& d, unsigned long k);

// Level results for k = 1..kmax. jobs <= 0 picks hardware concurrency.
std::vector<LevelResult> hper_levels(const IntMatrix& d, unsigned long kmax, int jobs = 1);

// Ascending list of the k in [1, kmax] with NP_k != 0.
std::vector<unsigned long> hper_enumerate(const IntMatrix& d, unsigned long kmax, int jobs = 1);

// Whether the boost from level l into level k has index > 1, computed as the
// exact determinant ratio det(I - D^k) / det(I - D^l). Throws
// singular_level_error when det(I - D^l) = 0.
bool boost_index_nontrivial(const IntMatrix& d, unsigned long k, unsigned long l);

// |det(I - D^k)| > sum of |det(I - D^l)| over proper divisors l of k.
bool class_count_dominates(const IntMatrix& d, unsigned long k);

enum class ThresholdKind { boost_index, domination };

// Least N such that every k in [2, kmax] whose smallest prime factor exceeds
// N passes the chosen test (boost_index: every proper divisor level boosts
// with index > 1; domination: class_count_dominates). Singular levels count
// as failures. Requires conditions (1) and (2); returns at most kmax.
unsigned long empirical_threshold(const IntMatrix& d, unsigned long kmax, ThresholdKind kind);

// Whether the positivity bound with threshold N promises k in HPer: k = 1 or
// every prime factor of k exceeds N. Requires conditions (1) and (2).
bool period_guaranteed(const SpectralReport& report, unsigned long n_threshold, unsigned long k);

Json level_result_to_json(const LevelResult& r);

}  // namespace hmp
