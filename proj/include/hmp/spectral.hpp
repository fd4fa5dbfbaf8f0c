#pragma once

// Exact certification of the unit-circle spectrum of an integer matrix:
// which eigenvalues of modulus one exist, whether they are all roots of
// unity, and whether 1 itself is an eigenvalue. No floating point.

#include <string>
#include <vector>

#include "hmp/json_io.hpp"
#include "hmp/matrix.hpp"
#include "hmp/polynomial.hpp"

namespace hmp {

struct CyclotomicFactor {
    unsigned long d = 0;        // index of the cyclotomic polynomial
    unsigned multiplicity = 0;  // exact multiplicity in the char polynomial
    bool operator==(const CyclotomicFactor&) const = default;
};

struct UnitCircleAnalysis {
    bool has_eigenvalue_one = false;
    std::vector<CyclotomicFactor> cyclotomic_factors;  // d >= 2 only
    // True when the reciprocal part left after removing all cyclotomic
    // factors (d >= 2) still has roots on the unit circle. Such roots are
    // either not roots of unity at all or equal to 1 (which the cyclotomic
    // list, starting at d = 2, never certifies).
    bool residual_unit_circle_roots = false;
};

// Number of distinct real roots of q in the closed interval [a, b], exact
// (squarefree reduction + Sturm chain over Q). Throws on the zero polynomial
// or a > b.
long sturm_count(const IntPolynomial& q, const Rat& a, const Rat& b);

UnitCircleAnalysis unit_circle_analysis(const IntPolynomial& p);

struct SpectralReport {
    Int det_value;
    bool has_eigenvalue_one = false;
    std::vector<CyclotomicFactor> cyclotomic_factors;
    bool residual_unit_circle_roots = false;
    bool cond1 = false;  // modulus-1 spectrum is roots of unity, none equal to 1
    bool cond2 = false;  // det not in {0, 1, -1}
    std::string witness;
};

SpectralReport check_conditions(const IntMatrix& d);

Json report_to_json(const SpectralReport& r);

}  // namespace hmp
