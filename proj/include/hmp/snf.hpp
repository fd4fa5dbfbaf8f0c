#pragma once

// Smith normal form over Z and the lattice arithmetic built on it.

#include <vector>

#include "hmp/matrix.hpp"

namespace hmp {

struct SNFDecomposition {
    IntMatrix U, S, V;  // U * M * V == S with U, V unimodular

    // Diagonal entries d1, ..., d_min(r,c) of S (nonnegative, each dividing
    // the next).
    std::vector<Int> diagonal() const;
};

SNFDecomposition smith_normal_form(const IntMatrix& m);

// Basis of { x in Z^c : M x = 0 } as matrix columns (c x nullity).
IntMatrix integer_kernel(const IntMatrix& m);

// Whether B x = v has an integer solution x.
bool lattice_solvable(const IntMatrix& b, const std::vector<Int>& v);

// Basis of (A Z^m) ∩ (B Z^m) for nonsingular square A, B of equal size.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

// Index [Z^m : basis Z^m] = |det basis| for a nonsingular square basis.
Int lattice_index(const IntMatrix& basis);

}  // namespace hmp
