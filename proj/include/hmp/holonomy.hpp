#pragma once

// Finite groups given by multiplication tables (order <= 12), their
// endomorphisms, and brute-force enumeration of fixed-point-free
// automorphisms.

#include <string>
#include <vector>

#include "hmp/json_io.hpp"

namespace hmp {

class FiniteGroup {
public:
    // table[x][y] = index of x*y. Group axioms are validated; throws
    // schema_error on violation or order > 12.
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels = {});
    // {"table": [[...]], "labels": [...] (optional)}
    static FiniteGroup from_json(const Json& j);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup klein_four();
    // "trivial", "Z2", "Z3", "Z4", "Z6", "Z2xZ2"
    static FiniteGroup builtin(const std::string& name);

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    int inverse(int x) const;
    int element_order(int x) const;
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    FiniteGroup() = default;
    void validate();

    int n_ = 0;
    int e_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> labels_;
};

class Endomorphism {
public:
    // image[x] = psi(x); the homomorphism property is validated.
    Endomorphism(FiniteGroup g, std::vector<int> image);

    const FiniteGroup& group() const { return g_; }
    const std::vector<int>& image() const { return img_; }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    bool is_automorphism() const;
    bool is_identity() const;
    // (*this after o): x -> this(o(x)).
    Endomorphism compose(const Endomorphism& o) const;

private:
    FiniteGroup g_;
    std::vector<int> img_;
};

// Sorted fixed-point set {x : psi(x) = x}; always contains the identity.
std::vector<int> gfix(const Endomorphism& psi);

// Least t >= 1 with psi^t = id. Requires an automorphism.
unsigned endo_order(const Endomorphism& psi);

// All automorphisms whose only fixed point is the identity, sorted by image
// vector. Exhaustive over generator images.
std::vector<Endomorphism> fixed_point_free_autos(const FiniteGroup& g);

Json group_to_json(const FiniteGroup& g);

}  // namespace hmp
