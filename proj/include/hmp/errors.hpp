#pragma once

#include <stdexcept>
#include <string>

namespace hmp {

// Input violates a documented schema or precondition. CLI maps this to exit 2.
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// A coset computation would have to materialize more classes than the
// configured bound allows. Soft error; CLI maps this to exit 3.
struct oracle_bound_error : std::runtime_error {
    explicit oracle_bound_error(const std::string& what) : std::runtime_error(what) {}
};

// det(I - D^k) = 0: the class data at this iteration level is degenerate.
struct singular_level_error : std::runtime_error {
    explicit singular_level_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested parameter case has contradictory defining relations.
struct no_such_homomorphism_error : std::runtime_error {
    explicit no_such_homomorphism_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hmp
