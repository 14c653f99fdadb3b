#ifndef SHARPDEG_ENUMERATION_HPP
#define SHARPDEG_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sharpdeg/diagram.hpp"

namespace sharpdeg {

struct SearchSpec {
    int n = 2;
    int d = 2;
    bool connected = false;
    bool contains_origin = false;
    bool no_overhang = false;
    bool maximal = false;
    // sign_mode realizable-only is a documented no-op: every sign pattern is
    // realized by the unit-magnitude section
    enum class SignMode { All, RealizableOnly } sign_mode = SignMode::All;
    std::uint64_t support_cap = 1ull << 26;
    std::uint64_t assignment_cap = 1ull << 24;
};

// Estimated number of subsets the search would sweep.
std::uint64_t enumeration_cost(const SearchSpec& spec);

// All subsets of the simplex {|m| <= d-1} meeting the constraints, each
// normalized (every coordinate attains zero), in canonical order.
std::vector<Support> enumerate_supports(const SearchSpec& spec);

void for_each_support(const SearchSpec& spec, const std::function<void(const Support&)>& fn);

struct MinNodesResult {
    int min_nodes = 0;
    NewtonDiagram argmin;
};

// Exact minimum of the node count over all sign assignments of K.
MinNodesResult min_nodes_over_signs(const Support& K, int d, std::size_t cap = 24);

enum class SweepTheorem { T34, T52 };

struct SweepEntry {
    int d = 0;
    std::uint64_t support_count = 0;
    int min_nodes = 0;
    int bound = 0;  // the guaranteed lower bound at this size
    Support witness;
};

struct Certificate {
    std::string theorem;
    std::vector<SweepEntry> entries;
    bool ok = false;
};

// Sweep all admissible supports per size and record the minima:
//   T34: two variables, connected supports, bound ceil((d+5)/2)
//   T52: three variables, no-overhang supports, bound 2d+2
Certificate exhaustive_bound_verify(SweepTheorem theorem, int d_max, bool allow_long = false);

struct Decomposition {
    enum class Kind { Indecomposable, Decomposable, Indeterminate };
    Kind kind = Kind::Indecomposable;
    bool complete = true;  // false when a part exceeded the cap unsplit
    std::vector<std::vector<MultiIndex>> parts;  // monomial groups of the input
};

// Exact decomposability of a multiple of the hyperplane form: a proper
// monomial-disjoint split into multiples.  Diagram support components give
// the coarse split; small parts are refined by exhaustive subset search.
Decomposition decomposability_oracle(const Polynomial& P, std::size_t cap = 20);

// Same with an arbitrary +-1 signed linear form as the divisor.
Decomposition decomposability_oracle_wrt(const Polynomial& P, std::span<const int> signs,
                                         std::size_t cap = 20);

} // namespace sharpdeg

#endif
