#pragma once

#include <vector>

#include "ovtk/bitvector.hpp"
#include "ovtk/common.hpp"

namespace ovtk {

/// An Orthogonal Vectors instance: two families of d-dimensional bit
/// vectors. The symmetric case |A| = |B| is the generator default, but the
/// sides may differ (the SAT reduction with an odd variable count produces
/// unequal halves).
struct OVInstance {
    int dim = 0;
    std::vector<BitVector> set_a;
    std::vector<BitVector> set_b;

    int n_a() const { return static_cast<int>(set_a.size()); }
    int n_b() const { return static_cast<int>(set_b.size()); }

    /// Throws Error unless dim >= 1, both sides are nonempty, and every
    /// vector has length exactly dim.
    void validate() const;
};

/// CNF formula with variables 1..num_vars; a literal is v or -v.
struct CNFInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    /// Throws Error on empty clauses, out-of-range literals, or a literal
    /// repeated within one clause.
    void validate() const;
};

}  // namespace ovtk
