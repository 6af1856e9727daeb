// Closed relation walks and the nontriviality predicates for the cup
// product and Lie bracket on Hochschild cohomology of a gentle algebra.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgentle/hochschild.hpp"
#include "qgentle/quiver.hpp"

namespace qgentle {

// A walk a_1 ... a_n with every consecutive composition a relation; arrows
// may repeat (windings around relation cycles).
struct RelationPath {
    std::vector<std::string> arrows;
    int length() const { return static_cast<int>(arrows.size()); }
};

// Closed relation walk together with its base vertex; the closing
// composition (last, first) is also a relation.
struct CompletePair {
    RelationPath path;
    std::string base;
};

// All relation walks of length n >= 2, ordered by starting arrow.
std::vector<RelationPath> gamma_n(const BoundQuiver& bq, int n);

// The walks closing into their base vertex with the closing composition in
// the ideal.
std::vector<CompletePair> complete_pairs(const BoundQuiver& bq, int n);

// Complete pairs all of whose cyclic shifts pass the exclusion test: no
// arrow other than the neighbour in the walk extends the closing relations.
// For gentle input this equals complete_pairs; the test is run literally.
std::vector<CompletePair> gentle_pairs(const BoundQuiver& bq, int n);

struct GerstenhaberVerdict {
    bool cup_nontrivial = false;
    bool bracket_nontrivial = false;
    std::optional<CompletePair> witness;
};

// Existence decision: gentle pairs exist iff some relation cycle has length
// dividing some n <= n_bound, so only cycle lengths are searched.
GerstenhaberVerdict gerstenhaber_nontrivial(const BoundQuiver& bq, const FieldSpec& k,
                                            int n_bound);

}  // namespace qgentle
