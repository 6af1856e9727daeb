// The AG-invariant of a gentle algebra: the multiset of pairs (n, m)
// produced by the permitted/forbidden thread pairing walk, plus one pair
// (0, l) per critical cycle of length l.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgentle/quiver.hpp"

namespace qgentle {

// Finite multiset of pairs of naturals, kept sorted.
struct AGInvariant {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

    void add(std::int64_t n, std::int64_t m, std::int64_t count = 1);
    void normalize();
    std::int64_t multiplicity(std::int64_t n, std::int64_t m) const;
    std::size_t size() const { return pairs.size(); }
};

// Pairing walk over the thread decomposition. Requires a gentle, admissible,
// connected quiver; the result is independent of the seed and of the order
// in which starting threads are chosen.
AGInvariant ag_invariant(const BoundQuiver& bq, unsigned seed = 0);

// Multiset equality.
bool ag_equal(const AGInvariant& a, const AGInvariant& b);

// Sorted "(a,b)*" terms joined by " + ", multiplicity k >= 2 rendered as
// "k.(a,b)*"; the empty multiset renders "0".
std::string format_ag(const AGInvariant& a);

}  // namespace qgentle
