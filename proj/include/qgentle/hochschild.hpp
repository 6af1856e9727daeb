// Hochschild cohomology dimensions of a gentle algebra from its
// AG-invariant, parameterized by the field characteristic.
#pragma once

#include <cstdint>
#include <vector>

#include "qgentle/ag_invariant.hpp"

namespace qgentle {

struct FieldSpec {
    int characteristic = 0;  // 0 or a prime
};

bool is_valid_characteristic(int c);
void ensure_field(const FieldSpec& k);

struct HHResult {
    std::vector<std::int64_t> dims;  // dims[n] for 0 <= n <= max_n
};

// Divisor sum: psi(n) = sum over d | n of the multiplicity of (0, d).
std::int64_t psi(const AGInvariant& a, std::int64_t n);

// Degree-n dimension; nv and na are the vertex and arrow counts of the
// algebra the invariant belongs to (only their difference matters, and only
// in degree 1).
std::int64_t hh_dim(const AGInvariant& a, std::int64_t nv, std::int64_t na, std::int64_t n,
                    const FieldSpec& k);

HHResult hh_sequence(const AGInvariant& a, std::int64_t nv, std::int64_t na, std::int64_t max_n,
                     const FieldSpec& k);

}  // namespace qgentle
