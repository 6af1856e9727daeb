#include "qgentle/hochschild.hpp"

namespace qgentle {

bool is_valid_characteristic(int c) {
    if (c == 0) return true;
    if (c < 2) return false;
    for (int d = 2; d * d <= c; ++d)
        if (c % d == 0) return false;
    return true;
}

void ensure_field(const FieldSpec& k) {
    if (!is_valid_characteristic(k.characteristic))
        throw DomainError("characteristic must be 0 or a prime, got " +
                          std::to_string(k.characteristic));
}

std::int64_t psi(const AGInvariant& a, std::int64_t n) {
    if (n < 1) throw DomainError("psi is defined for n >= 1");
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) total += a.multiplicity(0, d);
    return total;
}

std::int64_t hh_dim(const AGInvariant& a, std::int64_t nv, std::int64_t na, std::int64_t n,
                    const FieldSpec& k) {
    ensure_field(k);
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (n == 0) return 1 + a.multiplicity(1, 0);
    if (n == 1) {
        std::int64_t dim = 1 + na - nv + a.multiplicity(1, 1);
        if (k.characteristic == 2) dim += a.multiplicity(0, 1);
        return dim;
    }
    std::int64_t an, bn;
    if (k.characteristic == 2) {
        an = 1;
        bn = 1;
    } else if (n % 2 == 0) {
        an = 1;
        bn = 0;
    } else {
        an = 0;
        bn = 1;
    }
    return a.multiplicity(1, n) + an * psi(a, n) + bn * psi(a, n - 1);
}

HHResult hh_sequence(const AGInvariant& a, std::int64_t nv, std::int64_t na, std::int64_t max_n,
                     const FieldSpec& k) {
    HHResult r;
    for (std::int64_t n = 0; n <= max_n; ++n) r.dims.push_back(hh_dim(a, nv, na, n, k));
    return r;
}

}  // namespace qgentle
