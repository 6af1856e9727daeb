#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "qgentle/ag_invariant.hpp"
#include "qgentle/hochschild.hpp"

using namespace qgentle;

namespace {

AGInvariant make(std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
    AGInvariant a;
    a.pairs = std::move(pairs);
    a.normalize();
    return a;
}

// Independent divisor-sum oracle used to freeze psi expectations.
std::int64_t psi_oracle(const AGInvariant& a, std::int64_t n) {
    std::int64_t total = 0;
    for (const auto& [first, second] : a.pairs)
        if (first == 0 && second >= 1 && n % second == 0) ++total;
    return total;
}

const AGInvariant phi_a = make({{3, 1}, {3, 3}, {0, 4}});
const AGInvariant phi_b = make({{2, 2}, {4, 2}, {0, 4}});

}  // namespace

TEST_CASE("divisor sums") {
    CHECK(psi(phi_a, 8) == 1);
    CHECK(psi(phi_a, 6) == 0);
    AGInvariant two = make({{0, 2}, {0, 4}});
    CHECK(psi(two, 4) == 2);
    for (std::int64_t n = 1; n <= 30; ++n) {
        CHECK(psi(phi_a, n) == psi_oracle(phi_a, n));
        CHECK(psi(two, n) == psi_oracle(two, n));
    }
    CHECK_THROWS_AS(psi(phi_a, 0), DomainError);
}

TEST_CASE("dimension formula on the reference invariant") {
    FieldSpec k0{0};
    CHECK(hh_dim(phi_a, 7, 8, 0, k0) == 1);
    CHECK(hh_dim(phi_a, 7, 8, 1, k0) == 2);
    CHECK(hh_dim(phi_a, 7, 8, 4, k0) == 1);
    CHECK(hh_dim(phi_a, 7, 8, 5, k0) == 1);
    CHECK(hh_dim(phi_a, 7, 8, 6, k0) == 0);
}

TEST_CASE("Kronecker degree one") {
    AGInvariant k = make({{1, 1}, {1, 1}});
    CHECK(hh_dim(k, 2, 2, 1, FieldSpec{0}) == 3);
}

TEST_CASE("sequences of the reference pair coincide") {
    FieldSpec k0{0};
    HHResult a = hh_sequence(phi_a, 7, 8, 9, k0);
    CHECK(a.dims == std::vector<std::int64_t>{1, 2, 0, 0, 1, 1, 0, 0, 1, 1});
    HHResult b = hh_sequence(phi_b, 7, 8, 9, k0);
    CHECK(a.dims == b.dims);
    for (int c : {0, 2, 3}) {
        FieldSpec k{c};
        CHECK(hh_sequence(phi_a, 7, 8, 24, k).dims == hh_sequence(phi_b, 7, 8, 24, k).dims);
    }
}

TEST_CASE("empty invariant") {
    AGInvariant none = make({});
    HHResult r = hh_sequence(none, 1, 0, 2, FieldSpec{0});
    CHECK(r.dims == std::vector<std::int64_t>{1, 0, 0});
}

TEST_CASE("characteristic two picks up (0,1) in degree one") {
    AGInvariant with01 = make({{0, 1}});
    CHECK(hh_dim(with01, 1, 1, 1, FieldSpec{0}) == 1);
    CHECK(hh_dim(with01, 1, 1, 1, FieldSpec{2}) == 2);
}

TEST_CASE("only the structurally relevant pairs matter") {
    FieldSpec k0{0}, k2{2};
    AGInvariant mutated = phi_a;
    mutated.add(7, 9);  // neither (1, n) nor (0, d)
    mutated.add(5, 2);
    for (std::int64_t n = 0; n <= 24; ++n) {
        CHECK(hh_dim(phi_a, 7, 8, n, k0) == hh_dim(mutated, 7, 8, n, k0));
        CHECK(hh_dim(phi_a, 7, 8, n, k2) == hh_dim(mutated, 7, 8, n, k2));
    }
}

TEST_CASE("no cycle pairs and no (1,n) means zero in high degrees away from char 2") {
    AGInvariant plain = make({{3, 1}, {2, 2}, {4, 0}});
    for (std::int64_t n = 2; n <= 12; ++n) {
        CHECK(hh_dim(plain, 4, 5, n, FieldSpec{0}) == 0);
        CHECK(hh_dim(plain, 4, 5, n, FieldSpec{5}) == 0);
    }
}

TEST_CASE("field validation") {
    CHECK(is_valid_characteristic(0));
    CHECK(is_valid_characteristic(2));
    CHECK(is_valid_characteristic(97));
    CHECK_FALSE(is_valid_characteristic(1));
    CHECK_FALSE(is_valid_characteristic(4));
    CHECK_FALSE(is_valid_characteristic(-3));
    CHECK_THROWS_AS(hh_dim(phi_a, 7, 8, 0, FieldSpec{6}), DomainError);
}
