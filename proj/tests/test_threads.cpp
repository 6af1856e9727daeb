#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "qgentle/threads.hpp"

using namespace qgentle;

namespace {

std::vector<std::vector<std::string>> nontrivial_arrow_lists(const std::vector<Thread>& ts) {
    std::vector<std::vector<std::string>> lists;
    for (const Thread& t : ts)
        if (!t.trivial()) lists.push_back(t.arrows);
    std::sort(lists.begin(), lists.end());
    return lists;
}

int count_trivial(const std::vector<Thread>& ts) {
    int n = 0;
    for (const Thread& t : ts) n += t.trivial();
    return n;
}

// The well-formedness the pairing walk needs: at every vertex the permitted
// and forbidden threads ending there in equal number with matchable signs,
// and dually for starts.
void check_pairing_bijections(const BoundQuiver& bq, unsigned seed) {
    auto permitted = permitted_threads(bq);
    auto [forbidden, cycles] = forbidden_threads(bq);
    SignAssignment signs = assign_signs(bq, seed);
    for (const std::string& v : bq.vertices()) {
        std::vector<int> pe, fe, ps, fs;
        for (const Thread& t : permitted) {
            if (t.end == v) pe.push_back(signs.epsilon(t));
            if (t.start == v) ps.push_back(signs.sigma(t));
        }
        for (const Thread& t : forbidden) {
            if (t.end == v) fe.push_back(signs.epsilon(t));
            if (t.start == v) fs.push_back(signs.sigma(t));
        }
        REQUIRE(pe.size() == fe.size());
        REQUIRE(ps.size() == fs.size());
        // an opposite-sign matching exists iff the multisets are negatives
        std::sort(pe.begin(), pe.end());
        for (int& x : fe) x = -x;
        std::sort(fe.begin(), fe.end());
        CHECK(pe == fe);
        std::sort(ps.begin(), ps.end());
        for (int& x : fs) x = -x;
        std::sort(fs.begin(), fs.end());
        CHECK(ps == fs);
    }
}

}  // namespace

TEST_CASE("permitted threads of quiver A") {
    BoundQuiver a = load_fixture("quiverA.bq");
    auto threads = permitted_threads(a);
    CHECK(threads.size() == 6);
    CHECK(count_trivial(threads) == 2);
    auto lists = nontrivial_arrow_lists(threads);
    std::vector<std::vector<std::string>> expected = {
        {"a2"}, {"a3"}, {"b1", "b2", "b3", "a1"}, {"b4", "a0"}};
    std::sort(expected.begin(), expected.end());
    CHECK(lists == expected);
}

TEST_CASE("permitted threads of the Kronecker quiver and a point") {
    auto threads = permitted_threads(kronecker());
    CHECK(threads.size() == 2);
    CHECK(count_trivial(threads) == 0);
    auto lists = nontrivial_arrow_lists(threads);
    CHECK(lists == std::vector<std::vector<std::string>>{{"alpha"}, {"beta"}});

    auto point = permitted_threads(single_vertex());
    REQUIRE(point.size() == 1);
    CHECK(point[0].trivial());
    CHECK(point[0].kind == ThreadKind::Permitted);
}

TEST_CASE("forbidden threads and critical cycles of quiver A") {
    BoundQuiver a = load_fixture("quiverA.bq");
    auto [threads, cycles] = forbidden_threads(a);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].arrows == std::vector<std::string>{"a0", "a1", "a2", "a3"});
    auto lists = nontrivial_arrow_lists(threads);
    CHECK(lists == std::vector<std::vector<std::string>>{{"b1"}, {"b2"}, {"b3"}, {"b4"}});
    // as many forbidden threads as permitted ones
    CHECK(threads.size() == permitted_threads(a).size());
}

TEST_CASE("forbidden threads of the Kronecker quiver") {
    auto [threads, cycles] = forbidden_threads(kronecker());
    CHECK(cycles.empty());
    auto lists = nontrivial_arrow_lists(threads);
    CHECK(lists == std::vector<std::vector<std::string>>{{"alpha"}, {"beta"}});
}

TEST_CASE("a full-relation 3-cycle becomes a critical cycle") {
    BoundQuiver c3 = parse_bound_quiver(
        "quiver c3\nvertex v1 v2 v3\narrow a v1 v2\narrow b v2 v3\narrow c v3 v1\n"
        "rel a b\nrel b c\nrel c a\n");
    auto [threads, cycles] = forbidden_threads(c3);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 3);
    CHECK(nontrivial_arrow_lists(threads).empty());
    CHECK(count_trivial(threads) == 3);
}

TEST_CASE("arrow partition across thread families") {
    for (const char* name : {"quiverA.bq", "quiverB.bq", "kronecker.bq"}) {
        BoundQuiver q = load_fixture(name);
        std::map<std::string, int> in_permitted, in_forbidden;
        for (const Thread& t : permitted_threads(q))
            for (const std::string& a : t.arrows) in_permitted[a]++;
        auto [threads, cycles] = forbidden_threads(q);
        for (const Thread& t : threads)
            for (const std::string& a : t.arrows) in_forbidden[a]++;
        for (const CriticalCycle& c : cycles)
            for (const std::string& a : c.arrows) in_forbidden[a]++;
        for (const Arrow& a : q.arrows()) {
            CHECK(in_permitted[a.name] == 1);
            CHECK(in_forbidden[a.name] == 1);
        }
    }
}

TEST_CASE("permitted path extraction rejects relation-free oriented cycles") {
    BoundQuiver bad = parse_bound_quiver(
        "quiver bad\nvertex v1 v2\narrow a v1 v2\narrow b v2 v1\n");
    CHECK_THROWS_AS(permitted_threads(bad), DomainError);
}

TEST_CASE("sign constraints on fixtures") {
    BoundQuiver a = load_fixture("quiverA.bq");
    for (unsigned seed : {0u, 1u, 2u, 17u, 99u}) {
        SignAssignment s = assign_signs(a, seed);
        // arrows sharing source or target carry opposite signs
        CHECK(s.sigma_arrow("b1") == -s.sigma_arrow("b4"));     // both leave v2
        CHECK(s.epsilon_arrow("b3") == -s.epsilon_arrow("a0"));  // both enter v5
        // relation-free composition b3*a1 forces sigma(a1) = -epsilon(b3)
        CHECK(s.sigma_arrow("a1") == -s.epsilon_arrow("b3"));
    }
}

TEST_CASE("Kronecker signs are forced up to global flips") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        SignAssignment s = assign_signs(kronecker(), seed);
        CHECK(s.sigma_arrow("alpha") == -s.sigma_arrow("beta"));
        CHECK(s.epsilon_arrow("alpha") == -s.epsilon_arrow("beta"));
    }
}

TEST_CASE("single arrow quiver accepts any seed") {
    BoundQuiver one = parse_bound_quiver("quiver one\nvertex v1 v2\narrow a v1 v2\n");
    for (unsigned seed = 0; seed < 4; ++seed) {
        SignAssignment s = assign_signs(one, seed);
        CHECK((s.sigma_arrow("a") == 1 || s.sigma_arrow("a") == -1));
        CHECK((s.epsilon_arrow("a") == 1 || s.epsilon_arrow("a") == -1));
    }
}

TEST_CASE("pairing bijections hold at every vertex") {
    for (const char* name : {"quiverA.bq", "quiverB.bq", "kronecker.bq"}) {
        BoundQuiver q = load_fixture(name);
        for (unsigned seed : {0u, 1u, 5u}) check_pairing_bijections(q, seed);
    }
    check_pairing_bijections(single_vertex(), 0);
    check_pairing_bijections(
        parse_bound_quiver("quiver one\nvertex v1 v2\narrow a v1 v2\n"), 3);
    // bound A3 path: relation in the middle
    check_pairing_bijections(parse_bound_quiver("quiver a3\nvertex v1 v2 v3\n"
                                                "arrow a v1 v2\narrow b v2 v3\nrel a b\n"),
                             7);
}

TEST_CASE("thread dump is stable") {
    BoundQuiver a = load_fixture("quiverA.bq");
    auto permitted = permitted_threads(a);
    auto [forbidden, cycles] = forbidden_threads(a);
    std::vector<Thread> all = permitted;
    all.insert(all.end(), forbidden.begin(), forbidden.end());
    std::string dump = dump_threads(all, cycles);
    CHECK(dump ==
          "permitted: a2 (v7 -> v6)\n"
          "permitted: a3 (v6 -> v4)\n"
          "permitted: b1 b2 b3 a1 (v2 -> v7)\n"
          "permitted: b4 a0 (v2 -> v5)\n"
          "permitted: (trivial at v1)\n"
          "permitted: (trivial at v3)\n"
          "forbidden: b1 (v2 -> v1)\n"
          "forbidden: b2 (v1 -> v3)\n"
          "forbidden: b3 (v3 -> v5)\n"
          "forbidden: b4 (v2 -> v4)\n"
          "forbidden: (trivial at v6)\n"
          "forbidden: (trivial at v7)\n"
          "critical: a0 a1 a2 a3\n")
    ;
}
