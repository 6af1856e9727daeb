#include "qgentle/ag_invariant.hpp"

#include <algorithm>
#include <sstream>

#include "qgentle/threads.hpp"

namespace qgentle {

void AGInvariant::add(std::int64_t n, std::int64_t m, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) pairs.emplace_back(n, m);
    normalize();
}

void AGInvariant::normalize() { std::sort(pairs.begin(), pairs.end()); }

std::int64_t AGInvariant::multiplicity(std::int64_t n, std::int64_t m) const {
    auto range = std::equal_range(pairs.begin(), pairs.end(), std::make_pair(n, m));
    return range.second - range.first;
}

AGInvariant ag_invariant(const BoundQuiver& bq, unsigned seed) {
    if (!is_connected(bq)) throw DomainError("AG-invariant needs a connected quiver");
    std::vector<Thread> permitted = permitted_threads(bq);
    auto [forbidden, cycles] = forbidden_threads(bq);
    SignAssignment signs = assign_signs(bq, seed);

    std::map<std::string, std::vector<std::size_t>> f_by_end, p_by_start;
    for (std::size_t i = 0; i < forbidden.size(); ++i) f_by_end[forbidden[i].end].push_back(i);
    for (std::size_t i = 0; i < permitted.size(); ++i) p_by_start[permitted[i].start].push_back(i);

    // F_i ends where H_i ends carrying the opposite epsilon; H_{i+1} starts
    // where F_i starts carrying the opposite sigma.
    auto pick_forbidden = [&](const Thread& h) -> std::size_t {
        int want = -signs.epsilon(h);
        std::vector<std::size_t> hits;
        for (std::size_t i : f_by_end[h.end])
            if (signs.epsilon(forbidden[i]) == want) hits.push_back(i);
        if (hits.size() != 1)
            throw DomainError("pairing step found " + std::to_string(hits.size()) +
                              " forbidden candidates at '" + h.end +
                              "' (internal error: sign invariant violated)");
        return hits.front();
    };
    auto pick_permitted = [&](const Thread& f) -> std::size_t {
        int want = -signs.sigma(f);
        std::vector<std::size_t> hits;
        for (std::size_t i : p_by_start[f.start])
            if (signs.sigma(permitted[i]) == want) hits.push_back(i);
        if (hits.size() != 1)
            throw DomainError("pairing step found " + std::to_string(hits.size()) +
                              " permitted candidates at '" + f.start +
                              "' (internal error: sign invariant violated)");
        return hits.front();
    };

    AGInvariant result;
    std::vector<bool> p_used(permitted.size(), false), f_used(forbidden.size(), false);
    for (std::size_t start = 0; start < permitted.size(); ++start) {
        if (p_used[start]) continue;
        std::int64_t n = 0, total = 0;
        std::size_t h = start;
        do {
            p_used[h] = true;
            ++n;
            std::size_t f = pick_forbidden(permitted[h]);
            if (f_used[f])
                throw DomainError("forbidden thread reused by the walk (internal error)");
            f_used[f] = true;
            total += forbidden[f].length();
            h = pick_permitted(forbidden[f]);
        } while (h != start);
        result.add(n, total);
    }
    if (std::find(f_used.begin(), f_used.end(), false) != f_used.end())
        throw DomainError("walk left a forbidden thread unused (internal error)");

    for (const CriticalCycle& c : cycles) result.add(0, c.length());
    return result;
}

bool ag_equal(const AGInvariant& a, const AGInvariant& b) { return a.pairs == b.pairs; }

std::string format_ag(const AGInvariant& a) {
    if (a.pairs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.pairs.size();) {
        std::size_t j = i;
        while (j < a.pairs.size() && a.pairs[j] == a.pairs[i]) ++j;
        if (!first) out << " + ";
        first = false;
        if (j - i > 1) out << (j - i) << ".";
        out << "(" << a.pairs[i].first << "," << a.pairs[i].second << ")*";
        i = j;
    }
    return out.str();
}

}  // namespace qgentle
