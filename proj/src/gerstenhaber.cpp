#include "qgentle/gerstenhaber.hpp"

#include <algorithm>

namespace qgentle {

std::vector<RelationPath> gamma_n(const BoundQuiver& bq, int n) {
    if (n < 2) throw DomainError("relation walks are defined for n >= 2");
    ensure_gentle(bq);
    // The relation graph has out-degree at most one, so each starting arrow
    // extends to at most one walk of each length.
    std::vector<RelationPath> walks;
    for (const Arrow& a : bq.arrows()) {
        std::vector<std::string> walk{a.name};
        while (static_cast<int>(walk.size()) < n) {
            const auto& succ = bq.relation_successors(walk.back());
            if (succ.empty()) break;
            walk.push_back(succ.front());
        }
        if (static_cast<int>(walk.size()) == n) walks.push_back({std::move(walk)});
    }
    return walks;
}

std::vector<CompletePair> complete_pairs(const BoundQuiver& bq, int n) {
    std::vector<CompletePair> pairs;
    for (RelationPath& w : gamma_n(bq, n)) {
        const std::string& first = w.arrows.front();
        const std::string& last = w.arrows.back();
        if (bq.arrow(first).source != bq.arrow(last).target) continue;
        if (!bq.in_ideal(last, first)) continue;
        CompletePair p;
        p.base = bq.arrow(first).source;
        p.path = std::move(w);
        pairs.push_back(std::move(p));
    }
    return pairs;
}

namespace {

// Exclusion test at the base point of a complete pair: no arrow besides the
// walk's own neighbours continues the closing relations.
bool passes_exclusion(const BoundQuiver& bq, const CompletePair& p) {
    const std::string& first = p.path.arrows.front();
    const std::string& last = p.path.arrows.back();
    for (const Arrow& g : bq.arrows()) {
        if (g.name != last && bq.in_ideal(g.name, first)) return false;
        if (g.name != first && bq.in_ideal(last, g.name)) return false;
    }
    return true;
}

CompletePair shifted(const BoundQuiver& bq, const CompletePair& p) {
    CompletePair q;
    q.path.arrows.push_back(p.path.arrows.back());
    q.path.arrows.insert(q.path.arrows.end(), p.path.arrows.begin(), p.path.arrows.end() - 1);
    q.base = bq.arrow(q.path.arrows.front()).source;
    return q;
}

}  // namespace

std::vector<CompletePair> gentle_pairs(const BoundQuiver& bq, int n) {
    std::vector<CompletePair> result;
    for (const CompletePair& p : complete_pairs(bq, n)) {
        bool ok = true;
        CompletePair cur = p;
        for (int i = 0; i < n && ok; ++i) {
            ok = passes_exclusion(bq, cur);
            cur = shifted(bq, cur);
        }
        if (ok) result.push_back(p);
    }
    return result;
}

GerstenhaberVerdict gerstenhaber_nontrivial(const BoundQuiver& bq, const FieldSpec& k,
                                            int n_bound) {
    ensure_field(k);
    ensure_gentle(bq);
    GerstenhaberVerdict v;
    for (const auto& cycle : relation_cycles(bq)) {
        int len = static_cast<int>(cycle.size());
        int n = len >= 2 ? len : 2;  // walks start at length 2; a 1-cycle winds twice
        if (n > n_bound) continue;
        auto pairs = gentle_pairs(bq, n);
        if (pairs.empty()) continue;
        v.cup_nontrivial = true;
        v.bracket_nontrivial = k.characteristic == 0;
        // Deterministic witness: the rotation starting at the smallest arrow.
        std::sort(pairs.begin(), pairs.end(), [](const CompletePair& a, const CompletePair& b) {
            return a.path.arrows < b.path.arrows;
        });
        if (!v.witness) v.witness = pairs.front();
    }
    return v;
}

}  // namespace qgentle
