#include "qgentle/threads.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

namespace qgentle {

int SignAssignment::at(const std::map<std::string, int>& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw DomainError("sign assignment has no entry for '" + key + "'");
    return it->second;
}

namespace {

// Unique relation-free continuation of an arrow, if any (G2).
std::optional<std::string> permitted_successor(const BoundQuiver& bq, const std::string& a) {
    std::optional<std::string> result;
    for (const std::string& b : bq.arrows_out(bq.arrow(a).target)) {
        if (bq.in_ideal(a, b)) continue;
        if (result) throw DomainError("arrow '" + a + "' has two relation-free continuations");
        result = b;
    }
    return result;
}

std::optional<std::string> permitted_predecessor(const BoundQuiver& bq, const std::string& a) {
    std::optional<std::string> result;
    for (const std::string& g : bq.arrows_in(bq.arrow(a).source)) {
        if (bq.in_ideal(g, a)) continue;
        if (result) throw DomainError("arrow '" + a + "' has two relation-free predecessors");
        result = g;
    }
    return result;
}

// Trivial-thread rule: a vertex carries a trivial thread only if at most one
// arrow enters and at most one leaves. The (in, out) composition, when both
// arrows exist, decides the kind (relation-free -> permitted, relation ->
// forbidden); with an arrow missing, both kinds exist. These are exactly the
// slots the per-vertex pairing bijections require.
enum class TrivialSlot { None, PermittedOnly, ForbiddenOnly, Both };

TrivialSlot trivial_slot(const BoundQuiver& bq, const std::string& v) {
    const auto& in = bq.arrows_in(v);
    const auto& out = bq.arrows_out(v);
    if (in.size() > 1 || out.size() > 1) return TrivialSlot::None;
    if (in.empty() || out.empty()) return TrivialSlot::Both;
    return bq.in_ideal(in.front(), out.front()) ? TrivialSlot::ForbiddenOnly
                                                : TrivialSlot::PermittedOnly;
}

bool has_trivial(const BoundQuiver& bq, const std::string& v, ThreadKind kind) {
    TrivialSlot slot = trivial_slot(bq, v);
    if (slot == TrivialSlot::Both) return true;
    if (kind == ThreadKind::Permitted) return slot == TrivialSlot::PermittedOnly;
    return slot == TrivialSlot::ForbiddenOnly;
}

Thread make_thread(const BoundQuiver& bq, ThreadKind kind, std::vector<std::string> arrows) {
    Thread t;
    t.kind = kind;
    t.start = bq.arrow(arrows.front()).source;
    t.end = bq.arrow(arrows.back()).target;
    t.arrows = std::move(arrows);
    return t;
}

Thread make_trivial(ThreadKind kind, const std::string& vertex) {
    Thread t;
    t.kind = kind;
    t.start = vertex;
    t.end = vertex;
    return t;
}

void sort_threads(std::vector<Thread>& threads) {
    std::sort(threads.begin(), threads.end(), [](const Thread& a, const Thread& b) {
        auto key = [](const Thread& t) {
            return std::make_tuple(t.trivial() ? 1 : 0,
                                   t.trivial() ? t.base() : t.arrows.front());
        };
        return key(a) < key(b);
    });
}

}  // namespace

std::vector<Thread> permitted_threads(const BoundQuiver& bq) {
    ensure_gentle(bq);
    if (!is_admissible(bq))
        throw DomainError(
            "relation-free composition graph has an oriented cycle (not admissible)");

    std::vector<Thread> threads;
    std::set<std::string> placed;
    for (const Arrow& a : bq.arrows()) {
        if (placed.count(a.name)) continue;
        if (permitted_predecessor(bq, a.name)) continue;  // not a path start
        std::vector<std::string> path{a.name};
        while (auto next = permitted_successor(bq, path.back())) path.push_back(*next);
        for (const std::string& x : path) placed.insert(x);
        threads.push_back(make_thread(bq, ThreadKind::Permitted, std::move(path)));
    }
    if (placed.size() != bq.num_arrows())
        throw DomainError("permitted path extraction missed an arrow (inconsistent input)");

    for (const std::string& v : bq.vertices())
        if (has_trivial(bq, v, ThreadKind::Permitted))
            threads.push_back(make_trivial(ThreadKind::Permitted, v));

    sort_threads(threads);
    return threads;
}

std::pair<std::vector<Thread>, std::vector<CriticalCycle>> forbidden_threads(
    const BoundQuiver& bq) {
    ensure_gentle(bq);

    std::vector<CriticalCycle> cycles;
    std::set<std::string> cycle_arrows;
    for (auto& c : relation_cycles(bq)) {
        for (const std::string& a : c) cycle_arrows.insert(a);
        cycles.push_back({std::move(c)});
    }

    std::vector<Thread> threads;
    std::set<std::string> placed;
    for (const Arrow& a : bq.arrows()) {
        if (cycle_arrows.count(a.name) || placed.count(a.name)) continue;
        const auto& preds = bq.relation_predecessors(a.name);
        if (!preds.empty()) continue;  // relation paths never enter cycles, so this is interior
        std::vector<std::string> path{a.name};
        while (true) {
            const auto& succ = bq.relation_successors(path.back());
            if (succ.empty()) break;
            path.push_back(succ.front());
        }
        for (const std::string& x : path) placed.insert(x);
        threads.push_back(make_thread(bq, ThreadKind::Forbidden, std::move(path)));
    }
    if (placed.size() + cycle_arrows.size() != bq.num_arrows())
        throw DomainError("relation path extraction missed an arrow (inconsistent input)");

    for (const std::string& v : bq.vertices())
        if (has_trivial(bq, v, ThreadKind::Forbidden))
            threads.push_back(make_trivial(ThreadKind::Forbidden, v));

    sort_threads(threads);
    return {threads, cycles};
}

// ---------------------------------------------------------------------------
// Sign assignment

namespace {

// Union-find over sign variables where every constraint says "opposite".
// Each variable carries the parity of its path to the root; a merge that
// closes an odd cycle inconsistently is a hard error.
class ParitySolver {
public:
    int var(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(parent_.size());
        index_.emplace(name, id);
        parent_.push_back(id);
        parity_.push_back(0);
        return id;
    }

    std::pair<int, int> find(int x) {  // (root, parity to root)
        if (parent_[x] == x) return {x, 0};
        auto [root, p] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= p;
        return {root, parity_[x]};
    }

    void opposite(const std::string& a, const std::string& b) {
        int x = var(a), y = var(b);
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) {
            if ((px ^ py) != 1)
                throw DomainError("sign constraints are unsatisfiable at '" + a + "' / '" + b +
                                  "' (internal error: input should be gentle)");
            return;
        }
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ 1;
    }

    // Deterministic seeded value per component, read through parities.
    std::map<std::string, int> solve(unsigned seed) {
        // Component representative = smallest member name.
        std::map<int, std::string> rep;
        for (const auto& [name, id] : index_) {
            int root = find(id).first;
            auto it = rep.find(root);
            if (it == rep.end() || name < it->second) rep[root] = name;
        }
        std::map<std::string, int> values;
        for (const auto& [name, id] : index_) {
            auto [root, parity] = find(id);
            std::uint64_t h = 1469598103934665603ull;
            auto mix = [&h](const std::string& s) {
                for (char c : s) {
                    h ^= static_cast<unsigned char>(c);
                    h *= 1099511628211ull;
                }
            };
            mix(rep.at(root));
            h ^= (static_cast<std::uint64_t>(seed) + 0x9e3779b97f4a7c15ull);
            h *= 0xbf58476d1ce4e5b9ull;
            h ^= h >> 31;
            int base = static_cast<int>(h & 1) ? 1 : -1;
            values[name] = parity ? -base : base;
        }
        return values;
    }

private:
    std::map<std::string, int> index_;
    std::vector<int> parent_;
    std::vector<int> parity_;
};

std::string sigma_key(const Thread& t) {
    return t.trivial() ? (t.kind == ThreadKind::Permitted ? "s/P/" : "s/F/") + t.base()
                       : "s/a/" + t.arrows.front();
}

std::string epsilon_key(const Thread& t) {
    return t.trivial() ? (t.kind == ThreadKind::Permitted ? "e/P/" : "e/F/") + t.base()
                       : "e/a/" + t.arrows.back();
}

}  // namespace

SignAssignment assign_signs(const BoundQuiver& bq, unsigned seed) {
    ensure_gentle(bq);
    std::vector<Thread> permitted = permitted_threads(bq);
    auto [forbidden, cycles] = forbidden_threads(bq);

    ParitySolver solver;
    for (const Arrow& a : bq.arrows()) {
        solver.var("s/a/" + a.name);
        solver.var("e/a/" + a.name);
    }

    // Arrows sharing a source / target.
    for (const std::string& v : bq.vertices()) {
        const auto& out = bq.arrows_out(v);
        if (out.size() == 2) solver.opposite("s/a/" + out[0], "s/a/" + out[1]);
        const auto& in = bq.arrows_in(v);
        if (in.size() == 2) solver.opposite("e/a/" + in[0], "e/a/" + in[1]);
    }
    // Relation-free compositions tie sigma of the continuation to epsilon.
    for (const Arrow& a : bq.arrows())
        for (const std::string& b : bq.arrows_out(a.target))
            if (!bq.in_ideal(a.name, b)) solver.opposite("s/a/" + b, "e/a/" + a.name);

    // Vertex-level pairing: the permitted and forbidden threads ending at a
    // vertex must carry opposite epsilon in pairs (dually for starts).
    std::map<std::string, std::vector<const Thread*>> p_end, f_end, p_start, f_start;
    for (const Thread& t : permitted) {
        p_end[t.end].push_back(&t);
        p_start[t.start].push_back(&t);
    }
    for (const Thread& t : forbidden) {
        f_end[t.end].push_back(&t);
        f_start[t.start].push_back(&t);
    }
    for (const std::string& v : bq.vertices()) {
        auto& pe = p_end[v];
        auto& fe = f_end[v];
        if (pe.size() != fe.size())
            throw DomainError("thread ends do not balance at vertex '" + v +
                              "' (internal error: input should be gentle)");
        if (pe.size() == 1) solver.opposite(epsilon_key(*pe[0]), epsilon_key(*fe[0]));
        if (pe.size() == 2) {
            solver.opposite(epsilon_key(*pe[0]), epsilon_key(*pe[1]));
            solver.opposite(epsilon_key(*fe[0]), epsilon_key(*fe[1]));
        }
        auto& ps = p_start[v];
        auto& fs = f_start[v];
        if (ps.size() != fs.size())
            throw DomainError("thread starts do not balance at vertex '" + v +
                              "' (internal error: input should be gentle)");
        if (ps.size() == 1) solver.opposite(sigma_key(*ps[0]), sigma_key(*fs[0]));
        if (ps.size() == 2) {
            solver.opposite(sigma_key(*ps[0]), sigma_key(*ps[1]));
            solver.opposite(sigma_key(*fs[0]), sigma_key(*fs[1]));
        }
    }

    // Register trivial-thread variables even when no pairing constraint
    // touches them (isolated structure), so lookups always succeed.
    for (const Thread& t : permitted)
        if (t.trivial()) {
            solver.var(sigma_key(t));
            solver.var(epsilon_key(t));
        }
    for (const Thread& t : forbidden)
        if (t.trivial()) {
            solver.var(sigma_key(t));
            solver.var(epsilon_key(t));
        }

    std::map<std::string, int> values = solver.solve(seed);

    SignAssignment sa;
    for (const auto& [key, value] : values) {
        const std::string name = key.substr(4);
        if (key.rfind("s/a/", 0) == 0)
            sa.sigma_arrow_[name] = value;
        else if (key.rfind("e/a/", 0) == 0)
            sa.epsilon_arrow_[name] = value;
        else if (key.rfind("s/P/", 0) == 0)
            sa.sigma_triv_perm_[name] = value;
        else if (key.rfind("e/P/", 0) == 0)
            sa.epsilon_triv_perm_[name] = value;
        else if (key.rfind("s/F/", 0) == 0)
            sa.sigma_triv_forb_[name] = value;
        else if (key.rfind("e/F/", 0) == 0)
            sa.epsilon_triv_forb_[name] = value;
    }
    return sa;
}

std::string dump_threads(const std::vector<Thread>& threads,
                         const std::vector<CriticalCycle>& cycles) {
    std::ostringstream out;
    for (const Thread& t : threads) {
        out << (t.kind == ThreadKind::Permitted ? "permitted:" : "forbidden:");
        if (t.trivial()) {
            out << " (trivial at " << t.base() << ")";
        } else {
            for (const std::string& a : t.arrows) out << " " << a;
            out << " (" << t.start << " -> " << t.end << ")";
        }
        out << "\n";
    }
    for (const CriticalCycle& c : cycles) {
        out << "critical:";
        for (const std::string& a : c.arrows) out << " " << a;
        out << "\n";
    }
    return out.str();
}

}  // namespace qgentle
