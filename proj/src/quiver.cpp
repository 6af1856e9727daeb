#include "qgentle/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qgentle {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_';
        if (!ok) return false;
    }
    return true;
}

const std::vector<std::string> kEmpty;

}  // namespace

BoundQuiver::BoundQuiver(std::string name, std::vector<Vertex> vertices,
                         std::vector<Arrow> arrows, std::vector<Relation> relations)
    : name_(std::move(name)) {
    for (const Vertex& v : vertices) {
        if (!valid_identifier(v.id)) throw ValidationError("invalid vertex id '" + v.id + "'");
        vertices_.push_back(v.id);
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw ValidationError("duplicate vertex id");

    for (const Arrow& a : arrows) {
        if (!valid_identifier(a.name)) throw ValidationError("invalid arrow name '" + a.name + "'");
        if (!std::binary_search(vertices_.begin(), vertices_.end(), a.source))
            throw ValidationError("arrow '" + a.name + "' has unknown source '" + a.source + "'");
        if (!std::binary_search(vertices_.begin(), vertices_.end(), a.target))
            throw ValidationError("arrow '" + a.name + "' has unknown target '" + a.target + "'");
        if (!arrow_by_name_.emplace(a.name, a).second)
            throw ValidationError("duplicate arrow name '" + a.name + "'");
    }
    for (const auto& [n, a] : arrow_by_name_) arrows_.push_back(a);

    for (const Relation& r : relations) {
        auto fi = arrow_by_name_.find(r.first);
        auto si = arrow_by_name_.find(r.second);
        if (fi == arrow_by_name_.end())
            throw ValidationError("relation references unknown arrow '" + r.first + "'");
        if (si == arrow_by_name_.end())
            throw ValidationError("relation references unknown arrow '" + r.second + "'");
        if (fi->second.target != si->second.source)
            throw ValidationError("relation " + r.first + " " + r.second +
                                  " does not compose: t(" + r.first + ") = " + fi->second.target +
                                  " but s(" + r.second + ") = " + si->second.source);
        if (!relation_set_.emplace(r.first, r.second).second)
            throw ValidationError("duplicate relation " + r.first + " " + r.second);
    }
    for (const auto& [f, s] : relation_set_) relations_.push_back({f, s});

    for (const std::string& v : vertices_) {
        out_[v];
        in_[v];
    }
    for (const Arrow& a : arrows_) {
        out_[a.source].push_back(a.name);
        in_[a.target].push_back(a.name);
        rel_succ_[a.name];
        rel_pred_[a.name];
    }
    for (const Relation& r : relations_) {
        rel_succ_[r.first].push_back(r.second);
        rel_pred_[r.second].push_back(r.first);
    }
    // maps were filled in sorted relation order already; adjacency needs sorting
    for (auto& [v, names] : out_) std::sort(names.begin(), names.end());
    for (auto& [v, names] : in_) std::sort(names.begin(), names.end());
}

bool BoundQuiver::has_vertex(const std::string& id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

bool BoundQuiver::has_arrow(const std::string& name) const {
    return arrow_by_name_.count(name) != 0;
}

const Arrow& BoundQuiver::arrow(const std::string& name) const {
    auto it = arrow_by_name_.find(name);
    if (it == arrow_by_name_.end()) throw ValidationError("unknown arrow '" + name + "'");
    return it->second;
}

bool BoundQuiver::in_ideal(const std::string& first, const std::string& second) const {
    return relation_set_.count({first, second}) != 0;
}

const std::vector<std::string>& BoundQuiver::arrows_out(const std::string& vertex) const {
    auto it = out_.find(vertex);
    return it == out_.end() ? kEmpty : it->second;
}

const std::vector<std::string>& BoundQuiver::arrows_in(const std::string& vertex) const {
    auto it = in_.find(vertex);
    return it == in_.end() ? kEmpty : it->second;
}

const std::vector<std::string>& BoundQuiver::relation_successors(const std::string& arrow) const {
    auto it = rel_succ_.find(arrow);
    return it == rel_succ_.end() ? kEmpty : it->second;
}

const std::vector<std::string>& BoundQuiver::relation_predecessors(const std::string& arrow) const {
    auto it = rel_pred_.find(arrow);
    return it == rel_pred_.end() ? kEmpty : it->second;
}

bool BoundQuiver::has_loops() const {
    for (const Arrow& a : arrows_)
        if (a.source == a.target) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Text format

BoundQuiver parse_bound_quiver(const std::string& text) {
    struct Token {
        std::string value;
        int line;
        int column;
    };
    std::vector<std::vector<Token>> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::vector<Token> toks;
            std::size_t i = 0;
            while (i < raw.size()) {
                if (raw[i] == '#') break;
                if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                    ++i;
                    continue;
                }
                std::size_t start = i;
                while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
                       raw[i] != '#')
                    ++i;
                toks.push_back({raw.substr(start, i - start), lineno, static_cast<int>(start + 1)});
            }
            if (!toks.empty()) lines.push_back(std::move(toks));
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected a 'quiver' line");

    const auto& head = lines.front();
    if (head[0].value != "quiver")
        throw ParseError(head[0].line, head[0].column, "expected 'quiver <name>' as first entry");
    if (head.size() != 2)
        throw ParseError(head[0].line, head[0].column, "'quiver' takes exactly one name");
    std::string name = head[1].value;
    if (!valid_identifier(name))
        throw ParseError(head[1].line, head[1].column, "invalid quiver name '" + name + "'");

    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::set<std::string> vertex_ids, arrow_names;
    std::set<std::pair<std::string, std::string>> relation_keys;

    auto check_identifier = [](const Token& t) {
        if (!valid_identifier(t.value))
            throw ParseError(t.line, t.column, "invalid identifier '" + t.value + "'");
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        const Token& kw = toks[0];
        if (kw.value == "vertex") {
            if (toks.size() < 2)
                throw ParseError(kw.line, kw.column, "'vertex' needs at least one id");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                check_identifier(toks[i]);
                if (!vertex_ids.insert(toks[i].value).second)
                    throw ParseError(toks[i].line, toks[i].column,
                                     "duplicate vertex id '" + toks[i].value + "'");
                vertices.push_back({toks[i].value});
            }
        } else if (kw.value == "arrow") {
            if (toks.size() != 4)
                throw ParseError(kw.line, kw.column, "'arrow' needs: name source target");
            for (std::size_t i = 1; i < 4; ++i) check_identifier(toks[i]);
            if (!arrow_names.insert(toks[1].value).second)
                throw ParseError(toks[1].line, toks[1].column,
                                 "duplicate arrow name '" + toks[1].value + "'");
            if (!vertex_ids.count(toks[2].value))
                throw ParseError(toks[2].line, toks[2].column,
                                 "unknown vertex '" + toks[2].value + "'");
            if (!vertex_ids.count(toks[3].value))
                throw ParseError(toks[3].line, toks[3].column,
                                 "unknown vertex '" + toks[3].value + "'");
            arrows.push_back({toks[1].value, toks[2].value, toks[3].value});
        } else if (kw.value == "rel") {
            if (toks.size() != 3)
                throw ParseError(kw.line, kw.column, "'rel' needs: first-arrow second-arrow");
            for (std::size_t i = 1; i < 3; ++i) check_identifier(toks[i]);
            for (std::size_t i = 1; i < 3; ++i)
                if (!arrow_names.count(toks[i].value))
                    throw ParseError(toks[i].line, toks[i].column,
                                     "unknown arrow '" + toks[i].value + "'");
            if (!relation_keys.emplace(toks[1].value, toks[2].value).second)
                throw ParseError(kw.line, kw.column,
                                 "duplicate relation " + toks[1].value + " " + toks[2].value);
            relations.push_back({toks[1].value, toks[2].value});
        } else if (kw.value == "quiver") {
            throw ParseError(kw.line, kw.column, "'quiver' may appear only once, first");
        } else {
            throw ParseError(kw.line, kw.column, "unknown directive '" + kw.value + "'");
        }
    }

    // Composability is re-checked here with line positions.
    std::map<std::string, Arrow> by_name;
    for (const Arrow& a : arrows) by_name[a.name] = a;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks[0].value != "rel") continue;
        const Arrow& f = by_name[toks[1].value];
        const Arrow& s = by_name[toks[2].value];
        if (f.target != s.source)
            throw ParseError(toks[0].line, toks[0].column,
                             "relation " + f.name + " " + s.name + " does not compose: t(" +
                                 f.name + ") = " + f.target + " but s(" + s.name + ") = " +
                                 s.source);
    }

    return BoundQuiver(std::move(name), std::move(vertices), std::move(arrows),
                       std::move(relations));
}

std::string serialize_bound_quiver(const BoundQuiver& bq) {
    std::ostringstream out;
    out << "# bound quiver file\n";
    out << "# rel f g  is the length-2 path f*g with t(f) = s(g)\n";
    out << "quiver " << bq.name() << "\n";
    for (const std::string& v : bq.vertices()) out << "vertex " << v << "\n";
    for (const Arrow& a : bq.arrows())
        out << "arrow " << a.name << " " << a.source << " " << a.target << "\n";
    for (const Relation& r : bq.relations()) out << "rel " << r.first << " " << r.second << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Gentleness

GentleReport is_gentle(const BoundQuiver& bq) {
    GentleReport report;
    for (const std::string& v : bq.vertices()) {
        if (bq.arrows_in(v).size() > 2)
            report.violations.push_back(
                {"G1", v, std::to_string(bq.arrows_in(v).size()) + " arrows enter " + v});
        if (bq.arrows_out(v).size() > 2)
            report.violations.push_back(
                {"G1", v, std::to_string(bq.arrows_out(v).size()) + " arrows leave " + v});
    }
    for (const Arrow& a : bq.arrows()) {
        int perm_succ = 0, perm_pred = 0, rel_succ = 0, rel_pred = 0;
        for (const std::string& b : bq.arrows_out(a.target))
            (bq.in_ideal(a.name, b) ? rel_succ : perm_succ)++;
        for (const std::string& g : bq.arrows_in(a.source))
            (bq.in_ideal(g, a.name) ? rel_pred : perm_pred)++;
        if (perm_succ > 1)
            report.violations.push_back({"G2", a.name, "two relation-free continuations"});
        if (perm_pred > 1)
            report.violations.push_back({"G2", a.name, "two relation-free predecessors"});
        if (rel_succ > 1)
            report.violations.push_back({"G3", a.name, "two relation-bound continuations"});
        if (rel_pred > 1)
            report.violations.push_back({"G3", a.name, "two relation-bound predecessors"});
    }
    report.gentle = report.violations.empty();
    return report;
}

void ensure_gentle(const BoundQuiver& bq) {
    GentleReport r = is_gentle(bq);
    if (!r.gentle) {
        std::string msg = "quiver is not gentle:";
        for (const auto& v : r.violations) msg += " [" + v.condition + " at " + v.where + "]";
        throw DomainError(msg);
    }
}

// ---------------------------------------------------------------------------
// Cycles and connectivity

bool is_admissible(const BoundQuiver& bq) {
    // DFS over the composition graph restricted to relation-free pairs.
    // 0 = unseen, 1 = on stack, 2 = done.
    std::map<std::string, int> state;
    std::function<bool(const std::string&)> has_cycle = [&](const std::string& a) -> bool {
        state[a] = 1;
        const Arrow& arr = bq.arrow(a);
        for (const std::string& b : bq.arrows_out(arr.target)) {
            if (bq.in_ideal(a, b)) continue;
            int s = state.count(b) ? state[b] : 0;
            if (s == 1) return true;
            if (s == 0 && has_cycle(b)) return true;
        }
        state[a] = 2;
        return false;
    };
    for (const Arrow& a : bq.arrows()) {
        int s = state.count(a.name) ? state[a.name] : 0;
        if (s == 0 && has_cycle(a.name)) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::map<std::string, std::string> parent;
    const std::string& find(const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return parent[x];
        }
        if (it->second == x) return it->second;
        std::string root = find(it->second);
        parent[x] = root;
        return parent[x];
    }
    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[ra] = rb;
    }
};

}  // namespace

bool is_connected(const BoundQuiver& bq) {
    if (bq.num_vertices() == 0) return false;
    UnionFind uf;
    for (const std::string& v : bq.vertices()) uf.find(v);
    for (const Arrow& a : bq.arrows()) uf.unite(a.source, a.target);
    const std::string& root = uf.find(bq.vertices().front());
    for (const std::string& v : bq.vertices())
        if (uf.find(v) != root) return false;
    return true;
}

int euler_characteristic(const BoundQuiver& bq) {
    if (!is_connected(bq)) throw DomainError("euler characteristic needs a connected quiver");
    return static_cast<int>(bq.num_arrows()) - static_cast<int>(bq.num_vertices()) + 1;
}

std::vector<BoundQuiver> connected_components(const BoundQuiver& bq) {
    UnionFind uf;
    for (const std::string& v : bq.vertices()) uf.find(v);
    for (const Arrow& a : bq.arrows()) uf.unite(a.source, a.target);

    std::map<std::string, std::vector<std::string>> verts_by_root;
    for (const std::string& v : bq.vertices()) verts_by_root[uf.find(v)].push_back(v);

    // Order components by their smallest vertex id.
    std::vector<std::pair<std::string, std::string>> order;  // (min vertex, root)
    for (const auto& [root, vs] : verts_by_root)
        order.emplace_back(*std::min_element(vs.begin(), vs.end()), root);
    std::sort(order.begin(), order.end());

    std::vector<BoundQuiver> components;
    int index = 0;
    for (const auto& [minv, root] : order) {
        std::vector<Vertex> vs;
        for (const std::string& v : verts_by_root[root]) vs.push_back({v});
        std::vector<Arrow> as;
        for (const Arrow& a : bq.arrows())
            if (uf.find(a.source) == root) as.push_back(a);
        std::set<std::string> names;
        for (const Arrow& a : as) names.insert(a.name);
        std::vector<Relation> rs;
        for (const Relation& r : bq.relations())
            if (names.count(r.first)) rs.push_back(r);
        components.emplace_back(bq.name() + "_c" + std::to_string(index++), std::move(vs),
                                std::move(as), std::move(rs));
    }
    return components;
}

std::vector<std::vector<std::string>> relation_cycles(const BoundQuiver& bq) {
    ensure_gentle(bq);
    std::vector<std::vector<std::string>> cycles;
    std::set<std::string> done;
    for (const Arrow& start : bq.arrows()) {
        if (done.count(start.name)) continue;
        // Walk the functional relation-successor map looking for a cycle
        // through the start arrow.
        std::vector<std::string> path{start.name};
        std::set<std::string> on_path{start.name};
        std::string cur = start.name;
        while (true) {
            const auto& succ = bq.relation_successors(cur);
            if (succ.empty()) break;
            cur = succ.front();
            if (on_path.count(cur)) {
                auto it = std::find(path.begin(), path.end(), cur);
                std::vector<std::string> cycle(it, path.end());
                auto min_it = std::min_element(cycle.begin(), cycle.end());
                std::rotate(cycle.begin(), min_it, cycle.end());
                cycles.push_back(cycle);
                for (const std::string& a : cycle) done.insert(a);
                break;
            }
            if (done.count(cur)) break;
            path.push_back(cur);
            on_path.insert(cur);
        }
        for (const std::string& a : path) done.insert(a);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::vector<std::vector<std::string>> find_saturated_cycles(const BoundQuiver& bq, int m) {
    if (m < 1) throw DomainError("m must be positive");
    std::vector<std::vector<std::string>> result;
    for (auto& c : relation_cycles(bq))
        if (static_cast<int>(c.size()) == m + 2) result.push_back(std::move(c));
    return result;
}

int max_consecutive_relations_outside(const BoundQuiver& bq, int m) {
    if (m < 1) throw DomainError("m must be positive");
    ensure_gentle(bq);

    std::set<std::string> saturated_arrows;
    for (const auto& c : find_saturated_cycles(bq, m))
        for (const std::string& a : c) saturated_arrows.insert(a);

    // Relations surviving: those not lying on an m-saturated cycle.
    auto keeps = [&](const Relation& r) {
        return !(saturated_arrows.count(r.first) && saturated_arrows.count(r.second));
    };
    std::map<std::string, std::string> succ;
    std::set<std::string> has_pred;
    for (const Relation& r : bq.relations()) {
        if (!keeps(r)) continue;
        succ[r.first] = r.second;  // functional by G3
        has_pred.insert(r.second);
    }

    int best = 0;
    for (const auto& [a, b] : succ) {
        if (has_pred.count(a)) continue;  // not a chain start
        int len = 0;
        std::string cur = a;
        while (succ.count(cur)) {
            ++len;
            cur = succ.at(cur);
        }
        best = std::max(best, len);
    }
    // Remaining edges belong to relation cycles that are not m-saturated;
    // a maximal chain there consists of all relations of the cycle.
    for (const auto& c : relation_cycles(bq)) {
        if (static_cast<int>(c.size()) == m + 2) continue;
        bool kept = true;
        for (std::size_t i = 0; i < c.size() && kept; ++i)
            kept = keeps({c[i], c[(i + 1) % c.size()]});
        if (kept) best = std::max(best, static_cast<int>(c.size()));
    }
    return best;
}

std::vector<std::vector<CycleStep>> underlying_simple_cycles(const BoundQuiver& bq) {
    // Incidence of each vertex as (arrow, leaves-along-direction).
    std::map<std::string, std::vector<std::pair<std::string, bool>>> incident;
    for (const Arrow& a : bq.arrows()) {
        incident[a.source].emplace_back(a.name, true);
        if (a.source != a.target) incident[a.target].emplace_back(a.name, false);
    }
    for (auto& [v, list] : incident) std::sort(list.begin(), list.end());

    std::vector<std::vector<CycleStep>> cycles;
    std::set<std::vector<std::string>> seen;
    constexpr std::size_t kCycleCap = 100000;

    for (const Arrow& a : bq.arrows())
        if (a.source == a.target) {
            std::vector<std::string> key{a.name};
            if (seen.insert(key).second) cycles.push_back({{a.name, true}});
        }

    std::vector<CycleStep> path;
    std::set<std::string> used_arrows;
    std::set<std::string> visited;

    std::function<void(const std::string&, const std::string&)> extend =
        [&](const std::string& start, const std::string& here) {
            auto it = incident.find(here);
            if (it == incident.end()) return;
            for (const auto& [arrow_name, forward] : it->second) {
                if (used_arrows.count(arrow_name)) continue;
                const Arrow& arr = bq.arrow(arrow_name);
                if (arr.source == arr.target) continue;  // loops handled above
                std::string next = forward ? arr.target : arr.source;
                if (next == start) {
                    if (path.size() >= 1) {
                        std::vector<std::string> key;
                        for (const CycleStep& s : path) key.push_back(s.arrow);
                        key.push_back(arrow_name);
                        std::sort(key.begin(), key.end());
                        if (seen.size() < kCycleCap && seen.insert(key).second) {
                            auto cycle = path;
                            cycle.push_back({arrow_name, forward});
                            cycles.push_back(cycle);
                        }
                    }
                    continue;
                }
                if (visited.count(next)) continue;
                path.push_back({arrow_name, forward});
                used_arrows.insert(arrow_name);
                visited.insert(next);
                extend(start, next);
                visited.erase(next);
                used_arrows.erase(arrow_name);
                path.pop_back();
            }
        };

    for (const std::string& v : bq.vertices()) {
        visited.insert(v);
        extend(v, v);
        visited.erase(v);
        // Keep every start vertex; dedup happens through `seen`.
    }
    if (seen.size() >= kCycleCap)
        throw DomainError("underlying cycle enumeration exceeded the supported bound");

    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<CycleStep>& a, const std::vector<CycleStep>& b) {
                  std::vector<std::string> ka, kb;
                  for (const auto& s : a) ka.push_back(s.arrow);
                  for (const auto& s : b) kb.push_back(s.arrow);
                  std::sort(ka.begin(), ka.end());
                  std::sort(kb.begin(), kb.end());
                  return std::make_pair(ka.size(), ka) < std::make_pair(kb.size(), kb);
              });
    return cycles;
}

}  // namespace qgentle
