#include "qgentle/atilde.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qgentle {

BranchParams::BranchParams(int m_, std::int64_t s1_, std::int64_t k1_, std::int64_t s2_,
                           std::int64_t k2_, std::int64_t r_)
    : m(m_), s1(s1_), k1(k1_), s2(s2_), k2(k2_), r(r_) {
    if (m < 1) throw DomainError("m must be a positive integer");
    if (s1 < 0 || s2 < 0 || k1 < 0 || k2 < 0) throw DomainError("s and k counts must be natural");
    if (s1 + s2 + k1 + k2 < 1) throw DomainError("a root cycle needs at least one arrow");
}

BranchParams BranchParams::canonical() const {
    if (r > 0) return *this;
    if (r < 0) return swapped();
    if (std::make_pair(s1, k1) <= std::make_pair(s2, k2)) return *this;
    return swapped();
}

std::string to_string(const BranchParams& p) {
    std::ostringstream out;
    out << "(m=" << p.m << "; s1=" << p.s1 << ", k1=" << p.k1 << ", s2=" << p.s2
        << ", k2=" << p.k2 << ", r=" << p.r << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Recognition and decomposition

bool is_algebra_with_root(const BoundQuiver& bq, int m) {
    if (!is_connected(bq)) throw DomainError("algebra-with-root test needs a connected quiver");
    if (!is_gentle(bq).gentle) return false;
    if (bq.has_loops()) return false;
    int chi = euler_characteristic(bq);
    if (chi < 1) return false;
    return static_cast<int>(find_saturated_cycles(bq, m).size()) == chi - 1;
}

namespace {

std::vector<std::string> sorted_names(const std::vector<CycleStep>& cycle) {
    std::vector<std::string> names;
    for (const CycleStep& s : cycle) names.push_back(s.arrow);
    std::sort(names.begin(), names.end());
    return names;
}

std::set<std::string> cycle_vertices(const BoundQuiver& bq, const std::vector<std::string>& c) {
    std::set<std::string> vs;
    for (const std::string& a : c) {
        vs.insert(bq.arrow(a).source);
        vs.insert(bq.arrow(a).target);
    }
    return vs;
}

}  // namespace

RootDecomposition decompose(const BoundQuiver& bq, int m) {
    if (!is_algebra_with_root(bq, m))
        throw DomainError("decomposition needs an algebra with root for m = " + std::to_string(m));

    const auto saturated = find_saturated_cycles(bq, m);
    std::set<std::vector<std::string>> saturated_keys;
    std::set<std::string> saturated_arrows;
    for (const auto& c : saturated) {
        std::vector<std::string> key = c;
        std::sort(key.begin(), key.end());
        saturated_keys.insert(key);
        for (const std::string& a : c) saturated_arrows.insert(a);
    }

    // Shortest non-saturated simple cycle, ties broken by sorted arrow names.
    std::optional<std::vector<CycleStep>> root;
    for (const auto& cycle : underlying_simple_cycles(bq)) {
        if (saturated_keys.count(sorted_names(cycle))) continue;
        root = cycle;
        break;  // underlying_simple_cycles is already (size, names)-sorted
    }
    if (!root) throw DomainError("no non-saturated cycle found");

    // Orient so the lexicographically smallest root arrow runs clockwise.
    {
        auto names = sorted_names(*root);
        const std::string& smallest = names.front();
        auto it = std::find_if(root->begin(), root->end(),
                               [&](const CycleStep& s) { return s.arrow == smallest; });
        std::rotate(root->begin(), it, root->end());
        if (!root->front().forward) {
            std::reverse(root->begin(), root->end());
            for (CycleStep& s : *root) s.forward = !s.forward;
            std::rotate(root->begin(), root->end() - 1, root->end());
        }
    }

    RootDecomposition d;
    std::set<std::string> root_arrows;
    std::map<std::string, bool> root_cw;
    for (const CycleStep& s : *root) {
        d.root.push_back({s.arrow, s.forward, saturated_arrows.count(s.arrow) != 0});
        root_arrows.insert(s.arrow);
        root_cw[s.arrow] = s.forward;
    }
    std::set<std::string> root_vertices = cycle_vertices(bq, [&] {
        std::vector<std::string> names;
        for (const auto& s : *root) names.push_back(s.arrow);
        return names;
    }());

    // Saturated cycles meeting the root in >= 2 vertices are deleted along
    // with the root when forming the rays.
    std::set<std::string> deleted = root_arrows;
    for (const auto& c : saturated) {
        SaturatedAttachment att;
        att.cycle = c;
        std::vector<std::string> shared;
        for (const std::string& a : c)
            if (root_arrows.count(a)) shared.push_back(a);
        auto verts = cycle_vertices(bq, c);
        std::size_t common_vertices = 0;
        for (const std::string& v : verts)
            if (root_vertices.count(v)) ++common_vertices;
        if (shared.size() == 1) {
            att.shared_arrow = shared.front();
            att.kind = root_cw[shared.front()] ? AttachmentKind::SharedArrowCW
                                               : AttachmentKind::SharedArrowCCW;
        } else if (shared.size() >= 2 || common_vertices >= 2) {
            att.kind = AttachmentKind::Unsupported;
        } else {
            att.kind = AttachmentKind::OnRay;
        }
        if (common_vertices >= 2)
            for (const std::string& a : c) deleted.insert(a);
        d.saturated.push_back(std::move(att));
    }

    // Internal relations: both arrows on the root cycle.
    for (const Relation& rel : bq.relations()) {
        if (root_arrows.count(rel.first) && root_arrows.count(rel.second)) {
            InternalRelation ir;
            ir.relation = rel;
            ir.clockwise = root_cw[rel.first];
            d.internal_relations.push_back(ir);
        }
    }

    // Rays: connected components of what survives the deletion.
    std::vector<std::string> ray_arrow_names;
    for (const Arrow& a : bq.arrows())
        if (!deleted.count(a.name)) ray_arrow_names.push_back(a.name);

    std::map<std::string, std::string> comp;  // vertex -> representative
    std::function<std::string(const std::string&)> find_rep = [&](const std::string& v) {
        auto it = comp.find(v);
        if (it == comp.end() || it->second == v) {
            comp[v] = v;
            return v;
        }
        std::string r = find_rep(it->second);
        comp[v] = r;
        return r;
    };
    for (const std::string& an : ray_arrow_names) {
        const Arrow& a = bq.arrow(an);
        std::string ra = find_rep(a.source), rb = find_rep(a.target);
        if (ra != rb) comp[ra] = rb;
    }
    std::map<std::string, RayInfo> rays;
    for (const std::string& an : ray_arrow_names)
        rays[find_rep(bq.arrow(an).source)].arrows.push_back(an);
    for (auto& [rep, ray] : rays) {
        std::set<std::string> vs;
        for (const std::string& an : ray.arrows) {
            vs.insert(bq.arrow(an).source);
            vs.insert(bq.arrow(an).target);
        }
        ray.vertices.assign(vs.begin(), vs.end());
        for (const std::string& v : ray.vertices)
            if (root_vertices.count(v)) ray.union_vertices.push_back(v);
        std::set<std::string> ray_arrow_set(ray.arrows.begin(), ray.arrows.end());
        for (const auto& c : saturated) {
            bool inside = true;
            for (const std::string& a : c) inside = inside && ray_arrow_set.count(a);
            if (inside) ++ray.saturated_cycles;
        }
        // Union relations at the ray's union vertices.
        for (const Relation& rel : bq.relations()) {
            bool first_root = root_arrows.count(rel.first) != 0;
            bool second_root = root_arrows.count(rel.second) != 0;
            const std::string& at = bq.arrow(rel.first).target;
            bool at_union =
                std::find(ray.union_vertices.begin(), ray.union_vertices.end(), at) !=
                ray.union_vertices.end();
            if (first_root && second_root && at_union) {
                ray.relation_kind = root_cw[rel.first] ? UnionRelationKind::InternalCW
                                                       : UnionRelationKind::InternalCCW;
                for (auto& ir : d.internal_relations)
                    if (ir.relation.first == rel.first && ir.relation.second == rel.second)
                        ir.union_relation = true;
            } else if (first_root != second_root) {
                const std::string& root_one = first_root ? rel.first : rel.second;
                const std::string& other = first_root ? rel.second : rel.first;
                if (ray_arrow_set.count(other) && ray.relation_kind == UnionRelationKind::None) {
                    ray.relation_kind = root_cw[root_one] ? UnionRelationKind::ExternalCW
                                                          : UnionRelationKind::ExternalCCW;
                }
            }
        }
        d.rays.push_back(ray);
    }

    return d;
}

FreeArrowCount free_arrows(const BoundQuiver& bq, int m, const RootDecomposition& d) {
    (void)bq;
    (void)m;
    std::set<std::string> union_relation_arrows;
    std::int64_t union_cw = 0, union_ccw = 0;
    for (const InternalRelation& ir : d.internal_relations) {
        if (!ir.union_relation) continue;
        union_relation_arrows.insert(ir.relation.first);
        union_relation_arrows.insert(ir.relation.second);
        (ir.clockwise ? union_cw : union_ccw)++;
    }
    FreeArrowCount f;
    for (const RootArrow& a : d.root) {
        if (a.saturated) continue;
        if (union_relation_arrows.count(a.name)) continue;
        (a.clockwise ? f.cw : f.ccw)++;
    }
    f.cw += union_cw;
    f.ccw += union_ccw;
    // Ray arrows follow the orientation of their union relation.
    std::set<std::string> saturated_arrows;
    for (const auto& att : d.saturated)
        for (const std::string& a : att.cycle) saturated_arrows.insert(a);
    for (const RayInfo& ray : d.rays) {
        std::int64_t nonsat = 0;
        for (const std::string& a : ray.arrows)
            if (!saturated_arrows.count(a)) ++nonsat;
        switch (ray.relation_kind) {
            case UnionRelationKind::InternalCW:
            case UnionRelationKind::ExternalCW:
                f.cw += nonsat;
                break;
            case UnionRelationKind::InternalCCW:
            case UnionRelationKind::ExternalCCW:
                f.ccw += nonsat;
                break;
            case UnionRelationKind::None:
                break;
        }
    }
    return f;
}

BranchParams extract_params(const BoundQuiver& bq, int m) {
    RootDecomposition d = decompose(bq, m);

    std::int64_t s_cw = 0, s_ccw = 0, k_cw = 0, k_ccw = 0;
    for (const RootArrow& a : d.root) {
        if (a.saturated) continue;
        (a.clockwise ? s_cw : s_ccw)++;
    }
    for (const SaturatedAttachment& att : d.saturated) {
        switch (att.kind) {
            case AttachmentKind::SharedArrowCW:
                ++k_cw;
                break;
            case AttachmentKind::SharedArrowCCW:
                ++k_ccw;
                break;
            case AttachmentKind::OnRay:
                break;  // counted through its ray below
            case AttachmentKind::Unsupported:
                throw DomainError(
                    "saturated cycle attachment matches no counting clause "
                    "(shares several arrows or only vertices with the root cycle)");
        }
    }
    std::set<std::string> saturated_arrows;
    for (const auto& att : d.saturated)
        for (const std::string& a : att.cycle) saturated_arrows.insert(a);

    for (const RayInfo& ray : d.rays) {
        if (ray.union_vertices.size() != 1)
            throw DomainError("ray shares " + std::to_string(ray.union_vertices.size()) +
                              " vertices with the root cycle; counting is undefined");
        std::int64_t nonsat = 0;
        for (const std::string& a : ray.arrows)
            if (!saturated_arrows.count(a)) ++nonsat;
        switch (ray.relation_kind) {
            case UnionRelationKind::InternalCCW:
                s_ccw += nonsat;
                k_cw += ray.saturated_cycles;
                break;
            case UnionRelationKind::InternalCW:
                s_cw += nonsat;
                k_ccw += ray.saturated_cycles;
                break;
            case UnionRelationKind::ExternalCCW:
                s_ccw += nonsat;
                k_ccw += ray.saturated_cycles;
                break;
            case UnionRelationKind::ExternalCW:
                s_cw += nonsat;
                k_cw += ray.saturated_cycles;
                break;
            case UnionRelationKind::None:
                throw DomainError(
                    "ray without union relations: orientation class is not determined");
        }
    }

    std::int64_t r_cw = 0, r_ccw = 0;
    for (const InternalRelation& ir : d.internal_relations) (ir.clockwise ? r_cw : r_ccw)++;

    // Side 1 is the counterclockwise side.
    BranchParams raw(m, s_ccw, k_ccw, s_cw, k_cw, r_cw - r_ccw);
    return raw.canonical();
}

// ---------------------------------------------------------------------------
// Classifiers

ClassificationReport is_m_cluster_tilted_atilde(const BoundQuiver& bq, int m) {
    if (!is_connected(bq)) throw DomainError("classification needs a connected quiver");
    ClassificationReport report;

    GentleReport g = is_gentle(bq);
    {
        ConditionStatus c{"gentle", g.gentle, true, ""};
        if (!g.gentle) {
            c.detail = "violated:";
            for (const auto& v : g.violations) c.detail += " [" + v.condition + " at " + v.where + "]";
        }
        report.conditions.push_back(c);
    }
    if (!g.gentle) {
        report.verdict = false;
        return report;
    }

    bool a_holds = is_algebra_with_root(bq, m);
    report.conditions.push_back(
        {"7.16(a)", a_holds, true,
         a_holds ? "algebra with a root cycle" : "saturated-cycle count differs from chi - 1"});

    bool b_holds = true;
    {
        for (const auto& cycle : underlying_simple_cycles(bq)) {
            bool oriented_forward = true, oriented_backward = true;
            for (const CycleStep& s : cycle) {
                oriented_forward = oriented_forward && s.forward;
                oriented_backward = oriented_backward && !s.forward;
            }
            if (!oriented_forward && !oriented_backward) {
                b_holds = false;
                break;
            }
            std::vector<std::string> arrows;
            for (const CycleStep& s : cycle) arrows.push_back(s.arrow);
            if (oriented_backward) std::reverse(arrows.begin(), arrows.end());
            if (static_cast<int>(arrows.size()) != m + 2) {
                b_holds = false;
                break;
            }
            for (std::size_t i = 0; i < arrows.size(); ++i)
                if (!bq.in_ideal(arrows[i], arrows[(i + 1) % arrows.size()])) {
                    b_holds = false;
                    break;
                }
            if (!b_holds) break;
        }
        report.conditions.push_back({"7.16(b)", b_holds, !a_holds,
                                     b_holds ? "every cycle is m-saturated"
                                             : "a cycle is not m-saturated"});
    }

    int chains = max_consecutive_relations_outside(bq, m);
    bool c_holds = chains <= m - 1;
    report.conditions.push_back({"7.16(c)", c_holds, true,
                                 std::to_string(chains) + " consecutive relations outside "
                                 "saturated cycles (allowed: " + std::to_string(m - 1) + ")"});

    bool d_holds = true;
    bool d_applicable = false;
    if (a_holds) {
        RootDecomposition d = decompose(bq, m);
        std::int64_t cw = 0, ccw = 0;
        for (const auto& ir : d.internal_relations) (ir.clockwise ? cw : ccw)++;
        if (cw + ccw > 0) {
            d_applicable = true;
            d_holds = ((cw - ccw) % m) == 0;
        }
    }
    report.conditions.push_back({"7.16(d)", d_holds, d_applicable,
                                 d_applicable ? "internal relation balance modulo m"
                                              : "no internal relations"});

    report.verdict = (a_holds || b_holds) && c_holds && d_holds;
    return report;
}

ClassificationReport is_atilde_branched(const BoundQuiver& bq, int m) {
    if (!is_connected(bq)) throw DomainError("classification needs a connected quiver");
    ClassificationReport report;

    bool a_holds = is_gentle(bq).gentle && is_algebra_with_root(bq, m);
    report.conditions.push_back({"1.2(a)", a_holds, true,
                                 a_holds ? "algebra with a root cycle"
                                         : "not a gentle algebra with a root cycle"});
    if (!a_holds) {
        report.conditions.push_back({"1.2(b)", false, false, "not evaluated"});
        report.conditions.push_back({"1.2(c)", false, false, "not evaluated"});
        report.verdict = false;
        return report;
    }

    RootDecomposition d = decompose(bq, m);
    std::int64_t r_cw = 0, r_ccw = 0;
    for (const auto& ir : d.internal_relations) (ir.clockwise ? r_cw : r_ccw)++;

    bool b_holds = ((r_cw - r_ccw) % m) == 0;
    report.conditions.push_back(
        {"1.2(b)", b_holds, true,
         "relation balance " + std::to_string(r_cw) + " vs " + std::to_string(r_ccw) +
             " modulo m (informational, not part of the verdict)"});

    std::int64_t r = r_cw >= r_ccw ? r_cw - r_ccw : r_ccw - r_cw;
    bool c_holds = true;
    std::string c_detail = "no internal relation excess";
    if (r > 0) {
        if (m == 1) {
            c_holds = false;
            c_detail = "relation excess with m = 1 admits no run decomposition";
        } else {
            std::int64_t alpha = r / (m - 1), beta = r % (m - 1);
            std::int64_t eps = beta == 0 ? alpha - 1 : alpha;
            std::int64_t required = r + 1 + eps;
            FreeArrowCount f = free_arrows(bq, m, d);
            std::int64_t have = r_cw > r_ccw ? f.cw : f.ccw;
            c_holds = have >= required;
            c_detail = "needs " + std::to_string(required) + " free arrows on the " +
                       (r_cw > r_ccw ? "clockwise" : "counterclockwise") + " side, has " +
                       std::to_string(have);
        }
    }
    report.conditions.push_back({"1.2(c)", c_holds, r > 0, c_detail});

    report.verdict = a_holds && c_holds;
    return report;
}

// ---------------------------------------------------------------------------
// Closed forms

AGInvariant phi_from_params(const BranchParams& p) {
    std::int64_t first = p.m * p.k1 + p.s1 + p.r;
    std::int64_t second = p.m * p.k2 + p.s2 - p.r;
    if (first < 0 || second < 0)
        throw DomainError("phi would have a negative coordinate for " + to_string(p));
    AGInvariant phi;
    phi.add(first, p.s1);
    phi.add(second, p.s2);
    phi.add(0, p.m + 2, p.k1 + p.k2);
    return phi;
}

std::int64_t theorem_a_dims(const BranchParams& p, std::int64_t n, const FieldSpec& k) {
    ensure_field(k);
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (n == 0) {
        bool special = (p.r == 1 && p.k1 == 0 && p.s1 == 0) || (p.r == -1 && p.k2 == 0 && p.s2 == 0);
        return special ? 2 : 1;
    }
    if (n == 1) {
        if (p.k1 == 0 && p.k2 == 0 && p.s1 == 1 && p.s2 == 1) return 3;
        if ((p.r == 0 && p.s1 == 1 && p.k1 == 0) || (p.r == 0 && p.s2 == 1 && p.k2 == 0))
            return p.k1 + p.k2 + 2;
        return p.k1 + p.k2 + 1;
    }
    std::int64_t base = p.m == 1 ? 0 : 1;
    std::int64_t modulus = k.characteristic == 2 ? p.m + 2 : std::lcm<std::int64_t>(p.m + 2, 2);
    std::int64_t rem = n % modulus;
    return (rem == 0 || rem == 1) ? base + p.k1 + p.k2 : base;
}

std::int64_t theorem_a_dims_proof_faithful(const BranchParams& p, std::int64_t n,
                                           const FieldSpec& k) {
    AGInvariant phi = phi_from_params(p);
    return hh_dim(phi, 1, 1 + p.k1 + p.k2, n, k);
}

std::vector<DiscrepancyEntry> theorem_a_discrepancy(const BranchParams& p, const FieldSpec& k,
                                                    std::int64_t max_n) {
    std::vector<DiscrepancyEntry> out;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        std::int64_t stated = theorem_a_dims(p, n, k);
        std::int64_t faithful = theorem_a_dims_proof_faithful(p, n, k);
        if (stated != faithful) out.push_back({n, stated, faithful});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normal forms

Feasibility normal_form_feasible(const BranchParams& raw) {
    BranchParams p = raw.canonical();
    if (p.r > 0) {
        if (p.m == 1)
            return {false, "relation runs of length at most m - 1 = 0 cannot hold any relation"};
        std::int64_t alpha = p.r / (p.m - 1), beta = p.r % (p.m - 1);
        std::int64_t eps = beta == 0 ? alpha - 1 : alpha;
        std::int64_t required = p.r + 1 + eps;
        if (p.s2 < required)
            return {false, "needs " + std::to_string(required) +
                               " free clockwise arrows, has " + std::to_string(p.s2)};
    }
    if (p.s1 + p.k1 + p.s2 + p.k2 < 2) return {false, "the root cycle would be a loop"};
    if (p.s1 + p.k1 == 0 && p.r == 0)
        return {false, "an oriented root cycle needs at least one relation"};
    return {true, ""};
}

BoundQuiver generate_normal_form(const BranchParams& raw) {
    BranchParams p = raw.canonical();
    Feasibility feasible = normal_form_feasible(p);
    if (!feasible.ok) throw DomainError("infeasible normal form " + to_string(p) + ": " +
                                        feasible.reason);

    const std::int64_t a2 = p.s2 + p.k2;  // clockwise side
    const std::int64_t a1 = p.s1 + p.k1;  // counterclockwise side

    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    vertices.push_back({"v0"});
    const std::string far_end = a1 > 0 ? "vw" : "v0";
    if (a1 > 0) vertices.push_back({"vw"});

    auto path_vertex = [&](const std::string& prefix, std::int64_t i, std::int64_t count) {
        if (i == 0) return std::string("v0");
        if (i == count) return far_end;
        return prefix + std::to_string(i);
    };

    for (std::int64_t i = 1; i < a2; ++i) vertices.push_back({"vc" + std::to_string(i)});
    for (std::int64_t i = 1; i < a1; ++i) vertices.push_back({"va" + std::to_string(i)});

    std::vector<std::string> cw_names, ccw_names;
    for (std::int64_t i = 0; i < a2; ++i) {
        std::string name = "cw" + std::to_string(i);
        arrows.push_back({name, path_vertex("vc", i, a2), path_vertex("vc", i + 1, a2)});
        cw_names.push_back(name);
    }
    for (std::int64_t i = 0; i < a1; ++i) {
        std::string name = "ccw" + std::to_string(i);
        arrows.push_back({name, path_vertex("va", i, a1), path_vertex("va", i + 1, a1)});
        ccw_names.push_back(name);
    }

    // Relation runs of length m - 1 packed from the start of the free
    // clockwise path, one relation-free composition between runs.
    std::int64_t placed = 0;
    for (std::int64_t i = 0; i + 1 < p.s2 && placed < p.r; ++i) {
        if (p.m >= 2 && (i % p.m) != p.m - 1) {
            relations.push_back({cw_names[i], cw_names[i + 1]});
            ++placed;
        }
    }
    if (placed != p.r)
        throw DomainError("internal error: relation placement failed for " + to_string(p));

    // Saturated cycles share the arrows after the free ones of their side.
    auto attach_cycle = [&](const std::string& shared, const std::string& arrow_prefix,
                            const std::string& vertex_prefix, std::int64_t j) {
        Arrow base;
        for (const Arrow& a : arrows)
            if (a.name == shared) base = a;
        std::string prev_vertex = base.target;
        std::string prev_arrow = shared;
        for (int i = 0; i <= p.m; ++i) {
            std::string an = arrow_prefix + std::to_string(j) + "_" + std::to_string(i);
            std::string vn = i == p.m
                                 ? base.source
                                 : vertex_prefix + std::to_string(j) + "_" + std::to_string(i + 1);
            if (i != p.m) vertices.push_back({vn});
            arrows.push_back({an, prev_vertex, vn});
            relations.push_back({prev_arrow, an});
            prev_vertex = vn;
            prev_arrow = an;
        }
        relations.push_back({prev_arrow, shared});
    };
    for (std::int64_t j = 0; j < p.k2; ++j)
        attach_cycle(cw_names[p.s2 + j], "satc", "wc", j);
    for (std::int64_t j = 0; j < p.k1; ++j)
        attach_cycle(ccw_names[p.s1 + j], "sata", "wa", j);

    std::ostringstream name;
    name << "nf_m" << p.m << "_s" << p.s1 << "_" << p.k1 << "_" << p.s2 << "_" << p.k2 << "_r"
         << p.r;
    return BoundQuiver(name.str(), std::move(vertices), std::move(arrows), std::move(relations));
}

}  // namespace qgentle
