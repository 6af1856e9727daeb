// Structure theory specific to type A-tilde: root-cycle decomposition,
// the parameters (s1, k1, s2, k2, r), recognition predicates, the closed
// form of the AG-invariant, the dimension formulas and their
// proof-faithful counterpart, and the normal-form generator.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qgentle/ag_invariant.hpp"
#include "qgentle/hochschild.hpp"
#include "qgentle/quiver.hpp"

namespace qgentle {

// Side 1 is the counterclockwise side, side 2 the clockwise one. The swap
// (s1,k1,s2,k2,r) -> (s2,k2,s1,k1,-r) describes the same algebra with the
// opposite orientation; the canonical form has r > 0, or r = 0 with
// (s1,k1) <= (s2,k2) lexicographically.
struct BranchParams {
    int m = 1;
    std::int64_t s1 = 0, k1 = 0;
    std::int64_t s2 = 0, k2 = 0;
    std::int64_t r = 0;

    BranchParams() = default;
    BranchParams(int m_, std::int64_t s1_, std::int64_t k1_, std::int64_t s2_, std::int64_t k2_,
                 std::int64_t r_);

    BranchParams swapped() const { return BranchParams(m, s2, k2, s1, k1, -r); }
    BranchParams canonical() const;
    bool operator==(const BranchParams&) const = default;
};

std::string to_string(const BranchParams& p);

enum class AttachmentKind {
    SharedArrowCW,   // saturated cycle sharing exactly one clockwise root arrow
    SharedArrowCCW,  // ... one counterclockwise root arrow
    OnRay,           // lives on a ray, classified through the ray
    Unsupported,     // shares >= 2 arrows or only vertices with the root
};

struct SaturatedAttachment {
    std::vector<std::string> cycle;
    AttachmentKind kind = AttachmentKind::Unsupported;
    std::string shared_arrow;  // for the SharedArrow kinds
};

enum class UnionRelationKind { InternalCW, InternalCCW, ExternalCW, ExternalCCW, None };

struct RayInfo {
    std::vector<std::string> arrows;
    std::vector<std::string> vertices;
    std::vector<std::string> union_vertices;  // intersection with the root cycle
    UnionRelationKind relation_kind = UnionRelationKind::None;
    int saturated_cycles = 0;  // m-saturated cycles lying on the ray
};

struct InternalRelation {
    Relation relation;
    bool clockwise = false;
    bool union_relation = false;  // attaches a ray
};

struct RootArrow {
    std::string name;
    bool clockwise = false;
    bool saturated = false;  // lies on an m-saturated cycle
};

struct RootDecomposition {
    std::vector<RootArrow> root;  // in traversal order
    std::vector<SaturatedAttachment> saturated;
    std::vector<RayInfo> rays;
    std::vector<InternalRelation> internal_relations;
};

struct FreeArrowCount {
    std::int64_t cw = 0;
    std::int64_t ccw = 0;
};

// Gentle, connected, loop-free, with exactly chi(Q) - 1 m-saturated cycles
// and chi(Q) >= 1.
bool is_algebra_with_root(const BoundQuiver& bq, int m);

// Fixes the root cycle (shortest non-saturated simple cycle, ties broken by
// sorted arrow names, oriented so its smallest arrow is clockwise), the set
// of saturated cycles meeting it in >= 2 vertices, and the rays left after
// the deletion step.
RootDecomposition decompose(const BoundQuiver& bq, int m);

// Counts of Definition-style parameters relative to the decomposition,
// swap-normalized. Throws DomainError when some arrow or cycle matches no
// counting clause (input outside the supported family).
BranchParams extract_params(const BoundQuiver& bq, int m);

FreeArrowCount free_arrows(const BoundQuiver& bq, int m, const RootDecomposition& d);

struct ConditionStatus {
    std::string code;
    bool holds = false;
    bool applicable = true;
    std::string detail;
};

struct ClassificationReport {
    bool verdict = false;
    std::vector<ConditionStatus> conditions;
};

// Recognition of connected components of m-cluster tilted algebras of type
// A-tilde: gentle, (root or all cycles saturated), bounded relation chains
// outside saturated cycles, and balanced internal relations modulo m.
ClassificationReport is_m_cluster_tilted_atilde(const BoundQuiver& bq, int m);

// Membership test for the derived-equivalence class representatives. The
// balance condition (b) is evaluated and reported but does not enter the
// verdict; (a) and the free-arrow condition (c) decide.
ClassificationReport is_atilde_branched(const BoundQuiver& bq, int m);

// phi = (m*k1+s1+r, s1)* + (m*k2+s2-r, s2)* + (k1+k2).(0, m+2)*.
AGInvariant phi_from_params(const BranchParams& p);

// The dimension formulas as printed (including the 1 - delta_{1,m} constant
// term in degrees >= 2).
std::int64_t theorem_a_dims(const BranchParams& p, std::int64_t n, const FieldSpec& k);

// The same dimensions computed through the divisor-sum formulas applied to
// phi_from_params; in degrees >= 2 the constant term is the multiplicity of
// (1, n) in phi.
std::int64_t theorem_a_dims_proof_faithful(const BranchParams& p, std::int64_t n,
                                           const FieldSpec& k);

struct DiscrepancyEntry {
    std::int64_t n = 0;
    std::int64_t stated = 0;
    std::int64_t proof_faithful = 0;
};

// Degrees up to max_n where the two evaluations differ.
std::vector<DiscrepancyEntry> theorem_a_discrepancy(const BranchParams& p, const FieldSpec& k,
                                                    std::int64_t max_n);

// Whether the generator accepts the tuple; the message names the violated
// requirement.
struct Feasibility {
    bool ok = false;
    std::string reason;
};
Feasibility normal_form_feasible(const BranchParams& p);

// Deterministic normal-form bound quiver: a root cycle made of a clockwise
// and a counterclockwise directed path, relation runs of length <= m-1
// packed from the start of the clockwise free path, and saturated cycles
// each sharing exactly one root arrow after the free arrows of their side.
BoundQuiver generate_normal_form(const BranchParams& p);

}  // namespace qgentle
