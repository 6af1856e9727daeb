// Thread decomposition of a gentle bound quiver: maximal relation-free paths
// (permitted threads), maximal all-relation paths (forbidden threads),
// full-relation cycles (critical cycles), and the sigma/epsilon sign
// apparatus that drives the pairing walk.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgentle/quiver.hpp"

namespace qgentle {

enum class ThreadKind { Permitted, Forbidden };

struct Thread {
    ThreadKind kind = ThreadKind::Permitted;
    std::vector<std::string> arrows;  // empty for a trivial thread
    std::string start;                // = base for trivial threads
    std::string end;

    bool trivial() const { return arrows.empty(); }
    const std::string& base() const { return start; }
    int length() const { return static_cast<int>(arrows.size()); }
};

// Oriented cycle in which every cyclically consecutive composition is a
// relation; stored rotated to its lexicographically smallest arrow.
struct CriticalCycle {
    std::vector<std::string> arrows;
    int length() const { return static_cast<int>(arrows.size()); }
};

// Signs live on arrows and on trivial threads (one slot per vertex and
// thread kind). Nontrivial threads read sigma from their first arrow and
// epsilon from their last.
class SignAssignment {
public:
    int sigma_arrow(const std::string& arrow) const { return at(sigma_arrow_, arrow); }
    int epsilon_arrow(const std::string& arrow) const { return at(epsilon_arrow_, arrow); }
    int sigma_trivial(const std::string& vertex, ThreadKind kind) const {
        return at(kind == ThreadKind::Permitted ? sigma_triv_perm_ : sigma_triv_forb_, vertex);
    }
    int epsilon_trivial(const std::string& vertex, ThreadKind kind) const {
        return at(kind == ThreadKind::Permitted ? epsilon_triv_perm_ : epsilon_triv_forb_, vertex);
    }

    int sigma(const Thread& t) const {
        return t.trivial() ? sigma_trivial(t.base(), t.kind) : sigma_arrow(t.arrows.front());
    }
    int epsilon(const Thread& t) const {
        return t.trivial() ? epsilon_trivial(t.base(), t.kind) : epsilon_arrow(t.arrows.back());
    }

    std::map<std::string, int> sigma_arrow_, epsilon_arrow_;
    std::map<std::string, int> sigma_triv_perm_, epsilon_triv_perm_;
    std::map<std::string, int> sigma_triv_forb_, epsilon_triv_forb_;

private:
    static int at(const std::map<std::string, int>& m, const std::string& key);
};

// Maximal paths of the relation-free composition graph plus one trivial
// permitted thread at each vertex with at most one arrow in, at most one
// out, whose (in, out) composition (if any) is relation-free. Every arrow
// lies in exactly one permitted thread. Throws DomainError when the
// composition graph has an oriented relation-free cycle (inadmissible).
std::vector<Thread> permitted_threads(const BoundQuiver& bq);

// Maximal paths of the relation graph (cycles extracted separately as
// CriticalCycle values) plus one trivial forbidden thread at each vertex
// with the degree condition whose (in, out) composition is a relation.
std::pair<std::vector<Thread>, std::vector<CriticalCycle>> forbidden_threads(
    const BoundQuiver& bq);

// A sign assignment satisfying:
//   - distinct arrows with equal source have opposite sigma,
//   - distinct arrows with equal target have opposite epsilon,
//   - sigma(b) = -epsilon(a) whenever t(a) = s(b) and ab is not a relation,
//   - at every vertex the permitted and forbidden threads ending there pair
//     off with opposite epsilon, and dually for starts with sigma.
// Free choices are resolved pseudo-randomly from the seed.
SignAssignment assign_signs(const BoundQuiver& bq, unsigned seed);

// Stable one-line-per-thread text form for goldens and debugging.
std::string dump_threads(const std::vector<Thread>& threads,
                         const std::vector<CriticalCycle>& cycles);

}  // namespace qgentle
