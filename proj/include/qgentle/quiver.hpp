// Bound quivers with quadratic monomial relations: data model, text format,
// validation and the basic cycle/relation combinatorics everything else
// builds on.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgentle {

// Raised on malformed input text; line/column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Raised when a structural invariant of a quiver value is broken.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's precondition fails (non-gentle input, etc.).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct Vertex {
    std::string id;
};

struct Arrow {
    std::string name;
    std::string source;
    std::string target;
};

// The length-2 path first*second with t(first) = s(second).
struct Relation {
    std::string first;
    std::string second;
};

// Immutable after construction; the constructor checks structural invariants
// (unique names, existing references, composability of relations, no
// duplicate relation) and throws ValidationError on failure.
class BoundQuiver {
public:
    BoundQuiver(std::string name, std::vector<Vertex> vertices, std::vector<Arrow> arrows,
                std::vector<Relation> relations);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }

    bool has_vertex(const std::string& id) const;
    bool has_arrow(const std::string& name) const;
    const Arrow& arrow(const std::string& name) const;
    bool in_ideal(const std::string& first, const std::string& second) const;

    // Sorted arrow names leaving / entering a vertex.
    const std::vector<std::string>& arrows_out(const std::string& vertex) const;
    const std::vector<std::string>& arrows_in(const std::string& vertex) const;

    // Sorted successors b with (a,b) a relation, and predecessors dually.
    const std::vector<std::string>& relation_successors(const std::string& arrow) const;
    const std::vector<std::string>& relation_predecessors(const std::string& arrow) const;

    bool has_loops() const;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::map<std::string, Arrow> arrow_by_name_;
    std::set<std::pair<std::string, std::string>> relation_set_;
    std::map<std::string, std::vector<std::string>> out_, in_;
    std::map<std::string, std::vector<std::string>> rel_succ_, rel_pred_;
};

struct GentleViolation {
    std::string condition;  // "G1", "G2" or "G3"
    std::string where;      // vertex or arrow name
    std::string detail;
};

struct GentleReport {
    bool gentle = false;
    std::vector<GentleViolation> violations;
    explicit operator bool() const { return gentle; }
};

// Text format (see README): `quiver`, `vertex`, `arrow`, `rel` lines,
// `#` comments, whitespace-separated tokens.
BoundQuiver parse_bound_quiver(const std::string& text);
std::string serialize_bound_quiver(const BoundQuiver& bq);

// G1: at most two arrows in and out of every vertex.
// G2: per arrow, at most one composable continuation/predecessor outside I.
// G3: per arrow, at most one composable continuation/predecessor inside I.
GentleReport is_gentle(const BoundQuiver& bq);

// Throws DomainError if the report is negative.
void ensure_gentle(const BoundQuiver& bq);

// True iff no oriented cycle is relation-free, i.e. the path algebra
// modulo the ideal is finite dimensional.
bool is_admissible(const BoundQuiver& bq);

bool is_connected(const BoundQuiver& bq);

// chi(Q) = |Q1| - |Q0| + 1; requires a connected, nonempty quiver.
int euler_characteristic(const BoundQuiver& bq);

// Partition by underlying-graph connectivity, ordered by smallest vertex id.
std::vector<BoundQuiver> connected_components(const BoundQuiver& bq);

// All oriented cycles in which every cyclically consecutive composition is a
// relation, each rotated to start at its lexicographically smallest arrow,
// sorted by that arrow. (The relation graph of a gentle quiver has in/out
// degree at most one, so these cycles are pairwise arrow-disjoint.)
std::vector<std::vector<std::string>> relation_cycles(const BoundQuiver& bq);

// The relation cycles of length exactly m + 2.
std::vector<std::vector<std::string>> find_saturated_cycles(const BoundQuiver& bq, int m);

// Longest chain of consecutive relations (relations sharing an arrow and
// pointing the same way) among relations not lying on an m-saturated cycle.
int max_consecutive_relations_outside(const BoundQuiver& bq, int m);

// One edge of an undirected simple cycle: the arrow and whether the
// traversal follows its direction.
struct CycleStep {
    std::string arrow;
    bool forward = true;
};

// All simple cycles of the underlying multigraph (parallel and antiparallel
// arrow pairs count as 2-cycles, loops as 1-cycles), each listed once.
std::vector<std::vector<CycleStep>> underlying_simple_cycles(const BoundQuiver& bq);

}  // namespace qgentle
