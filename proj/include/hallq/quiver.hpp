#pragma once
#include <string>
#include <utility>
#include <vector>

#include "hallq/error.hpp"

namespace hallq {

// Vertices and arrows are referred to by their declaration index; the
// user-facing names from the input file are kept alongside.
struct Arrow {
    std::string name;
    int source = 0, target = 0;
};

// Arrows in application order: arrows[0] is applied first. The classical
// right-to-left composite "ba" is stored as {a, b}.
struct Path {
    int source = 0, target = 0;
    std::vector<int> arrows;

    int length() const { return (int)arrows.size(); }
    bool operator==(const Path&) const = default;
};

struct Relation {
    std::vector<std::pair<long long, Path>> terms;
    int source = 0, target = 0;
};

struct Quiver {
    std::vector<std::string> vertex_names;
    std::vector<Arrow> arrows;

    int num_vertices() const { return (int)vertex_names.size(); }
    int vertex_index(const std::string& name) const; // -1 if absent
    int arrow_index(const std::string& name) const;
    // -1 if no arrow i->j exists (validation guarantees at most one)
    int arrow_between(int i, int j) const;
};

struct BoundQuiver {
    Quiver quiver;
    std::vector<Relation> relations;
};

// Parse and validate the line-based description:
//   vertex <id>
//   arrow <id> <src> <tgt>
//   relation <coeff>*<arrow,arrow,...> [ + <coeff>*<arrows> ... ]
// '#' starts a comment. Throws hq_error on any violation of the bound
// quiver invariants (loops, multiple arrows, oriented cycles, malformed or
// endpoint-mixed relations).
BoundQuiver parse_quiver(const std::string& text);

// Canonical text form; parse_quiver(serialize_quiver(bq)) reproduces bq.
std::string serialize_quiver(const BoundQuiver& bq);

// All paths from i to j including the trivial path when i = j; finite
// because the quiver is acyclic. Ordered by length, then lexicographically
// by arrow indices.
std::vector<Path> enumerate_paths(const Quiver& q, int i, int j);

// r(i,j) = number of relations with source i and target j, as a flat
// n*n row-major table.
std::vector<int> relation_counts(const BoundQuiver& bq);

} // namespace hallq
