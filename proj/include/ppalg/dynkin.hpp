#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppalg/quiver.hpp"

namespace ppalg {

// Extended Dynkin diagram with its minimal positive imaginary root delta and
// a distinguished extending vertex (always index 0, delta = 1).  The quiver
// carries the catalog's fixed orientation; only the underlying graph matters
// for the theory.
struct DynkinModel {
    std::string label;
    Quiver quiver;
    std::vector<long> delta;
    int extending = 0;

    long delta_of(const std::string& vertex_id) const {
        return delta.at(quiver.vertex_index(vertex_id));
    }
    // Unique vertex of maximal delta, when it is unique.
    std::optional<int> center_vertex() const;
};

// Labels: "A~n" (n >= 1), "D~n" (n >= 4), "E~6", "E~7", "E~8".
// "A~0" (a single vertex with a loop edge) is outside the supported catalog
// and is refused.
DynkinModel dynkin_catalog(const std::string& label);

// Star-shaped quiver for arm degrees (d_1, ..., d_n), all d_i >= 2:
// central vertex "c" and arm vertices "i.j" (j = 1 .. d_i - 1), with arrows
// "ai.j" pointing one step toward the center.
Quiver star_quiver(const std::vector<int>& degrees);

// Star quiver plus the weight determined by root lists alpha_i and mu:
// lambda_c = mu and lambda_{i.j} = alpha_{i,j-1} - alpha_{i,j}.  Each root
// list must start with 0 and have length >= 2 (the degree of P_i).
struct StarInstance {
    Quiver quiver;
    Weight weight;
    std::vector<int> degrees;
};
StarInstance star_instance(const std::vector<std::vector<Rational>>& roots, const Rational& mu);

// Type A chain on vertices "1" .. "n" with arrows "ai": i -> i+1.
Quiver chain_quiver(int n);

// Undirected multigraph with optional vertex labels and an optional pinned
// root, used for diagram matching.
struct LabeledGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // symmetric multiplicity matrix
    std::vector<long> label;           // empty means unlabeled
    int root = -1;                     // -1 means no pinned vertex
};

LabeledGraph underlying_graph(const Quiver& q);

// Bijection f with adj_a[u][v] == adj_b[f(u)][f(v)], respecting labels and
// pinned roots when present.  Returns std::nullopt if none exists.
std::optional<std::vector<int>> find_graph_isomorphism(const LabeledGraph& a,
                                                       const LabeledGraph& b);

} // namespace ppalg
