#pragma once

#include "dstrat/region_model.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dstrat {

// Edge (i, j) means the closure of vertex i's stratum meets vertex j's stratum.
struct Digraph {
    std::vector<std::string> vertices;
    std::set<std::pair<int, int>> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    // Index of a label or -1.
    int find(const std::string& label) const;
    int add_vertex(std::string label);
    // Throws std::out_of_range for unknown vertices.
    void add_edge(int from, int to);
    void add_edge(const std::string& from, const std::string& to);
    bool has_edge(int from, int to) const { return edges.count({from, to}) > 0; }
    bool has_edge(const std::string& from, const std::string& to) const;
    // Non-loop edges as label pairs.
    std::set<std::pair<std::string, std::string>> labelled_edges(bool include_loops = false) const;
};

// Vertex label of the point at infinity in local digraphs.
inline const std::string kInfinityLabel = "inf";

// Multiplicities indexed by the base digraph's vertices.
using MultisetVertex = std::vector<int>;

// Edge multiplicities of an integer flow; loops included.
using FlowWitness = std::map<std::pair<int, int>, int>;

struct FlowResult {
    bool adjacent = false;
    std::optional<FlowWitness> witness;
};

// Integer transportation feasibility: out-sums equal tau, in-sums equal eta,
// flow only along edges of g. Decided exactly by max-flow. Throws
// std::invalid_argument if the totals or sizes differ.
FlowResult adjacent_flow(const Digraph& g, const MultisetVertex& tau, const MultisetVertex& eta);

// Tries every assignment of the n source roots to outgoing edges. n <= 6.
bool brute_force_adjacent(const Digraph& g, const MultisetVertex& tau, const MultisetVertex& eta);

// All size-n multisets over g's vertices, in descending lexicographic order of
// the multiplicity vector.
std::vector<MultisetVertex> enumerate_multisets(int vertex_count, int n);

// "{2s}", "{s,ss}", "{s,inf}"
std::string multiset_label(const Digraph& base, const MultisetVertex& m);

struct SymProduct {
    Digraph graph;  // vertex k is multisets[k]
    std::vector<MultisetVertex> multisets;
};

constexpr std::size_t kSymProductVertexCap = 1000000;

// Throws std::invalid_argument when n < 1 or the vertex count exceeds the cap.
SymProduct sym_product_digraph(const Digraph& g, int n, unsigned threads = 0);

struct DigraphCheck {
    bool valid = true;
    std::vector<std::string> reasons;
};

// Realizability of a theory adjacency digraph on labels among s, ss, un.
DigraphCheck validate_theory_digraph(const Digraph& g);
// Same for local digraphs on labels among s, ss, un, inf.
DigraphCheck validate_local_digraph(const Digraph& g);

struct SamplerOptions {
    int grid = 128;
    // Probe radius as a fraction of the window width; the radius / 8 circle
    // is probed as well and an edge needs both.
    double probe_fraction = 2e-4;
    int directions = 16;
};

// Digraph of the theory's strata from sampling. Points placed on the leaf
// curves, their crossings and isolated zeros are probed on small circles
// (fixed directions plus exact curve crossings); a point of stratum j whose
// probes meet stratum i at both radii gives the edge (i, j). Infinity is
// probed through the dual theory around 0.
Digraph numeric_adjacency(const StabilityTheory& t, const SamplerOptions& opt = {});

// Declared adjacency when present (vertices are the strata with b0 > 0 in the
// declared topology, or all strata seen by the sampler when the topology is
// undeclared); otherwise numeric_adjacency. Loops at every vertex.
Digraph base_adjacency(const StabilityTheory& t);

// Base digraph plus an inf vertex with a loop and edges into it from the
// theory's unbounded strata, then its n-th symmetric product.
Digraph local_base_digraph(const StabilityTheory& t);
SymProduct local_adjacency(const StabilityTheory& t, int n, unsigned threads = 0);

// Deterministic DOT text: vertices and edges sorted by label.
std::string dot_export(const Digraph& g);

}  // namespace dstrat
