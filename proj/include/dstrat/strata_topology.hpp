#pragma once

#include "dstrat/polyroots.hpp"
#include "dstrat/rational.hpp"
#include "dstrat/region_model.hpp"

#include <string>
#include <vector>

namespace dstrat {

// Number of connected components of stratum `index`: a product of multiset
// coefficients C(b0 + k - 1, k). Throws std::invalid_argument when a positive
// index entry meets an empty stratum.
BigInt component_count(const TheoryTopology& topology, const StabilityIndex& index);

// u-th Betti number of stratum `index`.
BigInt betti(const TheoryTopology& topology, const StabilityIndex& index, int u);
// Betti numbers for u = 0 .. ambient.
std::vector<BigInt> betti_vector(const TheoryTopology& topology, const StabilityIndex& index);

constexpr int kSeriesCap = 64;

// Coefficients of (1 + x t)^b1 / (1 - t)^b0 up to t^n, obtained by truncated
// series multiplication. Entry [w][v] is the x^v coefficient of t^w, i.e. b_v of
// the w-th symmetric power. Throws std::invalid_argument if n > kSeriesCap.
std::vector<std::vector<BigInt>> poincare_series_oracle(int b0, int b1, int n);

struct ComponentFactor {
    int component = 0;  // index within its stratum
    int b1 = 0;
    int lambda = 1;     // multiplicity, >= 1
    friend bool operator==(const ComponentFactor&, const ComponentFactor&) = default;
};

// One connected component of a stratum: the roots in each stratum are
// distributed over that stratum's components.
struct ComponentSpec {
    std::vector<ComponentFactor> s, ss, un;
    const std::vector<ComponentFactor>& operator[](StratumKind k) const;
    std::vector<ComponentFactor>& operator[](StratumKind k);
    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

// Per-component b1 list of a stratum; inferred when b0 == 1 or b1 == 0.
// Throws std::invalid_argument when the list is needed but absent.
std::vector<int> component_b1_list(const StratumBetti& b, StratumKind which);

// All components of stratum `index`. Within a stratum the distributions come
// in descending lexicographic order of the multiplicity vector, e.g. (2,0),
// (1,1), (0,2).
std::vector<ComponentSpec> enumerate_components(const TheoryTopology& topology, const StabilityIndex& index);
std::vector<ComponentSpec> enumerate_components(const StabilityTheory& t, const StabilityIndex& index);

// Product of a torus, torus skeleta T^n_q (the union of the q-dimensional
// coordinate subtori of T^n) and bouquets of at least two circles. An empty
// product is a point.
struct HomotopyExpr {
    int torus_dim = 0;
    std::vector<std::pair<int, int>> skeleta;  // (q, n), 1 < q < n, sorted
    std::vector<int> bouquets;                 // circle counts >= 2, descending
    bool is_point() const { return torus_dim == 0 && skeleta.empty() && bouquets.empty(); }
    std::string to_string() const;
    friend bool operator==(const HomotopyExpr&, const HomotopyExpr&) = default;
};

HomotopyExpr homotopy_type(const ComponentSpec& spec);

// Z^rank times a product of free groups of the listed ranks (each >= 2, descending).
struct GroupDescriptor {
    int free_abelian_rank = 0;
    std::vector<int> free_factors;
    std::string to_string() const;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor fundamental_group(const ComponentSpec& spec);
// Group read off a homotopy expression atom by atom.
GroupDescriptor fundamental_group(const HomotopyExpr& expr);

// Homeomorphism type of a stratum when the semistable set is a circle:
// R^(2(k+m)) for l = 0, otherwise a D^(l-1) bundle over S^1 times R^(2(k+m)),
// orientable exactly when l is odd.
struct CircleBoundaryType {
    int l = 0;
    int euclidean_dim = 0;
    int disc_dim = 0;
    bool has_circle = false;
    bool orientable = true;
    std::string description;
    // Betti numbers of the described space, padded to length ambient + 1.
    std::vector<BigInt> betti(int ambient) const;
};

CircleBoundaryType homeomorphism_type_circle_boundary(const StabilityIndex& index);

// Subspace arrangement of a finite stable set of r points. Elements are the
// multisubsets of {1..r} with cardinality in [q, n]; a cardinality-c element
// is a codimension-c subspace. Edges are cover relations of multiset
// inclusion (one element added).
struct PolePoset {
    int r = 0, n = 0, q = 0;
    // counts[c - q] = C(r + c - 1, c)
    std::vector<BigInt> counts;
    std::vector<std::vector<int>> elements;  // sorted multisets
    std::vector<std::pair<int, int>> cover_edges;
    bool is_chain() const;
    bool is_antichain() const { return cover_edges.empty(); }
};

// Throws std::invalid_argument unless 1 <= q <= n and r >= 1, or when the
// poset would exceed max_elements.
PolePoset pole_placement_poset(int r, int n, int q, std::size_t max_elements = 200000);

// Stratum (k,l,m) with k+l+m = r < n of the degree-n theory near infinity is
// homeomorphic to stratum (k,l,m) of the monic theory on the finite plane.
struct LocalStratumInfo {
    StabilityIndex monic_index;
    int roots_at_infinity = 0;
    TheoryTopology plane_topology;
    BigInt components;
    std::vector<BigInt> betti;  // u = 0 .. k+l+m
};

// Uses the theory's plane topology (punctured_topology for projective
// theories, topology for monic ones).
LocalStratumInfo local_stratum_info(const StabilityTheory& t, const StabilityIndex& index, int ambient);

}  // namespace dstrat
