#pragma once

#include "dstrat/bivar_poly.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dstrat {

enum class StratumKind { Stable = 0, Semistable = 1, Unstable = 2 };

// "s", "ss", "un"
std::string short_name(StratumKind k);
std::string long_name(StratumKind k);
StratumKind parse_stratum(std::string_view text);
constexpr StratumKind kAllStrata[3] = {StratumKind::Stable, StratumKind::Semistable, StratumKind::Unstable};

// Projective theories live on the Riemann sphere and track the point at
// infinity; monic theories live on the finite plane.
enum class TheoryMode { Projective, Monic };

std::string to_string(TheoryMode m);

enum class Relation { Less, LessEq, Equal };

std::string to_string(Relation r);

struct RegionLeaf {
    BivarPoly poly;  // in x = Re z, y = Im z; never zero
    Relation rel;
    CompiledPoly compiled;
};

// Boolean combination of polynomial sign conditions. Immutable; copies share the tree.
class RegionExpr {
  public:
    enum class Kind { And, Or, Not, Leaf };

    static RegionExpr leaf(BivarPoly poly, Relation rel);
    static RegionExpr all_of(std::vector<RegionExpr> children);
    static RegionExpr any_of(std::vector<RegionExpr> children);
    static RegionExpr negation(RegionExpr child);

    Kind kind() const;
    const std::vector<RegionExpr>& children() const;
    const RegionLeaf& leaf_data() const;

    // Leaves in depth-first order; indices into this list are leaf ids.
    std::vector<const RegionLeaf*> leaves() const;
    bool has_equality_leaf() const;
    // Same shape with every leaf polynomial replaced by fn(poly).
    template <class Fn>
    RegionExpr map_leaves(Fn&& fn) const;

    std::string to_string() const;

  private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit RegionExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

struct RegionExpr::Node {
    Kind kind;
    std::vector<RegionExpr> children;
    std::optional<RegionLeaf> leaf;
};

template <class Fn>
RegionExpr RegionExpr::map_leaves(Fn&& fn) const {
    if (kind() == Kind::Leaf) return leaf(fn(leaf_data().poly), leaf_data().rel);
    std::vector<RegionExpr> kids;
    for (const auto& c : children()) kids.push_back(c.map_leaves(fn));
    if (kind() == Kind::Not) return negation(std::move(kids.front()));
    return kind() == Kind::And ? all_of(std::move(kids)) : any_of(std::move(kids));
}

// Membership in the region (relaxed = false) or in its closure surrogate
// (relaxed = true). Leaf values with |f| <= tol count as zero. Relaxation
// follows polarity: under an even number of negations '<' becomes '<=', under
// an odd number '<=' becomes '<' and '=' becomes false, so a negated condition
// relaxes to the closure of its complement.
bool eval_membership(const RegionExpr& expr, double x, double y, bool relaxed, double tol);

// Same, with the listed leaves (by depth-first id) evaluated as exactly zero.
bool eval_membership_forced(const RegionExpr& expr, double x, double y, bool relaxed, double tol,
                            const std::vector<bool>& forced_zero);

// A point of the Riemann sphere.
struct SpherePoint {
    bool infinite = false;
    std::complex<double> z{};
    static SpherePoint infinity() { return {true, {}}; }
    static SpherePoint finite(std::complex<double> v) { return {false, v}; }
};

struct StratumBetti {
    int b0 = 0;
    int b1 = 0;
    std::optional<std::vector<int>> component_b1;
    friend bool operator==(const StratumBetti&, const StratumBetti&) = default;
};

struct TheoryTopology {
    StratumBetti s, ss, un;
    const StratumBetti& operator[](StratumKind k) const;
    StratumBetti& operator[](StratumKind k);
    friend bool operator==(const TheoryTopology&, const TheoryTopology&) = default;
};

struct Window {
    double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
    friend bool operator==(const Window&, const Window&) = default;
};

using StratumEdge = std::pair<StratumKind, StratumKind>;

struct StabilityTheory {
    std::string name;
    RegionExpr region = RegionExpr::leaf(BivarPoly::x(), Relation::Less);
    TheoryMode mode = TheoryMode::Projective;
    // Required in projective mode, absent in monic mode.
    std::optional<StratumKind> infinity_stratum;
    // Stratum of z = 0 when it is not given by the region (set by dualization,
    // where 0 is the image of infinity).
    std::optional<StratumKind> origin_stratum;
    TheoryTopology topology;
    // Strata topology with infinity removed; used for local (birth/death) strata.
    std::optional<TheoryTopology> punctured_topology;
    // Declared non-loop edges of the stratum adjacency digraph.
    std::optional<std::vector<StratumEdge>> adjacency;
    // Strata whose closure contains infinity (for the local adjacency digraph).
    std::optional<std::vector<StratumKind>> unbounded;
    double boundary_tolerance = 1e-9;
    Window window;
};

StratumKind classify_point(const StabilityTheory& t, const SpherePoint& p);
StratumKind classify_point(const StabilityTheory& t, std::complex<double> z);
// As classify_point, with every tolerance-dependent decision made at tolerance 0.
StratumKind classify_point_exact_sign(const StabilityTheory& t, std::complex<double> z);

// Names: hurwitz, schur, hyperbolicity, aperiodicity, fenichel, hurwitz_sector,
// schur_diamond, annulus (params r1, r2), poles (params re1, im1, re2, im2, ...),
// ride_quality. Throws std::invalid_argument on unknown names or bad parameters.
StabilityTheory builtin_theory(std::string_view name, const std::vector<double>& params = {},
                               TheoryMode mode = TheoryMode::Projective);
std::vector<std::string> builtin_theory_names();

// Theory of reciprocal roots: leaves are pulled back through z -> 1/z and the
// mode is toggled.
StabilityTheory dualize(const StabilityTheory& t);

struct TopologyEstimate {
    int b0 = 0;
    int b1 = 0;
    int resolution = 0;
    // Per-cell component label (row-major, 0 = not in the stratum).
    std::vector<int> component_labels;
};

// Raster/contour estimate of a stratum's Betti numbers on a window. Open strata
// are rasterized at cell centres; the semistable stratum is traced as a curve
// graph. In projective mode the stratum holding infinity is compactified by
// gluing the outside of the window to a single point.
TopologyEstimate estimate_stratum_topology(const StabilityTheory& t, StratumKind stratum, const Window& w,
                                           int resolution);

struct ValidationReport {
    std::vector<std::string> warnings;
    // One line per numeric spot check that was run or skipped.
    std::vector<std::string> checks;
};

// Throws std::invalid_argument on structural problems; numeric disagreements
// between declared and estimated topology are reported as warnings.
ValidationReport validate_theory(const StabilityTheory& t, int resolution = 256);

// Structural checks only; throws std::invalid_argument.
void check_theory_structure(const StabilityTheory& t);

}  // namespace dstrat
