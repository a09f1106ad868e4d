#pragma once

#include "dstrat/polyroots.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dstrat {

// f(h) = base + h1 * g1 + ... + hr * gr with r in {1, 2}. Coefficients are
// ascending; the base may be the zero polynomial.
struct AffineFamily {
    std::vector<Complex> base;
    std::vector<std::vector<Complex>> generators;

    int parameter_count() const { return static_cast<int>(generators.size()); }
    // Largest degree among base and generators.
    int ambient_degree() const;
};

// Throws std::invalid_argument unless 1 <= r <= 2 and some generator is nonzero.
AffineFamily make_affine_family(std::vector<Complex> base, std::vector<std::vector<Complex>> generators);

// A0 + h1 * A1 + ... + hr * Ar, all of one size.
struct MatrixFamily {
    std::vector<SquareMatrix> matrices;
    int parameter_count() const { return static_cast<int>(matrices.size()) - 1; }
    int size() const { return matrices.empty() ? 0 : matrices.front().size(); }
};

// Throws std::invalid_argument unless 2 <= count <= 3 and sizes agree.
MatrixFamily make_matrix_family(std::vector<SquareMatrix> matrices);

struct FamilyMember {
    // Empty when every coefficient vanishes.
    std::optional<ComplexPoly> poly;
    // ambient_degree - degree after trimming.
    int degree_drop = 0;
};

// Leading coefficients with |c| <= 1e-12 * scale are dropped, where scale is
// the largest sum |base_k| + sum_i |h_i| |g_ik|. Throws if h has the wrong size.
FamilyMember evaluate_family(const AffineFamily& fam, const std::vector<double>& h);

constexpr int kMaxScanResolution = 4096;

// Cells are numbered i along h1 and j along h2, row-major with j = 0 at y0.
// One-parameter families scan [x0, x1] with a single row.
struct DecompositionMap {
    Window window;
    int nx = 0, ny = 0;
    int parameter_count = 0;
    int ambient_degree = 0;
    // Empty for degenerate cells (zero member, degree drop in monic mode, or a
    // root-finder failure).
    std::vector<std::optional<StabilityIndex>> cells;
    // Region label per cell: 0 for degenerate cells, otherwise 1.. in order of
    // first appearance. Equal-index 4-neighbours share a label.
    std::vector<int> labels;
    int region_count = 0;

    double h1(int i) const { return window.x0 + (i + 0.5) * (window.x1 - window.x0) / nx; }
    double h2(int j) const { return parameter_count == 1 ? 0.0 : window.y0 + (j + 0.5) * (window.y1 - window.y0) / ny; }
    std::size_t at(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
};

// Throws std::invalid_argument for a degenerate window, a resolution outside
// [1, 4096] or a theory/family mismatch. threads = 0 uses every core.
DecompositionMap scan(const StabilityTheory& t, const AffineFamily& fam, const Window& w, int resolution,
                      unsigned threads = 0);
// Cells use char_poly of the pencil member; ambient degree is the matrix size.
DecompositionMap scan(const StabilityTheory& t, const MatrixFamily& fam, const Window& w, int resolution,
                      unsigned threads = 0);

struct RegionInfo {
    int label = 0;
    StabilityIndex index;
    long cells = 0;
    int i0 = 0, i1 = 0, j0 = 0, j1 = 0;  // inclusive cell bounds
    // Cells with a semistable root; these form the raster boundary set.
    bool boundary() const { return index.l > 0; }
};

// Sorted by cell count descending, then label.
std::vector<RegionInfo> extract_regions(const DecompositionMap& map);

// "pgm": P2 with gray = label, 0 on boundary and degenerate cells, top row
// first. "csv": header then one row "i,j,h1,h2,k,l,m,label" per cell (k, l, m
// empty on degenerate cells). "json": structured dump. Throws
// std::invalid_argument on other formats.
std::string export_map(const DecompositionMap& map, std::string_view format);

}  // namespace dstrat
