#include "contour.hpp"
#include "dstrat/region_model.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace dstrat {

namespace {

using detail::CellGrid;
using detail::UnionFind;

// Relabels union-find roots to 1..count in first-seen order.
std::vector<int> compact_labels(const std::vector<long>& roots, int* count) {
    std::unordered_map<long, int> ids;
    std::vector<int> out(roots.size(), 0);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (roots[k] < 0) continue;
        auto [it, inserted] = ids.try_emplace(roots[k], static_cast<int>(ids.size()) + 1);
        out[k] = it->second;
    }
    *count = static_cast<int>(ids.size());
    return out;
}

// Open stratum: 4-connected components of the member cells, and the Euler
// characteristic of the complex whose vertices are member cells, edges are
// joined 4-adjacent member pairs and squares are 2x2 blocks with all four
// edges joined. Two member cells are not joined when a leaf curve crosses
// between them at a point outside the stratum (e.g. a semistable line
// separating two stable half-planes). With compactification a ring of member
// cells is added around the raster and capped by one extra disk (infinity).
TopologyEstimate open_stratum(const StabilityTheory& t, StratumKind stratum, const CellGrid& grid, bool compactify) {
    const int n = grid.n;
    const int pad = compactify ? 1 : 0;
    const int m = n + 2 * pad;
    std::vector<char> in(static_cast<std::size_t>(m) * m, compactify ? 1 : 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            in[static_cast<std::size_t>((i + pad) + (j + pad) * m)] =
                classify_point(t, std::complex<double>(grid.cx(i), grid.cy(j))) == stratum;

    const auto classes = detail::leaf_classes(t.region);
    std::vector<std::vector<double>> vals(classes.size(), std::vector<double>(static_cast<std::size_t>(n) * n));
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                vals[c][static_cast<std::size_t>(i + j * n)] = classes[c].representative->compiled(grid.cx(i), grid.cy(j));
    // Inner-grid cells (i0,j0) and (i1,j1), both members.
    auto separated = [&](int i0, int j0, int i1, int j1) {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const double fa = vals[c][static_cast<std::size_t>(i0 + j0 * n)];
            const double fb = vals[c][static_cast<std::size_t>(i1 + j1 * n)];
            if ((fa >= 0) == (fb >= 0)) continue;
            const double u = fa / (fa - fb);
            const double x = grid.cx(i0) + u * (grid.cx(i1) - grid.cx(i0));
            const double y = grid.cy(j0) + u * (grid.cy(j1) - grid.cy(j0));
            const bool strict = eval_membership_forced(t.region, x, y, false, t.boundary_tolerance, classes[c].members);
            const bool relaxed = eval_membership_forced(t.region, x, y, true, t.boundary_tolerance, classes[c].members);
            const StratumKind k = strict ? StratumKind::Stable : relaxed ? StratumKind::Semistable : StratumKind::Unstable;
            if (k != stratum) return true;
        }
        return false;
    };

    auto at = [&](int i, int j) { return in[static_cast<std::size_t>(i + j * m)] != 0; };
    auto inner = [&](int i, int j) { return i >= pad && j >= pad && i < n + pad && j < n + pad; };
    // joined_right / joined_up for padded coordinates.
    std::vector<char> right(static_cast<std::size_t>(m) * m, 0), up(static_cast<std::size_t>(m) * m, 0);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            if (!at(i, j)) continue;
            const std::size_t id = static_cast<std::size_t>(i + j * m);
            if (i + 1 < m && at(i + 1, j))
                right[id] = !(inner(i, j) && inner(i + 1, j) && separated(i - pad, j - pad, i + 1 - pad, j - pad));
            if (j + 1 < m && at(i, j + 1))
                up[id] = !(inner(i, j) && inner(i, j + 1) && separated(i - pad, j - pad, i - pad, j + 1 - pad));
        }

    UnionFind uf(static_cast<std::size_t>(m) * m);
    long v = 0, e = 0, f = 0;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            if (!at(i, j)) continue;
            ++v;
            const std::size_t id = static_cast<std::size_t>(i + j * m);
            if (right[id]) {
                ++e;
                uf.unite(id, id + 1);
            }
            if (up[id]) {
                ++e;
                uf.unite(id, id + static_cast<std::size_t>(m));
            }
            if (right[id] && up[id] && i + 1 < m && j + 1 < m && up[id + 1] &&
                right[id + static_cast<std::size_t>(m)])
                ++f;
        }
    long chi = v - e + f + (compactify ? 1 : 0);

    std::vector<long> roots(static_cast<std::size_t>(n) * n, -1);
    std::map<std::size_t, int> all_roots;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            if (at(i, j)) all_roots.emplace(uf.find(static_cast<std::size_t>(i + j * m)), 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (at(i + pad, j + pad))
                roots[static_cast<std::size_t>(i + j * n)] =
                    static_cast<long>(uf.find(static_cast<std::size_t>((i + pad) + (j + pad) * m)));
    TopologyEstimate est;
    est.resolution = n;
    int inner_count = 0;
    est.component_labels = compact_labels(roots, &inner_count);
    est.b0 = static_cast<int>(all_roots.size());
    est.b1 = static_cast<int>(est.b0 - chi);
    return est;
}

// Semistable stratum: graph of traced curve pieces; b1 = E - V + C. With
// compactification every piece endpoint on the lattice border is joined to
// one extra vertex standing for infinity.
TopologyEstimate curve_stratum(const StabilityTheory& t, const CellGrid& grid, bool compactify) {
    const auto traced = detail::trace_curves(t, grid);
    std::unordered_map<std::int64_t, std::size_t> vid;
    UnionFind uf;
    auto vertex = [&](std::int64_t key) {
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        std::size_t id = uf.add();
        vid.emplace(key, id);
        return id;
    };
    long edges = 0;
    std::vector<std::pair<std::size_t, int>> piece_vertex;
    std::vector<std::size_t> border;
    for (std::size_t k = 0; k < traced.pieces.size(); ++k) {
        const auto& p = traced.pieces[k];
        if (p.stratum != StratumKind::Semistable) continue;
        const std::size_t a = vertex(p.va), b = vertex(p.vb);
        uf.unite(a, b);
        ++edges;
        if (p.a_on_border) border.push_back(a);
        if (p.b_on_border) border.push_back(b);
        piece_vertex.push_back({a, traced.cell_of[k]});
    }
    if (compactify) {
        const std::size_t inf = uf.add();
        std::sort(border.begin(), border.end());
        border.erase(std::unique(border.begin(), border.end()), border.end());
        for (std::size_t b : border) {
            uf.unite(inf, b);
            ++edges;
        }
    }
    const long verts = static_cast<long>(uf.size());
    std::map<std::size_t, int> comps;
    for (std::size_t k = 0; k < uf.size(); ++k) comps.emplace(uf.find(k), 0);

    TopologyEstimate est;
    est.resolution = grid.n;
    est.b0 = static_cast<int>(comps.size());
    est.b1 = static_cast<int>(edges - verts + est.b0);
    std::vector<long> roots(static_cast<std::size_t>(grid.n) * grid.n, -1);
    for (const auto& [v, cell] : piece_vertex) {
        const int ci = cell % (grid.n - 1), cj = cell / (grid.n - 1);
        roots[static_cast<std::size_t>(ci + cj * grid.n)] = static_cast<long>(uf.find(v));
    }
    int count = 0;
    est.component_labels = compact_labels(roots, &count);
    return est;
}

}  // namespace

TopologyEstimate estimate_stratum_topology(const StabilityTheory& t, StratumKind stratum, const Window& w,
                                           int resolution) {
    if (resolution < 16) throw std::invalid_argument("topology estimate needs resolution >= 16");
    if (resolution > 8192) throw std::invalid_argument("topology estimate resolution above 8192");
    if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw std::invalid_argument("degenerate window");
    const CellGrid grid{w, resolution};
    const bool compactify = t.mode == TheoryMode::Projective && t.infinity_stratum == stratum;
    if (stratum == StratumKind::Semistable) return curve_stratum(t, grid, compactify);
    return open_stratum(t, stratum, grid, compactify);
}

}  // namespace dstrat
