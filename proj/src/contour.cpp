#include "contour.hpp"

#include <algorithm>
#include <cmath>

namespace dstrat::detail {

std::vector<LeafClass> leaf_classes(const RegionExpr& region) {
    const auto leaves = region.leaves();
    std::vector<LeafClass> classes;
    for (std::size_t id = 0; id < leaves.size(); ++id) {
        bool placed = false;
        for (auto& c : classes)
            if (leaves[id]->poly.is_proportional_to(c.representative->poly)) {
                c.members[id] = true;
                placed = true;
                break;
            }
        if (!placed) {
            LeafClass c{std::vector<bool>(leaves.size(), false), leaves[id]};
            c.members[id] = true;
            classes.push_back(std::move(c));
        }
    }
    return classes;
}

namespace {

constexpr int kTypeH = 0, kTypeV = 1, kTypeNode = 2, kTypeCross = 3;

std::int64_t make_key(int cls, int type, std::int64_t index) {
    return (static_cast<std::int64_t>(cls) << 44) | (static_cast<std::int64_t>(type) << 42) | index;
}

struct Endpoint {
    double x, y;
    std::int64_t key;
    bool border;
};

struct Segment {
    Endpoint a, b;
    int cls;
    std::vector<std::pair<double, Endpoint>> splits;
};

StratumKind classify_forced(const StabilityTheory& t, double x, double y, const std::vector<bool>& forced) {
    if (eval_membership_forced(t.region, x, y, false, t.boundary_tolerance, forced)) return StratumKind::Stable;
    if (eval_membership_forced(t.region, x, y, true, t.boundary_tolerance, forced)) return StratumKind::Semistable;
    return StratumKind::Unstable;
}

}  // namespace

TraceResult trace_curves(const StabilityTheory& t, const CellGrid& grid) {
    const int n = grid.n;
    const auto classes = leaf_classes(t.region);
    const std::size_t nc = classes.size();
    std::vector<std::vector<double>> vals(nc, std::vector<double>(static_cast<std::size_t>(n) * n));
    for (std::size_t c = 0; c < nc; ++c)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                vals[c][static_cast<std::size_t>(i + j * n)] = classes[c].representative->compiled(grid.cx(i), grid.cy(j));

    auto node_ep = [&](int i, int j) {
        return Endpoint{grid.cx(i), grid.cy(j), make_key(0, kTypeNode, i + static_cast<std::int64_t>(j) * n),
                        i == 0 || j == 0 || i == n - 1 || j == n - 1};
    };
    // Crossing on the lattice edge from node (i0,j0) to its right or upper neighbour.
    auto edge_ep = [&](int c, int i0, int j0, bool horizontal, double fa, double fb) {
        const double tpar = fa / (fa - fb);
        const int i1 = horizontal ? i0 + 1 : i0, j1 = horizontal ? j0 : j0 + 1;
        if (tpar <= 0) return node_ep(i0, j0);
        if (tpar >= 1) return node_ep(i1, j1);
        Endpoint e;
        e.x = grid.cx(i0) + tpar * (grid.cx(i1) - grid.cx(i0));
        e.y = grid.cy(j0) + tpar * (grid.cy(j1) - grid.cy(j0));
        if (horizontal) {
            e.key = make_key(c, kTypeH, i0 + static_cast<std::int64_t>(j0) * (n - 1));
            e.border = j0 == 0 || j0 == n - 1;
        } else {
            e.key = make_key(c, kTypeV, i0 + static_cast<std::int64_t>(j0) * n);
            e.border = i0 == 0 || i0 == n - 1;
        }
        return e;
    };

    TraceResult out;
    std::int64_t cross_counter = 0;
    std::vector<Segment> segs;
    for (int j = 0; j + 1 < n; ++j)
        for (int i = 0; i + 1 < n; ++i) {
            segs.clear();
            for (std::size_t c = 0; c < nc; ++c) {
                const auto& v = vals[c];
                const double f00 = v[static_cast<std::size_t>(i + j * n)];
                const double f10 = v[static_cast<std::size_t>(i + 1 + j * n)];
                const double f11 = v[static_cast<std::size_t>(i + 1 + (j + 1) * n)];
                const double f01 = v[static_cast<std::size_t>(i + (j + 1) * n)];
                const bool p00 = f00 >= 0, p10 = f10 >= 0, p11 = f11 >= 0, p01 = f01 >= 0;
                const int ci = static_cast<int>(c);
                // Edge crossings in order bottom, right, top, left.
                std::vector<std::pair<int, Endpoint>> xs;
                if (p00 != p10) xs.push_back({0, edge_ep(ci, i, j, true, f00, f10)});
                if (p10 != p11) xs.push_back({1, edge_ep(ci, i + 1, j, false, f10, f11)});
                if (p01 != p11) xs.push_back({2, edge_ep(ci, i, j + 1, true, f01, f11)});
                if (p00 != p01) xs.push_back({3, edge_ep(ci, i, j, false, f00, f01)});
                if (xs.size() == 2) {
                    segs.push_back({xs[0].second, xs[1].second, ci, {}});
                } else if (xs.size() == 4) {
                    const double fc = classes[c].representative->compiled(0.5 * (grid.cx(i) + grid.cx(i + 1)),
                                                                          0.5 * (grid.cy(j) + grid.cy(j + 1)));
                    if ((fc >= 0) == p00) {
                        // Centre joins the corners 00 and 11; cut off corners 10 and 01.
                        segs.push_back({xs[0].second, xs[1].second, ci, {}});
                        segs.push_back({xs[2].second, xs[3].second, ci, {}});
                    } else {
                        segs.push_back({xs[3].second, xs[0].second, ci, {}});
                        segs.push_back({xs[1].second, xs[2].second, ci, {}});
                    }
                }
            }
            if (segs.empty()) continue;
            for (std::size_t a = 0; a < segs.size(); ++a)
                for (std::size_t b = a + 1; b < segs.size(); ++b) {
                    if (segs[a].cls == segs[b].cls) continue;
                    const Segment& s = segs[a];
                    const Segment& q = segs[b];
                    const double rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
                    const double qx = q.b.x - q.a.x, qy = q.b.y - q.a.y;
                    const double den = rx * qy - ry * qx;
                    if (den == 0) continue;
                    const double wx = q.a.x - s.a.x, wy = q.a.y - s.a.y;
                    const double u = (wx * qy - wy * qx) / den;
                    const double v = (wx * ry - wy * rx) / den;
                    constexpr double eps = 1e-12;
                    if (u <= eps || u >= 1 - eps || v <= eps || v >= 1 - eps) continue;
                    Endpoint e{s.a.x + u * rx, s.a.y + u * ry, make_key(0, kTypeCross, cross_counter++), false};
                    segs[a].splits.push_back({u, e});
                    segs[b].splits.push_back({v, e});
                }
            for (Segment& s : segs) {
                std::vector<std::pair<double, Endpoint>> pts;
                pts.push_back({0.0, s.a});
                std::sort(s.splits.begin(), s.splits.end(),
                          [](const auto& l, const auto& r) { return l.first < r.first; });
                for (auto& p : s.splits) pts.push_back(p);
                pts.push_back({1.0, s.b});
                for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
                    const Endpoint& a = pts[k].second;
                    const Endpoint& b = pts[k + 1].second;
                    if (a.key == b.key) continue;
                    const double mx = 0.5 * (a.x + b.x), my = 0.5 * (a.y + b.y);
                    CurvePiece piece{a.x,      a.y,      b.x,   b.y, a.key, b.key, a.border, b.border, s.cls,
                                     classify_forced(t, mx, my, classes[static_cast<std::size_t>(s.cls)].members)};
                    out.pieces.push_back(piece);
                    out.cell_of.push_back(i + j * (n - 1));
                }
            }
        }
    return out;
}

}  // namespace dstrat::detail
