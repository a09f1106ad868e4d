#include "dstrat/adjacency.hpp"

#include "contour.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <deque>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dstrat {

int Digraph::find(const std::string& label) const {
    const auto it = std::find(vertices.begin(), vertices.end(), label);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int Digraph::add_vertex(std::string label) {
    if (find(label) >= 0) throw std::invalid_argument("duplicate vertex '" + label + "'");
    vertices.push_back(std::move(label));
    return vertex_count() - 1;
}

void Digraph::add_edge(int from, int to) {
    if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count())
        throw std::out_of_range("edge references a missing vertex");
    edges.insert({from, to});
}

void Digraph::add_edge(const std::string& from, const std::string& to) {
    const int a = find(from), b = find(to);
    if (a < 0 || b < 0) throw std::out_of_range("edge (" + from + "," + to + ") references a missing vertex");
    add_edge(a, b);
}

bool Digraph::has_edge(const std::string& from, const std::string& to) const {
    const int a = find(from), b = find(to);
    return a >= 0 && b >= 0 && has_edge(a, b);
}

std::set<std::pair<std::string, std::string>> Digraph::labelled_edges(bool include_loops) const {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : edges)
        if (include_loops || a != b) out.insert({vertices[a], vertices[b]});
    return out;
}

namespace {

void check_pair(const Digraph& g, const MultisetVertex& tau, const MultisetVertex& eta) {
    if (static_cast<int>(tau.size()) != g.vertex_count() || static_cast<int>(eta.size()) != g.vertex_count())
        throw std::invalid_argument("multiset vertices must have one entry per digraph vertex");
    long st = 0, se = 0;
    for (int v : tau) {
        if (v < 0) throw std::invalid_argument("multiplicities must be non-negative");
        st += v;
    }
    for (int v : eta) {
        if (v < 0) throw std::invalid_argument("multiplicities must be non-negative");
        se += v;
    }
    if (st != se) throw std::invalid_argument("multiset vertices have different totals");
}

// Edmonds-Karp on a dense capacity matrix; the graphs here have at most a few
// dozen nodes.
class MaxFlow {
  public:
    explicit MaxFlow(int n) : n_(n), cap_(static_cast<std::size_t>(n) * n, 0), flow_(cap_.size(), 0) {}
    void add(int a, int b, long c) { cap_[idx(a, b)] += c; }
    long run(int s, int t) {
        long total = 0;
        std::vector<int> prev(n_);
        for (;;) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[s] = s;
            std::deque<int> q{s};
            while (!q.empty() && prev[t] < 0) {
                const int u = q.front();
                q.pop_front();
                for (int v = 0; v < n_; ++v)
                    if (prev[v] < 0 && residual(u, v) > 0) {
                        prev[v] = u;
                        q.push_back(v);
                    }
            }
            if (prev[t] < 0) return total;
            long push = std::numeric_limits<long>::max();
            for (int v = t; v != s; v = prev[v]) push = std::min(push, residual(prev[v], v));
            for (int v = t; v != s; v = prev[v]) {
                flow_[idx(prev[v], v)] += push;
                flow_[idx(v, prev[v])] -= push;
            }
            total += push;
        }
    }
    long flow(int a, int b) const { return flow_[idx(a, b)]; }

  private:
    int n_;
    std::vector<long> cap_, flow_;
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
    long residual(int a, int b) const { return cap_[idx(a, b)] - flow_[idx(a, b)]; }
};

}  // namespace

FlowResult adjacent_flow(const Digraph& g, const MultisetVertex& tau, const MultisetVertex& eta) {
    check_pair(g, tau, eta);
    const int v = g.vertex_count();
    long n = 0;
    for (int x : tau) n += x;
    // Nodes: source, v sources-side copies, v target-side copies, sink.
    const int src = 0, sink = 2 * v + 1;
    MaxFlow mf(2 * v + 2);
    for (int i = 0; i < v; ++i) {
        mf.add(src, 1 + i, tau[i]);
        mf.add(1 + v + i, sink, eta[i]);
    }
    for (const auto& [a, b] : g.edges) mf.add(1 + a, 1 + v + b, n);
    FlowResult r;
    if (mf.run(src, sink) != n) return r;
    r.adjacent = true;
    FlowWitness w;
    for (const auto& [a, b] : g.edges)
        if (const long f = mf.flow(1 + a, 1 + v + b); f > 0) w[{a, b}] = static_cast<int>(f);
    r.witness = std::move(w);
    return r;
}

bool brute_force_adjacent(const Digraph& g, const MultisetVertex& tau, const MultisetVertex& eta) {
    check_pair(g, tau, eta);
    std::vector<int> slots;
    for (int i = 0; i < g.vertex_count(); ++i) slots.insert(slots.end(), tau[i], i);
    if (slots.size() > 6) throw std::invalid_argument("brute-force adjacency is limited to 6 roots");
    std::vector<std::vector<int>> out(g.vertex_count());
    for (const auto& [a, b] : g.edges) out[a].push_back(b);
    std::vector<int> hits(g.vertex_count(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
        if (k == slots.size()) return hits == eta;
        for (int b : out[slots[k]]) {
            ++hits[b];
            const bool ok = rec(k + 1);
            --hits[b];
            if (ok) return true;
        }
        return false;
    };
    return rec(0);
}

std::vector<MultisetVertex> enumerate_multisets(int vertex_count, int n) {
    std::vector<MultisetVertex> out;
    if (vertex_count <= 0) return out;
    MultisetVertex cur;
    std::function<void(int)> rec = [&](int left) {
        if (static_cast<int>(cur.size()) == vertex_count - 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int c = left; c >= 0; --c) {
            cur.push_back(c);
            rec(left - c);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::string multiset_label(const Digraph& base, const MultisetVertex& m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < base.vertex_count(); ++i) {
        if (m[i] == 0) continue;
        if (!first) s += ',';
        first = false;
        if (m[i] > 1) s += std::to_string(m[i]);
        s += base.vertices[i];
    }
    return s + "}";
}

namespace {

// Every eta reachable from tau by sending each root along one outgoing edge.
std::set<MultisetVertex> reachable_targets(const std::vector<std::vector<int>>& out, const MultisetVertex& tau) {
    std::set<MultisetVertex> result;
    MultisetVertex eta(tau.size(), 0);
    // Distribute tau[i] roots of vertex i over its out-neighbours.
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t k, int left) {
        if (i == tau.size()) {
            result.insert(eta);
            return;
        }
        if (k == out[i].size()) {
            if (left == 0) rec(i + 1, 0, i + 1 < tau.size() ? tau[i + 1] : 0);
            return;
        }
        const int b = out[i][k];
        for (int c = left; c >= 0; --c) {
            eta[b] += c;
            rec(i, k + 1, left - c);
            eta[b] -= c;
        }
    };
    rec(0, 0, tau.empty() ? 0 : tau[0]);
    return result;
}

}  // namespace

SymProduct sym_product_digraph(const Digraph& g, int n, unsigned threads) {
    if (n < 1) throw std::invalid_argument("symmetric power must be at least 1");
    const BigInt count = binomial(static_cast<long>(g.vertex_count()) + n - 1, n);
    if (count > kSymProductVertexCap)
        throw std::invalid_argument("symmetric product would have " + count.str() + " vertices; the limit is " +
                                    std::to_string(kSymProductVertexCap));
    SymProduct sp;
    sp.multisets = enumerate_multisets(g.vertex_count(), n);
    std::map<MultisetVertex, int> id;
    for (const auto& m : sp.multisets) {
        id.emplace(m, static_cast<int>(sp.graph.vertices.size()));
        sp.graph.vertices.push_back(multiset_label(g, m));
    }
    std::vector<std::vector<int>> out(g.vertex_count());
    for (const auto& [a, b] : g.edges) out[a].push_back(b);

    std::vector<std::vector<int>> targets(sp.multisets.size());
    detail::parallel_for(sp.multisets.size(), threads, 64, [&](std::size_t k) {
        for (const auto& eta : reachable_targets(out, sp.multisets[k]))
            if (adjacent_flow(g, sp.multisets[k], eta).adjacent) targets[k].push_back(id.at(eta));
    });
    for (std::size_t k = 0; k < targets.size(); ++k)
        for (int b : targets[k]) sp.graph.edges.insert({static_cast<int>(k), b});
    return sp;
}

namespace {

bool weakly_connected(const Digraph& g) {
    if (g.vertex_count() <= 1) return true;
    detail::UnionFind uf(g.vertex_count());
    for (const auto& [a, b] : g.edges) uf.unite(a, b);
    for (int i = 1; i < g.vertex_count(); ++i)
        if (uf.find(i) != uf.find(0)) return false;
    return true;
}

DigraphCheck check_marked(const Digraph& g, bool local) {
    DigraphCheck c;
    auto fail = [&](std::string why) {
        c.valid = false;
        c.reasons.push_back(std::move(why));
    };
    const std::set<std::string> allowed = local ? std::set<std::string>{"s", "ss", "un", kInfinityLabel}
                                                : std::set<std::string>{"s", "ss", "un"};
    const std::size_t limit = allowed.size();
    if (g.vertices.size() > limit) fail("at most " + std::to_string(limit) + " vertices are allowed");
    std::set<std::string> seen;
    for (const auto& v : g.vertices) {
        if (!allowed.count(v)) fail("unknown vertex mark '" + v + "'");
        if (!seen.insert(v).second) fail("vertex mark '" + v + "' appears twice");
    }
    if (!c.valid) return c;

    for (int i = 0; i < g.vertex_count(); ++i)
        if (!g.has_edge(i, i)) fail("missing loop at vertex " + g.vertices[i]);
    if (!weakly_connected(g)) fail("digraph is not weakly connected");
    for (const auto& [a, b] : g.edges)
        if (a != b && g.vertices[b] == "un")
            fail("no ingoing edges at vertex un are allowed, found (" + g.vertices[a] + ",un)");
    if (seen.count("s") && seen.count("ss") && !g.has_edge("s", "ss")) fail("vertices s and ss need the edge (s,ss)");
    if (seen.count("ss") && !seen.count("s")) fail("vertex ss requires vertex s");
    if (local) {
        if (!seen.count(kInfinityLabel)) fail("vertex inf is required");
        for (const auto& [a, b] : g.edges)
            if (a != b && g.vertices[a] == kInfinityLabel)
                fail("no outgoing edges from inf are allowed, found (inf," + g.vertices[b] + ")");
    }
    return c;
}

}  // namespace

DigraphCheck validate_theory_digraph(const Digraph& g) { return check_marked(g, false); }
DigraphCheck validate_local_digraph(const Digraph& g) { return check_marked(g, true); }

namespace {

using Point = std::complex<double>;

std::vector<Point> unit_directions(int count) {
    std::vector<Point> d;
    for (int k = 0; k < count; ++k) {
        // Axis directions are exact so probes stay on coordinate lines.
        if ((4 * k) % count == 0) {
            static constexpr Point axes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            d.push_back(axes[(4 * k / count) % 4]);
        } else {
            d.push_back(std::polar(1.0, 2 * std::numbers::pi * k / count));
        }
    }
    return d;
}

// Newton steps toward the zero set of f along its gradient.
Point project(const CompiledPoly& f, Point p) {
    for (int it = 0; it < 12; ++it) {
        const double v = f(p.real(), p.imag());
        const double gx = f.grad_x(p.real(), p.imag()), gy = f.grad_y(p.real(), p.imag());
        const double g2 = gx * gx + gy * gy;
        if (v == 0 || g2 == 0) break;
        const Point step(v * gx / g2, v * gy / g2);
        p -= step;
        if (std::abs(step) < 1e-16 * (1 + std::abs(p))) break;
    }
    return p;
}

// Newton on the pair (f, g) = 0.
std::optional<Point> intersect(const CompiledPoly& f, const CompiledPoly& g, Point p, double reach) {
    const Point start = p;
    for (int it = 0; it < 30; ++it) {
        const double x = p.real(), y = p.imag();
        const double a = f.grad_x(x, y), b = f.grad_y(x, y), c = g.grad_x(x, y), d = g.grad_y(x, y);
        const double det = a * d - b * c;
        if (det == 0 || !std::isfinite(det)) return std::nullopt;
        const double fv = f(x, y), gv = g(x, y);
        const Point step((d * fv - b * gv) / det, (a * gv - c * fv) / det);
        p -= step;
        if (std::abs(p - start) > reach) return std::nullopt;
        if (std::abs(step) < 1e-15 * (1 + std::abs(p))) break;
    }
    return p;
}

// Critical point of f by Newton on the gradient; used to find isolated zeros
// of sign-definite leaves such as (x - a)^2 + (y - b)^2.
std::optional<Point> critical_point(const CompiledPoly& fx, const CompiledPoly& fy, Point p, double reach) {
    const Point start = p;
    for (int it = 0; it < 30; ++it) {
        const double x = p.real(), y = p.imag();
        const double a = fx.grad_x(x, y), b = fx.grad_y(x, y), c = fy.grad_x(x, y), d = fy.grad_y(x, y);
        const double det = a * d - b * c;
        if (det == 0 || !std::isfinite(det)) return std::nullopt;
        const double gx = fx(x, y), gy = fy(x, y);
        const Point step((d * gx - b * gy) / det, (a * gy - c * gx) / det);
        p -= step;
        if (std::abs(p - start) > reach) return std::nullopt;
        if (std::abs(step) < 1e-15 * (1 + std::abs(p))) break;
    }
    return p;
}

struct Samples {
    std::vector<Point> generic;  // grid centres; only witness that a stratum is nonempty
    std::vector<Point> special;  // points on curves, their crossings, isolated zeros, the origin
};

Samples sample_points(const StabilityTheory& t, int res) {
    const detail::CellGrid grid{t.window, res};
    Samples out;
    for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) out.generic.emplace_back(grid.cx(i), grid.cy(j));
    auto& pts = out.special;
    pts.emplace_back(0, 0);

    const auto classes = detail::leaf_classes(t.region);
    std::vector<CompiledPoly> rep;
    for (const auto& c : classes) rep.push_back(c.representative->compiled);
    const double cell = std::max(grid.hx(), grid.hy());

    const auto trace = detail::trace_curves(t, grid);
    for (const auto& pc : trace.pieces) {
        const CompiledPoly& f = rep[pc.leaf_class];
        pts.push_back(project(f, Point((pc.ax + pc.bx) / 2, (pc.ay + pc.by) / 2)));
        for (std::size_t k = 0; k < rep.size(); ++k) {
            if (static_cast<int>(k) == pc.leaf_class) continue;
            const double ga = rep[k](pc.ax, pc.ay), gb = rep[k](pc.bx, pc.by);
            if ((ga > 0 && gb > 0) || (ga < 0 && gb < 0)) continue;
            const double s = ga == gb ? 0.5 : ga / (ga - gb);
            const Point guess(pc.ax + s * (pc.bx - pc.ax), pc.ay + s * (pc.by - pc.ay));
            if (auto q = intersect(f, rep[k], guess, 2 * cell)) pts.push_back(*q);
        }
    }

    // Isolated zeros: local minima of |f| on the lattice, refined to critical points.
    const double zero_tol = t.boundary_tolerance > 0 ? t.boundary_tolerance / 16 : 1e-13;
    for (const auto& lc : classes) {
        const BivarPoly& poly = lc.representative->poly;
        const CompiledPoly fx(poly.derivative_x()), fy(poly.derivative_y());
        const CompiledPoly& f = lc.representative->compiled;
        std::vector<double> v(static_cast<std::size_t>(res) * res);
        for (int j = 0; j < res; ++j)
            for (int i = 0; i < res; ++i) v[static_cast<std::size_t>(j) * res + i] = std::abs(f(grid.cx(i), grid.cy(j)));
        for (int j = 0; j < res; ++j)
            for (int i = 0; i < res; ++i) {
                const double c = v[static_cast<std::size_t>(j) * res + i];
                bool is_min = true;
                for (int dj = -1; dj <= 1 && is_min; ++dj)
                    for (int di = -1; di <= 1; ++di) {
                        const int a = i + di, b = j + dj;
                        if ((di || dj) && a >= 0 && b >= 0 && a < res && b < res &&
                            v[static_cast<std::size_t>(b) * res + a] < c) {
                            is_min = false;
                            break;
                        }
                    }
                if (!is_min) continue;
                if (auto q = critical_point(fx, fy, Point(grid.cx(i), grid.cy(j)), 2 * cell))
                    if (std::abs(f(q->real(), q->imag())) <= zero_tol) pts.push_back(*q);
            }
    }
    return out;
}

// Strata met on the circle |q - p| = r: fixed directions plus every point
// where a leaf curve crosses the circle.
void probe_circle(const StabilityTheory& t, const std::vector<CompiledPoly>& curves, const std::vector<Point>& dirs,
                  Point p, double r, bool out[3]) {
    for (const Point& d : dirs) out[static_cast<int>(classify_point(t, p + r * d))] = true;
    constexpr int kSteps = 64;
    for (const CompiledPoly& f : curves) {
        auto at = [&](double a) { return p + r * Point(std::cos(a), std::sin(a)); };
        auto val = [&](double a) {
            const Point q = at(a);
            return f(q.real(), q.imag());
        };
        double a0 = 0, f0 = val(0);
        for (int k = 1; k <= kSteps; ++k) {
            const double a1 = 2 * std::numbers::pi * k / kSteps, f1 = val(a1);
            if ((f0 < 0) != (f1 < 0) || f1 == 0) {
                double lo = a0, hi = a1, flo = f0;
                for (int it = 0; it < 60 && hi - lo > 1e-16; ++it) {
                    const double mid = 0.5 * (lo + hi), fm = val(mid);
                    if ((fm < 0) == (flo < 0) && fm != 0) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                out[static_cast<int>(classify_point(t, at(hi)))] = true;
            }
            a0 = a1;
            f0 = f1;
        }
    }
}

std::vector<CompiledPoly> curve_polys(const StabilityTheory& t) {
    std::vector<CompiledPoly> c;
    for (const auto& lc : detail::leaf_classes(t.region)) c.push_back(lc.representative->compiled);
    return c;
}

// Strata met by every punctured neighbourhood of p (two radii must agree).
std::array<bool, 3> strata_near(const StabilityTheory& t, const std::vector<CompiledPoly>& curves,
                                const std::vector<Point>& dirs, Point p, double r) {
    bool big[3] = {}, small[3] = {};
    probe_circle(t, curves, dirs, p, r, big);
    probe_circle(t, curves, dirs, p, r / 8, small);
    return {big[0] && small[0], big[1] && small[1], big[2] && small[2]};
}

// Strata whose closure contains infinity: probes of the dual theory around 0.
std::array<bool, 3> strata_near_infinity(const StabilityTheory& t, const std::vector<Point>& dirs, double r) {
    StabilityTheory probe_theory = t;
    if (t.mode == TheoryMode::Monic) {
        // Only the region matters here; give the dual a point at infinity.
        probe_theory.mode = TheoryMode::Projective;
        probe_theory.infinity_stratum = StratumKind::Unstable;
    }
    const StabilityTheory d = dualize(probe_theory);
    return strata_near(d, curve_polys(d), dirs, Point(0, 0), r);
}

}  // namespace

Digraph numeric_adjacency(const StabilityTheory& t, const SamplerOptions& opt) {
    const auto dirs = unit_directions(opt.directions);
    const double width = std::max(t.window.x1 - t.window.x0, t.window.y1 - t.window.y0);
    const double r = opt.probe_fraction * width;
    const auto curves = curve_polys(t);
    bool present[3] = {false, false, false};
    bool edge[3][3] = {};
    auto idx = [](StratumKind k) { return static_cast<int>(k); };

    const Samples samples = sample_points(t, opt.grid);
    for (const Point& p : samples.generic) present[idx(classify_point(t, p))] = true;
    for (const Point& p : samples.special) {
        const StratumKind j = classify_point(t, p);
        present[idx(j)] = true;
        const auto near = strata_near(t, curves, dirs, p, r);
        for (int i = 0; i < 3; ++i)
            if (near[i]) {
                present[i] = true;
                edge[i][idx(j)] = true;
            }
    }
    if (t.mode == TheoryMode::Projective) {
        const StratumKind j = classify_point(t, SpherePoint::infinity());
        present[idx(j)] = true;
        const auto near = strata_near_infinity(t, dirs, opt.probe_fraction);
        for (int i = 0; i < 3; ++i)
            if (near[i]) {
                present[i] = true;
                edge[i][idx(j)] = true;
            }
    }

    Digraph g;
    for (StratumKind k : kAllStrata)
        if (present[idx(k)]) g.add_vertex(short_name(k));
    for (StratumKind a : kAllStrata)
        for (StratumKind b : kAllStrata)
            if (present[idx(a)] && present[idx(b)] && (a == b || edge[idx(a)][idx(b)]))
                g.add_edge(short_name(a), short_name(b));
    return g;
}

namespace {

bool topology_declared(const TheoryTopology& t) {
    for (StratumKind k : kAllStrata)
        if (t[k].b0 != 0) return true;
    return false;
}

Digraph declared_digraph(const std::vector<StratumKind>& strata, const std::vector<StratumEdge>& edges) {
    Digraph g;
    for (StratumKind k : strata) g.add_vertex(short_name(k));
    for (StratumKind k : strata) g.add_edge(short_name(k), short_name(k));
    for (const auto& [a, b] : edges)
        if (g.find(short_name(a)) >= 0 && g.find(short_name(b)) >= 0) g.add_edge(short_name(a), short_name(b));
    return g;
}

std::vector<StratumKind> nonempty_strata(const TheoryTopology& t) {
    std::vector<StratumKind> out;
    for (StratumKind k : kAllStrata)
        if (t[k].b0 > 0) out.push_back(k);
    return out;
}

std::vector<StratumKind> strata_of(const Digraph& g) {
    std::vector<StratumKind> out;
    for (const auto& v : g.vertices) out.push_back(parse_stratum(v));
    return out;
}

}  // namespace

Digraph base_adjacency(const StabilityTheory& t) {
    if (!t.adjacency) return numeric_adjacency(t);
    const auto strata =
        topology_declared(t.topology) ? nonempty_strata(t.topology) : strata_of(numeric_adjacency(t));
    return declared_digraph(strata, *t.adjacency);
}

Digraph local_base_digraph(const StabilityTheory& t) {
    std::vector<StratumKind> strata;
    const TheoryTopology* plane = t.mode == TheoryMode::Monic ? &t.topology
                                  : t.punctured_topology     ? &*t.punctured_topology
                                                             : nullptr;
    if (plane && topology_declared(*plane)) {
        strata = nonempty_strata(*plane);
    } else {
        StabilityTheory monic = t;
        monic.mode = TheoryMode::Monic;
        monic.infinity_stratum.reset();
        strata = strata_of(numeric_adjacency(monic));
    }
    Digraph g;
    if (t.adjacency) {
        g = declared_digraph(strata, *t.adjacency);
    } else {
        StabilityTheory monic = t;
        monic.mode = TheoryMode::Monic;
        monic.infinity_stratum.reset();
        g = numeric_adjacency(monic);
    }
    const int inf = g.add_vertex(kInfinityLabel);
    g.add_edge(inf, inf);

    std::vector<StratumKind> unbounded;
    if (t.unbounded) {
        unbounded = *t.unbounded;
    } else {
        const auto near = strata_near_infinity(t, unit_directions(16), SamplerOptions{}.probe_fraction);
        for (StratumKind k : kAllStrata)
            if (near[static_cast<int>(k)]) unbounded.push_back(k);
    }
    for (StratumKind k : unbounded)
        if (const int v = g.find(short_name(k)); v >= 0) g.add_edge(v, inf);
    return g;
}

SymProduct local_adjacency(const StabilityTheory& t, int n, unsigned threads) {
    return sym_product_digraph(local_base_digraph(t), n, threads);
}

std::string dot_export(const Digraph& g) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::vector<std::string> names = g.vertices;
    std::sort(names.begin(), names.end());
    std::ostringstream os;
    os << "digraph adjacency {\n";
    for (const auto& v : names) os << "  " << quote(v) << ";\n";
    for (const auto& [a, b] : g.labelled_edges(true)) os << "  " << quote(a) << " -> " << quote(b) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dstrat
