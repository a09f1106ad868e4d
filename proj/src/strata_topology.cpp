#include "dstrat/strata_topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dstrat {

namespace {

void check_entry(const StratumBetti& b, int count, StratumKind k) {
    if (count < 0) throw std::invalid_argument("stability index entries must be non-negative");
    if (b.b0 < 0 || b.b1 < 0) throw std::invalid_argument("Betti numbers must be non-negative");
    if (count > 0 && b.b0 == 0)
        throw std::invalid_argument("stratum " + short_name(k) + " is empty but the index places " +
                                    std::to_string(count) + " roots in it");
}

// Multiset coefficient C(b0 + c - 1, c); 1 for c = 0 even when b0 = 0.
BigInt multichoose(int b0, int c) { return binomial(static_cast<long>(b0) + c - 1, c); }

}  // namespace

BigInt component_count(const TheoryTopology& topology, const StabilityIndex& index) {
    BigInt n = 1;
    for (StratumKind k : kAllStrata) {
        check_entry(topology[k], index[k], k);
        n *= multichoose(topology[k].b0, index[k]);
    }
    return n;
}

BigInt betti(const TheoryTopology& topology, const StabilityIndex& index, int u) {
    if (u < 0) throw std::invalid_argument("Betti degree must be non-negative");
    for (StratumKind k : kAllStrata) check_entry(topology[k], index[k], k);
    const auto& S = topology.s;
    const auto& SS = topology.ss;
    const auto& U = topology.un;
    BigInt total = 0;
    for (int r = 0; r <= std::min(u, index.k); ++r)
        for (int q = 0; q <= std::min(u - r, index.l); ++q) {
            const int t = u - r - q;
            if (t > index.m) continue;
            total += binomial(S.b1, r) * binomial(SS.b1, q) * binomial(U.b1, t) * multichoose(S.b0, index.k - r) *
                     multichoose(SS.b0, index.l - q) * multichoose(U.b0, index.m - t);
        }
    return total;
}

std::vector<BigInt> betti_vector(const TheoryTopology& topology, const StabilityIndex& index) {
    std::vector<BigInt> v;
    for (int u = 0; u <= index.ambient(); ++u) v.push_back(betti(topology, index, u));
    return v;
}

std::vector<std::vector<BigInt>> poincare_series_oracle(int b0, int b1, int n) {
    if (n < 0 || n > kSeriesCap)
        throw std::invalid_argument("series truncation must lie in [0, " + std::to_string(kSeriesCap) + "]");
    if (b0 < 0 || b1 < 0) throw std::invalid_argument("Betti numbers must be non-negative");
    // series[w][v]: coefficient of t^w x^v.
    std::vector<std::vector<BigInt>> series(n + 1, std::vector<BigInt>(n + 1, 0));
    series[0][0] = 1;
    for (int f = 0; f < b1; ++f)  // multiply by (1 + x t)
        for (int w = n; w >= 1; --w)
            for (int v = n; v >= 1; --v) series[w][v] += series[w - 1][v - 1];
    for (int f = 0; f < b0; ++f)  // multiply by 1 / (1 - t) = running sum in t
        for (int w = 1; w <= n; ++w)
            for (int v = 0; v <= n; ++v) series[w][v] += series[w - 1][v];
    for (auto& row : series)
        while (row.size() > 1 && row.back() == 0) row.pop_back();
    return series;
}

const std::vector<ComponentFactor>& ComponentSpec::operator[](StratumKind k) const {
    return k == StratumKind::Stable ? s : k == StratumKind::Semistable ? ss : un;
}

std::vector<ComponentFactor>& ComponentSpec::operator[](StratumKind k) {
    return k == StratumKind::Stable ? s : k == StratumKind::Semistable ? ss : un;
}

std::vector<int> component_b1_list(const StratumBetti& b, StratumKind which) {
    if (b.component_b1) return *b.component_b1;
    if (b.b0 == 1) return {b.b1};
    if (b.b1 == 0) return std::vector<int>(b.b0, 0);
    throw std::invalid_argument("stratum " + short_name(which) + " has " + std::to_string(b.b0) +
                                " components and b1 = " + std::to_string(b.b1) +
                                " but no per-component b1 list");
}

namespace {

// Weak compositions of `total` into `parts` parts, first part descending.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        cur.push_back(first);
        compositions(total - first, parts, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<ComponentFactor>> stratum_choices(const StratumBetti& b, int count, StratumKind which) {
    if (count == 0) return {{}};
    const std::vector<int> b1 = component_b1_list(b, which);
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(count, static_cast<int>(b1.size()), cur, comps);
    std::vector<std::vector<ComponentFactor>> out;
    for (const auto& c : comps) {
        std::vector<ComponentFactor> f;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > 0) f.push_back({static_cast<int>(i), b1[i], c[i]});
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<ComponentSpec> enumerate_components(const TheoryTopology& topology, const StabilityIndex& index) {
    for (StratumKind k : kAllStrata) check_entry(topology[k], index[k], k);
    const auto cs = stratum_choices(topology.s, index.k, StratumKind::Stable);
    const auto css = stratum_choices(topology.ss, index.l, StratumKind::Semistable);
    const auto cun = stratum_choices(topology.un, index.m, StratumKind::Unstable);
    std::vector<ComponentSpec> out;
    out.reserve(cs.size() * css.size() * cun.size());
    for (const auto& a : cs)
        for (const auto& b : css)
            for (const auto& c : cun) out.push_back({a, b, c});
    return out;
}

std::vector<ComponentSpec> enumerate_components(const StabilityTheory& t, const StabilityIndex& index) {
    return enumerate_components(t.topology, index);
}

std::string HomotopyExpr::to_string() const {
    if (is_point()) return "Point";
    std::vector<std::string> parts;
    if (torus_dim == 1) parts.push_back("Circle");
    else if (torus_dim > 1) parts.push_back("Torus(" + std::to_string(torus_dim) + ")");
    for (const auto& [q, n] : skeleta)
        parts.push_back("TorusSkeleton(" + std::to_string(q) + "," + std::to_string(n) + ")");
    for (int k : bouquets) parts.push_back("Bouquet(" + std::to_string(k) + ")");
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

HomotopyExpr homotopy_type(const ComponentSpec& spec) {
    HomotopyExpr h;
    for (StratumKind k : kAllStrata)
        for (const ComponentFactor& f : spec[k]) {
            if (f.lambda < 1 || f.b1 < 0) throw std::invalid_argument("invalid component factor");
            if (f.b1 == 0) continue;
            if (f.lambda == 1) {
                // A single root moves in a planar set homotopic to a bouquet.
                if (f.b1 == 1) ++h.torus_dim;
                else h.bouquets.push_back(f.b1);
            } else if (f.b1 <= f.lambda) {
                h.torus_dim += f.b1;
            } else {
                h.skeleta.emplace_back(f.lambda, f.b1);
            }
        }
    std::sort(h.skeleta.begin(), h.skeleta.end());
    std::sort(h.bouquets.rbegin(), h.bouquets.rend());
    return h;
}

std::string GroupDescriptor::to_string() const {
    std::vector<std::string> parts;
    if (free_abelian_rank == 1) parts.push_back("Z");
    else if (free_abelian_rank > 1) parts.push_back("Z^" + std::to_string(free_abelian_rank));
    for (int k : free_factors) parts.push_back("F" + std::to_string(k));
    if (parts.empty()) return "1";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

GroupDescriptor fundamental_group(const ComponentSpec& spec) {
    GroupDescriptor g;
    for (StratumKind k : kAllStrata)
        for (const ComponentFactor& f : spec[k]) {
            if (f.lambda < 1 || f.b1 < 0) throw std::invalid_argument("invalid component factor");
            if (f.lambda > 1 || f.b1 == 1) g.free_abelian_rank += f.b1;  // F_1 = Z
            else if (f.b1 >= 2) g.free_factors.push_back(f.b1);
        }
    std::sort(g.free_factors.rbegin(), g.free_factors.rend());
    return g;
}

GroupDescriptor fundamental_group(const HomotopyExpr& expr) {
    GroupDescriptor g;
    g.free_abelian_rank = expr.torus_dim;
    // A skeleton T^n_q with q >= 2 contains the 2-skeleton, so its group is Z^n.
    for (const auto& sk : expr.skeleta) g.free_abelian_rank += sk.second;
    g.free_factors = expr.bouquets;
    std::sort(g.free_factors.rbegin(), g.free_factors.rend());
    return g;
}

std::vector<BigInt> CircleBoundaryType::betti(int ambient) const {
    std::vector<BigInt> b(static_cast<std::size_t>(std::max(ambient, 1)) + 1, 0);
    b[0] = 1;
    if (has_circle) b[1] = 1;
    return b;
}

CircleBoundaryType homeomorphism_type_circle_boundary(const StabilityIndex& index) {
    if (index.k < 0 || index.l < 0 || index.m < 0) throw std::invalid_argument("stability index entries must be non-negative");
    CircleBoundaryType c;
    c.l = index.l;
    c.euclidean_dim = 2 * (index.k + index.m);
    const std::string euclid = "R^" + std::to_string(c.euclidean_dim);
    if (index.l == 0) {
        c.description = euclid;
        return c;
    }
    c.has_circle = true;
    c.disc_dim = index.l - 1;
    c.orientable = index.l % 2 == 1;
    c.description = std::string("S^1 ") + (c.orientable ? "x" : "~x") + " D^" + std::to_string(c.disc_dim) + " x " + euclid;
    return c;
}

bool PolePoset::is_chain() const {
    return std::all_of(counts.begin(), counts.end(), [](const BigInt& c) { return c == 1; });
}

PolePoset pole_placement_poset(int r, int n, int q, std::size_t max_elements) {
    if (r < 1) throw std::invalid_argument("pole count must be at least 1");
    if (q < 1 || q > n) throw std::invalid_argument("cardinalities must satisfy 1 <= q <= n");
    PolePoset p{r, n, q, {}, {}, {}};
    BigInt total = 0;
    for (int c = q; c <= n; ++c) {
        p.counts.push_back(binomial(static_cast<long>(r) + c - 1, c));
        total += p.counts.back();
    }
    if (total > max_elements) throw std::invalid_argument("pole poset has too many elements to list");

    std::map<std::vector<int>, int> id;
    std::vector<int> cur;
    // Non-decreasing sequences over 1..r of length c, in lexicographic order.
    std::function<void(int, int)> gen = [&](int len, int lo) {
        if (static_cast<int>(cur.size()) == len) {
            id.emplace(cur, static_cast<int>(p.elements.size()));
            p.elements.push_back(cur);
            return;
        }
        for (int v = lo; v <= r; ++v) {
            cur.push_back(v);
            gen(len, v);
            cur.pop_back();
        }
    };
    for (int c = q; c <= n; ++c) gen(c, 1);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const auto& e = p.elements[i];
        if (static_cast<int>(e.size()) == n) continue;
        for (int v = 1; v <= r; ++v) {
            auto bigger = e;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
            p.cover_edges.emplace_back(static_cast<int>(i), id.at(bigger));
        }
    }
    return p;
}

LocalStratumInfo local_stratum_info(const StabilityTheory& t, const StabilityIndex& index, int ambient) {
    if (index.k < 0 || index.l < 0 || index.m < 0) throw std::invalid_argument("stability index entries must be non-negative");
    if (index.ambient() > ambient)
        throw std::invalid_argument("index " + to_string(index) + " exceeds the ambient degree " + std::to_string(ambient));
    LocalStratumInfo info;
    info.monic_index = index;
    info.roots_at_infinity = ambient - index.ambient();
    if (t.mode == TheoryMode::Monic) {
        info.plane_topology = t.topology;
    } else {
        if (!t.punctured_topology)
            throw std::invalid_argument("theory '" + t.name + "' does not declare the topology of its strata without infinity");
        info.plane_topology = *t.punctured_topology;
    }
    info.components = component_count(info.plane_topology, index);
    info.betti = betti_vector(info.plane_topology, index);
    return info;
}

}  // namespace dstrat
