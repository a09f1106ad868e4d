#include "dstrat/ddecomp.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dstrat {

namespace {

int trimmed_degree(const std::vector<Complex>& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[d] == Complex(0, 0)) --d;
    return d;
}

}  // namespace

int AffineFamily::ambient_degree() const {
    int d = trimmed_degree(base);
    for (const auto& g : generators) d = std::max(d, trimmed_degree(g));
    return std::max(d, 0);
}

AffineFamily make_affine_family(std::vector<Complex> base, std::vector<std::vector<Complex>> generators) {
    if (generators.empty() || generators.size() > 2)
        throw std::invalid_argument("an affine family needs one or two generators");
    if (std::all_of(generators.begin(), generators.end(), [](const auto& g) { return trimmed_degree(g) < 0; }))
        throw std::invalid_argument("every generator of the family is zero");
    auto check_finite = [](const std::vector<Complex>& v) {
        for (Complex c : v)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::invalid_argument("family coefficients must be finite");
    };
    check_finite(base);
    for (const auto& g : generators) check_finite(g);
    return {std::move(base), std::move(generators)};
}

MatrixFamily make_matrix_family(std::vector<SquareMatrix> matrices) {
    if (matrices.size() < 2 || matrices.size() > 3)
        throw std::invalid_argument("a matrix family needs A0 and one or two generators");
    for (const auto& m : matrices) {
        if (m.size() != matrices.front().size()) throw std::invalid_argument("matrices in a family must have one size");
        if (m.size() == 0) throw std::invalid_argument("matrices must be non-empty");
    }
    return {std::move(matrices)};
}

FamilyMember evaluate_family(const AffineFamily& fam, const std::vector<double>& h) {
    if (static_cast<int>(h.size()) != fam.parameter_count())
        throw std::invalid_argument("expected " + std::to_string(fam.parameter_count()) + " parameters");
    const int n = fam.ambient_degree() + 1;
    std::vector<Complex> c(n);
    std::vector<double> mag(n);
    for (std::size_t k = 0; k < fam.base.size(); ++k) {
        c[k] += fam.base[k];
        mag[k] += std::abs(fam.base[k]);
    }
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t k = 0; k < fam.generators[i].size(); ++k) {
            c[k] += h[i] * fam.generators[i][k];
            mag[k] += std::abs(h[i]) * std::abs(fam.generators[i][k]);
        }
    const double cut = 1e-12 * *std::max_element(mag.begin(), mag.end());
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    FamilyMember out;
    if (c.empty()) return out;
    out.degree_drop = n - static_cast<int>(c.size());
    out.poly = ComplexPoly(std::move(c));
    return out;
}

namespace {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<std::size_t> parent_;
};

void label_regions(DecompositionMap& m) {
    const std::size_t n = m.cells.size();
    UnionFind uf(n);
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i) {
            const auto& c = m.cells[m.at(i, j)];
            if (!c) continue;
            if (i + 1 < m.nx && m.cells[m.at(i + 1, j)] == c) uf.unite(m.at(i, j), m.at(i + 1, j));
            if (j + 1 < m.ny && m.cells[m.at(i, j + 1)] == c) uf.unite(m.at(i, j), m.at(i, j + 1));
        }
    // Roots are the smallest cell of each class, so first-appearance order is
    // the order in which roots are met.
    std::vector<int> root_label(n, 0);
    m.labels.assign(n, 0);
    m.region_count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!m.cells[k]) continue;
        const std::size_t r = uf.find(k);
        if (!root_label[r]) root_label[r] = ++m.region_count;
        m.labels[k] = root_label[r];
    }
}

DecompositionMap scan_cells(const StabilityTheory& t, int params, int ambient, const Window& w, int resolution,
                            unsigned threads, const std::function<std::optional<StabilityIndex>(double, double)>& cell) {
    check_theory_structure(t);
    if (resolution < 1 || resolution > kMaxScanResolution)
        throw std::invalid_argument("resolution must be in [1, " + std::to_string(kMaxScanResolution) + "]");
    if (!(w.x1 > w.x0) || (params == 2 && !(w.y1 > w.y0)) || !std::isfinite(w.x0) || !std::isfinite(w.x1) ||
        !std::isfinite(w.y0) || !std::isfinite(w.y1))
        throw std::invalid_argument("degenerate scan window");
    DecompositionMap m;
    m.window = w;
    m.nx = resolution;
    m.ny = params == 2 ? resolution : 1;
    m.parameter_count = params;
    m.ambient_degree = ambient;
    m.cells.resize(static_cast<std::size_t>(m.nx) * m.ny);
    detail::parallel_for(m.cells.size(), threads, 256, [&](std::size_t k) {
        const int i = static_cast<int>(k % m.nx), j = static_cast<int>(k / m.nx);
        m.cells[k] = cell(m.h1(i), m.h2(j));
    });
    label_regions(m);
    return m;
}

}  // namespace

DecompositionMap scan(const StabilityTheory& t, const AffineFamily& fam, const Window& w, int resolution,
                      unsigned threads) {
    const int r = fam.parameter_count();
    if (r < 1 || r > 2) throw std::invalid_argument("an affine family needs one or two generators");
    const int ambient = fam.ambient_degree();
    return scan_cells(t, r, ambient, w, resolution, threads, [&](double h1, double h2) -> std::optional<StabilityIndex> {
        const FamilyMember f = evaluate_family(fam, r == 2 ? std::vector<double>{h1, h2} : std::vector<double>{h1});
        if (!f.poly) return std::nullopt;
        if (t.mode == TheoryMode::Monic && f.degree_drop > 0) return std::nullopt;
        try {
            return stability_index(t, *f.poly, t.mode == TheoryMode::Monic ? f.poly->degree() : ambient);
        } catch (const std::runtime_error&) {
            return std::nullopt;
        }
    });
}

DecompositionMap scan(const StabilityTheory& t, const MatrixFamily& fam, const Window& w, int resolution,
                      unsigned threads) {
    const int r = fam.parameter_count();
    if (r < 1 || r > 2) throw std::invalid_argument("a matrix family needs A0 and one or two generators");
    return scan_cells(t, r, fam.size(), w, resolution, threads, [&](double h1, double h2) -> std::optional<StabilityIndex> {
        SquareMatrix a = fam.matrices[0] + fam.matrices[1] * Complex(h1, 0);
        if (r == 2) a = a + fam.matrices[2] * Complex(h2, 0);
        try {
            return stability_index(t, char_poly(a), fam.size());
        } catch (const std::runtime_error&) {
            return std::nullopt;
        }
    });
}

std::vector<RegionInfo> extract_regions(const DecompositionMap& map) {
    std::vector<RegionInfo> out(map.region_count);
    std::vector<bool> seen(map.region_count, false);
    for (int j = 0; j < map.ny; ++j)
        for (int i = 0; i < map.nx; ++i) {
            const int lab = map.labels[map.at(i, j)];
            if (!lab) continue;
            RegionInfo& r = out[lab - 1];
            if (!seen[lab - 1]) {
                seen[lab - 1] = true;
                r.label = lab;
                r.index = *map.cells[map.at(i, j)];
                r.i0 = r.i1 = i;
                r.j0 = r.j1 = j;
            }
            ++r.cells;
            r.i0 = std::min(r.i0, i);
            r.i1 = std::max(r.i1, i);
            r.j0 = std::min(r.j0, j);
            r.j1 = std::max(r.j1, j);
        }
    std::sort(out.begin(), out.end(), [](const RegionInfo& a, const RegionInfo& b) {
        return a.cells != b.cells ? a.cells > b.cells : a.label < b.label;
    });
    return out;
}

namespace {

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string to_pgm(const DecompositionMap& m) {
    constexpr int kMaxGray = 65535;
    if (m.region_count > kMaxGray) throw std::runtime_error("too many regions for a PGM gray scale");
    std::vector<bool> border(m.region_count + 1, false);
    for (std::size_t k = 0; k < m.cells.size(); ++k)
        if (m.labels[k] && m.cells[k]->l > 0) border[m.labels[k]] = true;
    std::ostringstream os;
    os << "P2\n" << m.nx << ' ' << m.ny << '\n' << std::max(m.region_count, 1) << '\n';
    for (int j = m.ny - 1; j >= 0; --j) {
        for (int i = 0; i < m.nx; ++i) {
            const int lab = m.labels[m.at(i, j)];
            os << (i ? " " : "") << (lab && !border[lab] ? lab : 0);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_csv(const DecompositionMap& m) {
    std::ostringstream os;
    os << "i,j,h1,h2,k,l,m,label\n";
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i) {
            const auto& c = m.cells[m.at(i, j)];
            os << i << ',' << j << ',' << shortest(m.h1(i)) << ',' << shortest(m.h2(j)) << ',';
            if (c)
                os << c->k << ',' << c->l << ',' << c->m;
            else
                os << ",,";
            os << ',' << m.labels[m.at(i, j)] << '\n';
        }
    return os.str();
}

std::string to_json(const DecompositionMap& m) {
    using nlohmann::json;
    json cells = json::array();
    for (const auto& c : m.cells) cells.push_back(c ? json::array({c->k, c->l, c->m}) : json(nullptr));
    json regions = json::array();
    for (const auto& r : extract_regions(m))
        regions.push_back({{"label", r.label},
                           {"index", {r.index.k, r.index.l, r.index.m}},
                           {"cells", r.cells},
                           {"boundary", r.boundary()},
                           {"bbox", {r.i0, r.i1, r.j0, r.j1}}});
    const json j = {{"window", {m.window.x0, m.window.x1, m.window.y0, m.window.y1}},
                    {"nx", m.nx},
                    {"ny", m.ny},
                    {"parameters", m.parameter_count},
                    {"ambient_degree", m.ambient_degree},
                    {"cells", std::move(cells)},
                    {"labels", m.labels},
                    {"regions", std::move(regions)}};
    return j.dump() + "\n";
}

}  // namespace

std::string export_map(const DecompositionMap& map, std::string_view format) {
    if (format == "pgm") return to_pgm(map);
    if (format == "csv") return to_csv(map);
    if (format == "json") return to_json(map);
    throw std::invalid_argument("unsupported export format '" + std::string(format) + "'");
}

}  // namespace dstrat
