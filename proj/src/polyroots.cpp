#include "dstrat/polyroots.hpp"

#include "dstrat/text_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dstrat {

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0, 0)) coeffs_.pop_back();
    if (coeffs_.empty()) throw std::invalid_argument("the zero polynomial has no stability index");
    for (const Complex& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("polynomial coefficients must be finite");
}

Complex ComplexPoly::operator()(Complex z) const {
    Complex acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double ComplexPoly::norm_inf() const {
    double m = 0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

ComplexPoly parse_poly(std::string_view text) {
    std::vector<Complex> c;
    for (const std::string& part : split(text, ',')) c.push_back(parse_complex(part));
    return ComplexPoly(std::move(c));
}

std::string format_poly(const ComplexPoly& p) {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ',';
        out += format_complex(p.coeffs()[k]);
    }
    return out;
}

int RootMultiset::total() const {
    int n = at_infinity;
    for (const auto& r : finite) n += r.multiplicity;
    return n;
}

std::string to_string(const StabilityIndex& idx) {
    return "(" + std::to_string(idx.k) + "," + std::to_string(idx.l) + "," + std::to_string(idx.m) + ")";
}

StabilityIndex parse_index(std::string_view text) {
    std::string_view t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    const auto parts = split(t, ',');
    if (parts.size() != 3) throw std::invalid_argument("stability index must have three entries: " + std::string(text));
    StabilityIndex idx{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
    if (idx.k < 0 || idx.l < 0 || idx.m < 0) throw std::invalid_argument("stability index entries must be non-negative");
    return idx;
}

namespace {

// p(z) / p'(z), evaluated through the reversed polynomial when |z| > 1 so that
// large iterates do not overflow.
Complex newton_ratio(const std::vector<Complex>& c, Complex z) {
    const int n = static_cast<int>(c.size()) - 1;
    if (std::abs(z) <= 1) {
        Complex p = 0, dp = 0;
        for (int k = n; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + c[k];
        }
        return p / dp;
    }
    const Complex w = 1.0 / z;
    Complex q = 0, dq = 0;  // q(w) = sum c_k w^(n-k)
    for (int k = 0; k <= n; ++k) {
        dq = dq * w + q;
        q = q * w + c[k];
    }
    return z * q / (static_cast<double>(n) * q - w * dq);
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|c_k|).
std::vector<Complex> initial_points(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<int> hull;
    for (int k = 0; k <= n; ++k) {
        if (c[k] == Complex(0, 0)) continue;
        const double yk = std::log(std::abs(c[k]));
        while (hull.size() >= 2) {
            const int a = hull[hull.size() - 2], b = hull.back();
            const double ya = std::log(std::abs(c[a])), yb = std::log(std::abs(c[b]));
            if ((yb - ya) * (k - a) <= (yk - ya) * (b - a)) hull.pop_back();
            else break;
        }
        hull.push_back(k);
    }
    std::vector<Complex> z;
    z.reserve(n);
    const double two_pi = 2 * std::numbers::pi;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const int a = hull[h], b = hull[h + 1], cnt = b - a;
        const double r = std::pow(std::abs(c[a]) / std::abs(c[b]), 1.0 / cnt);
        for (int j = 0; j < cnt; ++j) z.push_back(std::polar(r, two_pi * j / cnt + two_pi * (h + 1) / n + 0.4));
    }
    return z;
}

double abs_poly_bound(const std::vector<Complex>& c, double r) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace

RootMultiset find_roots(const ComplexPoly& p, const RootFinderOptions& opt) {
    RootMultiset out;
    const auto& all = p.coeffs();
    std::size_t zeros = 0;
    while (all[zeros] == Complex(0, 0)) ++zeros;
    if (zeros) out.finite.push_back({Complex(0, 0), static_cast<int>(zeros)});
    const std::vector<Complex> c(all.begin() + static_cast<long>(zeros), all.end());
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return out;

    std::vector<Complex> z;
    if (n == 1) {
        z.push_back(-c[0] / c[1]);
    } else {
        z = initial_points(c);
        std::vector<bool> done(n, false);
        for (int it = 0; it < opt.max_iterations; ++it) {
            bool all_done = true;
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                const Complex ratio = newton_ratio(c, z[i]);
                Complex sum = 0;
                for (int j = 0; j < n; ++j)
                    if (j != i) sum += 1.0 / (z[i] - z[j]);
                const Complex step = ratio / (1.0 - ratio * sum);
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
                z[i] -= step;
                if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(z[i])) done[i] = true;
                else all_done = false;
            }
            if (all_done) break;
        }
    }

    const ComplexPoly core(c);
    // Newton polish, keeping a step only if it lowers the residual.
    for (Complex& r : z) {
        double res = std::abs(core(r));
        for (int k = 0; k < 5 && res > 0; ++k) {
            const Complex cand = r - newton_ratio(c, r);
            const double cres = std::abs(core(cand));
            if (!(cres < res)) break;
            r = cand;
            res = cres;
        }
    }
    const double base = 1 + core.norm_inf();
    for (const Complex& r : z) {
        const double res = std::abs(core(r));
        const double bound = opt.residual_factor * std::max(base, abs_poly_bound(c, std::abs(r)));
        if (!(res <= bound))
            throw std::runtime_error("root finder did not converge (residual " + format_double(res) + " at " +
                                     format_complex(r) + "); the polynomial is ill-conditioned");
    }

    // Single-link clustering with a pairwise scale, so one huge root does not
    // merge all the small ones; each cluster is replaced by its mean.
    auto close = [&](Complex a, Complex b) {
        return std::abs(a - b) < opt.cluster_factor * (1 + std::max(std::abs(a), std::abs(b)));
    };
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (close(z[i], z[j])) parent[find(i)] = find(j);
    std::vector<Complex> sum(n, 0);
    std::vector<int> cnt(n, 0);
    for (int i = 0; i < n; ++i) {
        sum[find(i)] += z[i];
        ++cnt[find(i)];
    }
    std::vector<RootWithMultiplicity> found;
    for (int i = 0; i < n; ++i)
        if (cnt[i]) found.push_back({sum[i] / static_cast<double>(cnt[i]), cnt[i]});
    // A numeric cluster at 0 joins the exact zero roots.
    for (auto& r : found) {
        if (zeros && close(r.value, 0)) {
            out.finite.front().multiplicity += r.multiplicity;
            r.multiplicity = 0;
        }
    }
    for (auto& r : found)
        if (r.multiplicity) out.finite.push_back(r);
    std::sort(out.finite.begin(), out.finite.end(), [](const auto& a, const auto& b) {
        return std::pair(a.value.real(), a.value.imag()) < std::pair(b.value.real(), b.value.imag());
    });
    return out;
}

ComplexPoly roots_to_coeffs(const RootMultiset& roots, Complex leading) {
    if (leading == Complex(0, 0)) throw std::invalid_argument("leading coefficient must be nonzero");
    if (roots.at_infinity) throw std::invalid_argument("roots at infinity have no finite linear factor");
    std::vector<Complex> rs;
    for (const auto& r : roots.finite) {
        if (r.multiplicity < 1) throw std::invalid_argument("root multiplicities must be positive");
        rs.insert(rs.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    }
    std::sort(rs.begin(), rs.end(), [](Complex a, Complex b) {
        return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
    });
    std::vector<Complex> c{leading};
    for (const Complex& r : rs) {
        c.push_back(0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return ComplexPoly(std::move(c));
}

IndexReport classify_roots(const StabilityTheory& t, const ComplexPoly& p, int ambient_degree) {
    if (ambient_degree < p.degree())
        throw std::invalid_argument("ambient degree " + std::to_string(ambient_degree) + " is below the degree " +
                                    std::to_string(p.degree()));
    if (t.mode == TheoryMode::Monic && ambient_degree != p.degree())
        throw std::invalid_argument("a monic theory needs ambient degree equal to the polynomial degree");
    IndexReport rep;
    for (const auto& r : find_roots(p).finite) {
        RootReport rr;
        rr.value = r.value;
        rr.multiplicity = r.multiplicity;
        rr.stratum = classify_point(t, r.value);
        rr.tolerance_limited = rr.stratum != classify_point_exact_sign(t, r.value);
        rep.index[rr.stratum] += r.multiplicity;
        rep.roots.push_back(rr);
    }
    if (const int deficit = ambient_degree - p.degree(); deficit > 0) {
        RootReport rr;
        rr.at_infinity = true;
        rr.multiplicity = deficit;
        rr.stratum = classify_point(t, SpherePoint::infinity());
        rep.index[rr.stratum] += deficit;
        rep.roots.push_back(rr);
    }
    return rep;
}

StabilityIndex stability_index(const StabilityTheory& t, const ComplexPoly& p, int ambient_degree) {
    return classify_roots(t, p, ambient_degree).index;
}

ComplexPoly perturb_nonmonic(const ComplexPoly& p, Complex eps) {
    if (eps == Complex(0, 0)) throw std::invalid_argument("perturbation must be nonzero");
    std::vector<Complex> c = p.coeffs();
    c.push_back(eps);
    return ComplexPoly(std::move(c));
}

ComplexPoly perturb_monic(const ComplexPoly& p, Complex eps) {
    std::vector<Complex> c{eps};
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return ComplexPoly(std::move(c));
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Complex>& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i) m(i, i) = d[i];
    return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex(0, 0)) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    SquareMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

SquareMatrix SquareMatrix::operator*(Complex s) const {
    SquareMatrix r = *this;
    for (Complex& v : r.a_) v *= s;
    return r;
}

Complex SquareMatrix::trace() const {
    Complex t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

SquareMatrix parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<Complex>> rows;
    for (std::string line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Complex> row;
        for (const std::string& e : split(line, ',')) row.push_back(parse_complex(e));
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("matrix is empty");
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                        " entries; expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

SquareMatrix companion(const ComplexPoly& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("companion matrix needs degree at least 1");
    SquareMatrix m(n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -p.coeffs()[i] / p.leading();
    return m;
}

ComplexPoly char_poly(const SquareMatrix& a) {
    const int n = a.size();
    if (n < 1) throw std::invalid_argument("characteristic polynomial needs a nonempty matrix");
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    std::vector<Complex> c(n + 1);
    c[n] = 1;
    const SquareMatrix id = SquareMatrix::identity(n);
    SquareMatrix m(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m + id * c[n - k + 1];
        c[n - k] = -(a * m).trace() / static_cast<double>(k);
    }
    return ComplexPoly(std::move(c));
}

DualityReport duality_check(const std::vector<Complex>& s, const StabilityTheory& t) {
    if (s.empty()) throw std::invalid_argument("duality check needs at least one scalar");
    RootMultiset recip, direct;
    for (const Complex& v : s) {
        if (v == Complex(0, 0)) throw std::invalid_argument("duality check needs nonzero scalars");
        recip.finite.push_back({1.0 / v, 1});
        direct.finite.push_back({v, 1});
    }
    DualityReport rep;
    const ComplexPoly recip_poly = roots_to_coeffs(recip, 1);
    rep.reciprocal_coeffs = recip_poly.coeffs();
    const auto chi = char_poly(SquareMatrix::diagonal(s)).coeffs();
    rep.reversed_char_coeffs.assign(chi.rbegin(), chi.rend());

    // Least-squares scale between the two coefficient vectors.
    Complex num = 0;
    double den = 0, ref = 0;
    for (std::size_t k = 0; k < chi.size(); ++k) {
        num += std::conj(rep.reversed_char_coeffs[k]) * rep.reciprocal_coeffs[k];
        den += std::norm(rep.reversed_char_coeffs[k]);
        ref += std::norm(rep.reciprocal_coeffs[k]);
    }
    rep.scale = num / den;
    double err = 0;
    for (std::size_t k = 0; k < chi.size(); ++k)
        err += std::norm(rep.reciprocal_coeffs[k] - rep.scale * rep.reversed_char_coeffs[k]);
    rep.proportionality_residual = std::sqrt(err / ref);

    const int n = static_cast<int>(s.size());
    rep.reciprocal_index = stability_index(t, recip_poly, n);
    rep.dual_index = stability_index(dualize(t), roots_to_coeffs(direct, 1), n);
    rep.indices_equal = rep.reciprocal_index == rep.dual_index;
    return rep;
}

}  // namespace dstrat
