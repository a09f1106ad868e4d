#include "dstrat/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dstrat {

BivarPoly conj_transform(const BivarPoly& f) { return f.reflect_y(); }

namespace {

// rho^d * f(x/rho, y/rho) with d = deg f, before any reduction.
BivarPoly inversion_numerator(const BivarPoly& f, int d) {
    const BivarPoly rho = BivarPoly::rho();
    std::vector<BivarPoly> rho_pow{BivarPoly::constant(1)};
    for (int k = 1; k <= d; ++k) rho_pow.push_back(rho_pow.back() * rho);
    BivarPoly out;
    for (const auto& [m, c] : f.terms()) out += BivarPoly::monomial(c, m.i, m.j) * rho_pow[d - m.degree()];
    return out;
}

int strip_rho(BivarPoly& p, int max_divisions) {
    int k = 0;
    while (k < max_divisions && !p.is_zero()) {
        auto q = p.divide_by_rho();
        if (!q) break;
        p = std::move(*q);
        ++k;
    }
    return k;
}

BivarPoly apply(const BivarPoly& f, CurveTransform t) {
    switch (t) {
        case CurveTransform::Conj: return conj_transform(f);
        case CurveTransform::Inv: return inv_transform(f).poly;
        case CurveTransform::InvConj: return inv_transform(conj_transform(f)).poly;
    }
    throw std::logic_error("unknown transform");
}

}  // namespace

InversionResult inv_transform(const BivarPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("inversion of the zero polynomial");
    const int d = f.total_degree();
    BivarPoly p = inversion_numerator(f, d);
    const int k = strip_rho(p, d);
    return {std::move(p), d - k};
}

InvarianceResult is_invariant(const BivarPoly& f, CurveTransform t) {
    if (f.is_zero()) throw std::invalid_argument("invariance of the zero polynomial");
    const BivarPoly g = apply(f, t);
    InvarianceResult r;
    Rational scale;
    if (g.is_proportional_to(f, &scale)) {
        r.invariant = true;
        r.scale = scale;
    }
    return r;
}

BivarPoly orbit_polynomial(const BivarPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("orbit of the zero polynomial");
    const int d = f.total_degree();
    const BivarPoly n3 = inversion_numerator(f, d);
    const BivarPoly n4 = conj_transform(n3);
    BivarPoly p = f * conj_transform(f) * n3 * n4;
    strip_rho(p, 2 * d);
    return p;
}

std::string to_string(StandardCurve c) {
    switch (c) {
        case StandardCurve::VerticalAxis: return "vertical-axis";
        case StandardCurve::RealAxis: return "real-axis";
        case StandardCurve::UnitCircle: return "unit-circle";
        case StandardCurve::NonStandard: return "non-standard";
    }
    return "?";
}

std::string to_string(DirectionalSign s) {
    switch (s) {
        case DirectionalSign::Positive: return "positive";
        case DirectionalSign::Negative: return "negative";
        case DirectionalSign::Zero: return "zero";
        case DirectionalSign::Changes: return "changes";
    }
    return "?";
}

namespace {

BivarPoly homogeneous_part(const BivarPoly& f, int degree) {
    BivarPoly h;
    for (const auto& [m, c] : f.terms())
        if (m.degree() == degree) h.add_term(c, m.i, m.j);
    return h;
}

// Exact sign of a homogeneous form on rational points of the unit circle,
// ((1-t^2)/(1+t^2), 2t/(1+t^2)), plus the direction (-1, 0).
DirectionalSign sign_over_directions(const BivarPoly& h) {
    if (h.is_zero()) return DirectionalSign::Zero;
    std::vector<std::pair<Rational, Rational>> dirs{{Rational(-1), Rational(0)}};
    for (int num = -12; num <= 12; ++num)
        for (int den : {1, 2, 3, 5, 7}) {
            Rational t(num, den);
            Rational w = 1 + t * t;
            dirs.emplace_back((1 - t * t) / w, 2 * t / w);
        }
    bool pos = false, neg = false, zero = false;
    for (const auto& [cx, cy] : dirs) {
        Rational v = h.evaluate(cx, cy);
        if (v > 0)
            pos = true;
        else if (v < 0)
            neg = true;
        else
            zero = true;
    }
    if (pos && neg) return DirectionalSign::Changes;
    if (zero) return DirectionalSign::Changes;  // the form vanishes along some direction
    return pos ? DirectionalSign::Positive : DirectionalSign::Negative;
}

int lowest_degree(const BivarPoly& f) { return f.terms().begin()->first.degree(); }

}  // namespace

CurveClassification classify_standard(const BivarPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("classification of the zero polynomial");
    CurveClassification c;
    c.conj_invariant = is_invariant(f, CurveTransform::Conj).invariant;
    c.inv_invariant = is_invariant(f, CurveTransform::Inv).invariant;
    c.sign_near_zero = sign_over_directions(homogeneous_part(f, lowest_degree(f)));
    c.sign_near_infinity = sign_over_directions(homogeneous_part(f, f.total_degree()));
    const bool strict_zero =
        c.sign_near_zero == DirectionalSign::Positive || c.sign_near_zero == DirectionalSign::Negative;
    const bool strict_inf = c.sign_near_infinity == DirectionalSign::Positive ||
                            c.sign_near_infinity == DirectionalSign::Negative;
    c.separates_zero_and_infinity = !(strict_zero && strict_inf && c.sign_near_zero == c.sign_near_infinity);

    if (c.conj_invariant && c.inv_invariant) {
        if (f.is_proportional_to(BivarPoly::x()))
            c.label = StandardCurve::VerticalAxis;
        else if (f.is_proportional_to(BivarPoly::y()))
            c.label = StandardCurve::RealAxis;
        else if (f.is_proportional_to(BivarPoly::rho() - BivarPoly::constant(1)))
            c.label = StandardCurve::UnitCircle;
    }
    return c;
}

std::vector<double> radial_coefficients(const BivarPoly& f, double phi) {
    const int d = std::max(f.total_degree(), 0);
    std::vector<double> out(static_cast<std::size_t>(d) + 1, 0.0);
    const double cs = std::cos(phi), sn = std::sin(phi);
    for (const auto& [m, c] : f.terms())
        out[static_cast<std::size_t>(m.degree())] += to_double(c) * std::pow(cs, m.i) * std::pow(sn, m.j);
    return out;
}

std::string to_string(PalindromeKind k) {
    switch (k) {
        case PalindromeKind::Palindromic: return "palindromic";
        case PalindromeKind::Antipalindromic: return "antipalindromic";
        case PalindromeKind::Neither: return "neither";
    }
    return "?";
}

PalindromeKind palindrome_test(const std::vector<double>& coeffs) {
    double scale = 0;
    for (double c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale <= 1e-12) throw std::invalid_argument("palindrome test of an all-zero coefficient list");
    const double cut = 1e-12 * scale;
    std::size_t lo = 0, hi = coeffs.size();
    while (lo < hi && std::abs(coeffs[lo]) <= cut) ++lo;
    while (hi > lo && std::abs(coeffs[hi - 1]) <= cut) --hi;
    const double tol = 1e-9 * scale;
    bool pal = true, anti = true;
    const std::size_t len = hi - lo;
    for (std::size_t k = 0; k < len; ++k) {
        const double u = coeffs[lo + k], v = coeffs[hi - 1 - k];
        if (std::abs(u - v) > tol) pal = false;
        if (std::abs(u + v) > tol) anti = false;
    }
    if (pal) return PalindromeKind::Palindromic;
    if (anti) return PalindromeKind::Antipalindromic;
    return PalindromeKind::Neither;
}

BivarPoly palindromic_family(const std::map<std::pair<int, int>, Rational>& a, int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("palindromic family needs an even degree n >= 0");
    const int half = n / 2;
    const BivarPoly rho = BivarPoly::rho();
    BivarPoly f;
    for (const auto& [ij, c] : a) {
        const auto [i, j] = ij;
        if (i < 0 || i > half || j < 0 || j > i / 2)
            throw std::invalid_argument("palindromic family index (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") out of range for n=" + std::to_string(n));
        if (c == 0) continue;
        BivarPoly term = BivarPoly::monomial(c, i - 2 * j, 0) * rho.pow(j);
        f += term * (BivarPoly::constant(1) + rho.pow(half - i));
    }
    if (f.is_zero()) throw std::invalid_argument("palindromic family member is the zero polynomial");
    if (!is_invariant(f, CurveTransform::Conj).invariant || !is_invariant(f, CurveTransform::Inv).invariant)
        throw std::domain_error("palindromic family member " + f.to_string() +
                                " is not inversion invariant (it is divisible by x^2+y^2)");
    return f;
}

}  // namespace dstrat
