#pragma once

// Independent reference computations used only by tests. Each oracle takes a
// different route from the library code it checks.

#include "dstrat/bivar_poly.hpp"

#include <complex>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using dstrat::BivarPoly;
using dstrat::Rational;

inline BivarPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    BivarPoly f;
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j)
            if (keep(rng) == 0) f.add_term(Rational(coeff(rng)), i, j);
    return f;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 13);
    return Rational(num(rng), den(rng));
}

// f(x, -y) = c f(x, y) for a single c, checked at random rational points.
inline bool conj_invariant_by_sampling(const BivarPoly& f, std::mt19937& rng) {
    std::optional<Rational> ratio;
    for (int k = 0; k < 24; ++k) {
        const Rational x = random_rational(rng), y = random_rational(rng);
        const Rational a = f.evaluate(x, y), b = f.evaluate(x, Rational(-y));
        if (a == 0) {
            if (b != 0) return false;
            continue;
        }
        const Rational r = b / a;
        if (ratio && *ratio != r) return false;
        ratio = r;
    }
    return true;
}

// x^2 + y^2 divides f iff f(t, i t) vanishes identically in t, i.e. every
// homogeneous part vanishes at (1, i).
inline bool divisible_by_rho(const BivarPoly& f) {
    std::map<int, std::pair<Rational, Rational>> parts;  // degree -> (re, im) of h_s(1, i)
    for (const auto& [m, c] : f.terms()) {
        auto& [re, im] = parts[m.degree()];
        switch (m.j % 4) {
            case 0: re += c; break;
            case 1: im += c; break;
            case 2: re -= c; break;
            case 3: im -= c; break;
        }
    }
    for (const auto& [s, v] : parts)
        if (v.first != 0 || v.second != 0) return false;
    return true;
}

// inv maps f to c f iff f is coprime to x^2 + y^2 and
// rho^d f(p / rho) = c f(p) rho^e for constants c, e (d = deg f). Checked at
// random rational points without any polynomial division.
inline bool inv_invariant_by_sampling(const BivarPoly& f, std::mt19937& rng) {
    if (divisible_by_rho(f)) return false;
    const int d = f.total_degree();
    std::vector<std::pair<Rational, Rational>> pts;
    while (pts.size() < 24) {
        Rational x = random_rational(rng), y = random_rational(rng);
        if (x == 0 && y == 0) continue;
        pts.emplace_back(x, y);
    }
    for (int e = 0; e <= d; ++e) {
        std::optional<Rational> ratio;
        bool ok = true;
        for (const auto& [x, y] : pts) {
            const Rational rho = x * x + y * y;
            Rational rho_d = 1, rho_e = 1;
            for (int k = 0; k < d; ++k) rho_d *= rho;
            for (int k = 0; k < e; ++k) rho_e *= rho;
            const Rational lhs = rho_d * f.evaluate(x / rho, y / rho);
            const Rational base = f.evaluate(x, y) * rho_e;
            if (base == 0) {
                if (lhs != 0) ok = false;
                continue;
            }
            const Rational r = lhs / base;
            if (ratio && *ratio != r) ok = false;
            ratio = r;
        }
        if (ok && ratio) return true;
    }
    return false;
}

// Coefficients a_ij of a palindromic family member with a_00 != 0.
inline std::map<std::pair<int, int>, Rational> random_family_coeffs(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> c(-4, 4);
    std::map<std::pair<int, int>, Rational> a;
    for (int i = 0; i <= n / 2; ++i)
        for (int j = 0; j <= i / 2; ++j) a[{i, j}] = Rational(c(rng), 2);
    while (a[{0, 0}] == 0) a[{0, 0}] = Rational(c(rng));
    return a;
}

// Non-decreasing sequences of length c over b0 symbols, counted by recursion.
inline long count_multisets(int b0, int c, int lo = 0) {
    if (c == 0) return 1;
    long n = 0;
    for (int v = lo; v < b0; ++v) n += count_multisets(b0, c - 1, v);
    return n;
}

inline std::vector<dstrat::BigInt> poly_mul(const std::vector<dstrat::BigInt>& a, const std::vector<dstrat::BigInt>& b) {
    std::vector<dstrat::BigInt> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline dstrat::BigInt coeff(const std::vector<dstrat::BigInt>& p, int u) { return u < static_cast<int>(p.size()) ? p[u] : dstrat::BigInt(0); }

}  // namespace oracle
