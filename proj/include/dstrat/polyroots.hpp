#pragma once

#include "dstrat/region_model.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace dstrat {

using Complex = std::complex<double>;

// Ascending coefficients with a nonzero leading entry.
class ComplexPoly {
  public:
    // Trailing exact zeros are dropped; throws std::invalid_argument if nothing is left.
    explicit ComplexPoly(std::vector<Complex> coeffs);
    static ComplexPoly constant(Complex c) { return ComplexPoly({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.back(); }
    Complex operator()(Complex z) const;
    // max |c_k|
    double norm_inf() const;

  private:
    std::vector<Complex> coeffs_;
};

// Comma-separated ascending coefficients, e.g. "1,0,1" for 1 + z^2, "1+2i,-3i".
ComplexPoly parse_poly(std::string_view text);
std::string format_poly(const ComplexPoly& p);

struct RootWithMultiplicity {
    Complex value;
    int multiplicity = 1;
};

// Finite roots plus a count of roots at infinity (projective contexts).
struct RootMultiset {
    std::vector<RootWithMultiplicity> finite;
    int at_infinity = 0;
    int total() const;
};

struct StabilityIndex {
    int k = 0;  // stable
    int l = 0;  // semistable
    int m = 0;  // unstable
    int ambient() const { return k + l + m; }
    int& operator[](StratumKind s) { return s == StratumKind::Stable ? k : s == StratumKind::Semistable ? l : m; }
    int operator[](StratumKind s) const { return s == StratumKind::Stable ? k : s == StratumKind::Semistable ? l : m; }
    friend bool operator==(const StabilityIndex&, const StabilityIndex&) = default;
    friend auto operator<=>(const StabilityIndex&, const StabilityIndex&) = default;
};

std::string to_string(const StabilityIndex& idx);
// "k,l,m"
StabilityIndex parse_index(std::string_view text);

struct RootFinderOptions {
    int max_iterations = 200;
    double residual_factor = 1e-8;
    // Roots a, b with |a - b| < cluster_factor * (1 + max(|a|, |b|)) are merged.
    double cluster_factor = 1e-7;
};

// Aberth-Ehrlich simultaneous iteration with Newton polishing. Exact zero
// roots are split off first. Throws std::runtime_error when a root fails the
// residual test |p(r)| <= 1e-8 * max(1 + ||p||_inf, sum |c_k| |r|^k).
RootMultiset find_roots(const ComplexPoly& p, const RootFinderOptions& opt = {});

// leading * prod (z - r), expanded in a fixed root order.
ComplexPoly roots_to_coeffs(const RootMultiset& roots, Complex leading);

struct RootReport {
    Complex value;
    int multiplicity = 1;
    bool at_infinity = false;
    StratumKind stratum = StratumKind::Unstable;
    // The classification would differ if the boundary tolerance were 0.
    bool tolerance_limited = false;
};

struct IndexReport {
    StabilityIndex index;
    std::vector<RootReport> roots;
};

// Projective theories put ambient_degree - deg p roots at infinity; monic
// theories require ambient_degree == deg p.
IndexReport classify_roots(const StabilityTheory& t, const ComplexPoly& p, int ambient_degree);
StabilityIndex stability_index(const StabilityTheory& t, const ComplexPoly& p, int ambient_degree);

// eps * z^(deg+1) + p
ComplexPoly perturb_nonmonic(const ComplexPoly& p, Complex eps);
// z * p + eps
ComplexPoly perturb_monic(const ComplexPoly& p, Complex eps);

class SquareMatrix {
  public:
    explicit SquareMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    static SquareMatrix identity(int n);
    static SquareMatrix diagonal(const std::vector<Complex>& d);
    int size() const { return n_; }
    Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    Complex operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    SquareMatrix operator*(const SquareMatrix& o) const;
    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator*(Complex s) const;
    Complex trace() const;

  private:
    int n_;
    std::vector<Complex> a_;
};

// Row-major CSV, one row per line; entries use the complex literal syntax.
SquareMatrix parse_matrix_csv(std::string_view text);

// Monic companion matrix with char_poly(companion(p)) == p / leading.
SquareMatrix companion(const ComplexPoly& p);

// Characteristic polynomial det(z I - A) by the Faddeev-LeVerrier recurrence.
ComplexPoly char_poly(const SquareMatrix& a);

struct DualityReport {
    // Coefficients of prod (x - 1/s_i).
    std::vector<Complex> reciprocal_coeffs;
    // char_poly(diag(s)) read as a binary form in reversed order.
    std::vector<Complex> reversed_char_coeffs;
    // reciprocal = scale * reversed, scale = (-1)^n / prod s_i.
    Complex scale;
    double proportionality_residual = 0;
    StabilityIndex reciprocal_index;  // prod (z - 1/s_i) under the theory
    StabilityIndex dual_index;        // prod (z - s_i) under the dual theory
    bool indices_equal = false;
};

DualityReport duality_check(const std::vector<Complex>& s, const StabilityTheory& t);

}  // namespace dstrat
