#pragma once

#include "dstrat/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dstrat {

// Exponent pair of x^i y^j. Ordered graded-lexicographically: total degree
// first, then the x exponent; the largest monomial is the leading one.
struct Monomial {
    int i = 0;
    int j = 0;
    int degree() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.i < b.i;
    }
};

// Polynomial in x, y with exact rational coefficients. No zero coefficient is
// ever stored, so two polynomials are equal iff their term maps are equal.
class BivarPoly {
  public:
    using TermMap = std::map<Monomial, Rational, GradedOrder>;

    BivarPoly() = default;
    static BivarPoly constant(const Rational& c);
    static BivarPoly monomial(const Rational& c, int i, int j);
    static BivarPoly x();
    static BivarPoly y();
    // x^2 + y^2
    static BivarPoly rho();

    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in_x() const;
    int degree_in_y() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff(int i, int j) const;
    // Leading term under GradedOrder; requires a nonzero polynomial.
    const std::pair<const Monomial, Rational>& leading_term() const;

    void add_term(const Rational& c, int i, int j);

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const BivarPoly& o);
    BivarPoly& operator*=(const Rational& c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(BivarPoly a, const BivarPoly& b) { return a *= b; }
    friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
    friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

    BivarPoly pow(int e) const;
    // Quotient by x^2 + y^2 when the division is exact.
    std::optional<BivarPoly> divide_by_rho() const;
    // f(x, -y)
    BivarPoly reflect_y() const;
    BivarPoly derivative_x() const;
    BivarPoly derivative_y() const;
    // True iff this == c * other for some nonzero rational c; c is written to scale.
    bool is_proportional_to(const BivarPoly& other, Rational* scale = nullptr) const;

    Rational evaluate(const Rational& x, const Rational& y) const;
    double evaluate(double x, double y) const;

    // Canonical text, highest monomial first, e.g. "x^2 + y^2 - 1" or "3/5*x*y".
    std::string to_string() const;

  private:
    TermMap terms_;
};

// Parses sums/products/powers of rational literals, x and y, with parentheses and
// division by constants, e.g. "(x^2+y^2)^2 - 3*x + 1/2". Throws std::invalid_argument.
BivarPoly parse_bivar_poly(std::string_view text);

// Double-precision image of a BivarPoly for fast repeated evaluation.
class CompiledPoly {
  public:
    CompiledPoly() = default;
    explicit CompiledPoly(const BivarPoly& p);
    double operator()(double x, double y) const;
    double grad_x(double x, double y) const { return dx_ ? dx_->operator()(x, y) : 0.0; }
    double grad_y(double x, double y) const { return dy_ ? dy_->operator()(x, y) : 0.0; }
    int max_i() const { return max_i_; }
    int max_j() const { return max_j_; }

  private:
    struct Term {
        int i;
        int j;
        double c;
    };
    std::vector<Term> terms_;
    int max_i_ = 0;
    int max_j_ = 0;
    std::shared_ptr<const CompiledPoly> dx_;
    std::shared_ptr<const CompiledPoly> dy_;
    static std::shared_ptr<const CompiledPoly> make_plain(const BivarPoly& p);
};

}  // namespace dstrat
