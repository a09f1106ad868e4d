#include "dstrat/bivar_poly.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dstrat {

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Rational& c, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    BivarPoly p;
    p.add_term(c, i, j);
    return p;
}

BivarPoly BivarPoly::x() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::y() { return monomial(1, 0, 1); }
BivarPoly BivarPoly::rho() { return monomial(1, 2, 0) + monomial(1, 0, 2); }

int BivarPoly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int BivarPoly::degree_in_x() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.i);
    return d;
}

int BivarPoly::degree_in_y() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
}

Rational BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& BivarPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return *terms_.rbegin();
}

void BivarPoly::add_term(const Rational& c, int i, int j) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m.i, m.j);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m.i, m.j);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
    BivarPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ca * cb, ma.i + mb.i, ma.j + mb.j);
    terms_ = std::move(r.terms_);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

BivarPoly BivarPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    BivarPoly result = constant(1);
    BivarPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::optional<BivarPoly> BivarPoly::divide_by_rho() const {
    // x^2 + y^2 is monic in y, so long division in y over Q[x] is exact or
    // leaves a remainder of y-degree below 2.
    BivarPoly rem = *this;
    BivarPoly quot;
    while (true) {
        const Monomial* top = nullptr;
        Rational c;
        for (const auto& [m, v] : rem.terms_)
            if (m.j >= 2 && (!top || m.j > top->j || (m.j == top->j && m.i > top->i))) {
                top = &m;
                c = v;
            }
        if (!top) break;
        const int i = top->i, j = top->j;
        quot.add_term(c, i, j - 2);
        rem.add_term(-c, i, j);
        rem.add_term(-c, i + 2, j - 2);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

BivarPoly BivarPoly::reflect_y() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m.j % 2 ? Rational(-c) : c, m.i, m.j);
    return r;
}

BivarPoly BivarPoly::derivative_x() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_)
        if (m.i > 0) r.add_term(c * m.i, m.i - 1, m.j);
    return r;
}

BivarPoly BivarPoly::derivative_y() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_)
        if (m.j > 0) r.add_term(c * m.j, m.i, m.j - 1);
    return r;
}

bool BivarPoly::is_proportional_to(const BivarPoly& other, Rational* scale) const {
    if (is_zero() || other.is_zero()) return false;
    if (terms_.size() != other.terms_.size()) return false;
    const auto& [ma, ca] = leading_term();
    const auto& [mb, cb] = other.leading_term();
    if (!(ma == mb)) return false;
    Rational s = ca / cb;
    auto it = other.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (!(it->first == m) || c != s * it->second) return false;
        ++it;
    }
    if (scale) *scale = s;
    return true;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& y) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int k = 0; k < m.i; ++k) t *= x;
        for (int k = 0; k < m.j; ++k) t *= y;
        sum += t;
    }
    return sum;
}

double BivarPoly::evaluate(double x, double y) const {
    double sum = 0;
    for (const auto& [m, c] : terms_) sum += to_double(c) * std::pow(x, m.i) * std::pow(y, m.j);
    return sum;
}

namespace {

std::string monomial_text(int i, int j) {
    std::string s;
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    return s;
}

}  // namespace

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const std::string mono = monomial_text(m.i, m.j);
        if (mono.empty())
            out += dstrat::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += dstrat::to_string(mag) + "*" + mono;
    }
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    BivarPoly parse() {
        BivarPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                    what + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    BivarPoly expr() {
        BivarPoly acc;
        bool first = true;
        while (true) {
            char c = peek();
            bool neg = false;
            if (c == '+' || c == '-') {
                neg = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            BivarPoly t = term();
            acc += neg ? -t : t;
            first = false;
        }
        return acc;
    }

    BivarPoly term() {
        BivarPoly acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '/') {
                ++pos_;
                BivarPoly d = power();
                if (d.total_degree() != 0) fail("division by a non-constant");
                acc *= Rational(1) / d.coeff(0, 0);
            } else if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
                       c == '.') {
                acc *= power();  // implicit multiplication, e.g. "3x" or "(x+1)(x-1)"
            } else {
                break;
            }
        }
        return acc;
    }

    BivarPoly power() {
        BivarPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 3) fail("exponent too large");
            base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    BivarPoly primary() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return BivarPoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return BivarPoly::y();
        }
        if (c == '(') {
            ++pos_;
            BivarPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
                std::size_t save = pos_;
                ++pos_;
                if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                } else {
                    pos_ = save;
                }
            }
            return BivarPoly::constant(parse_rational(s_.substr(start, pos_ - start)));
        }
        fail("expected a number, x, y or '('");
    }
};

}  // namespace

BivarPoly parse_bivar_poly(std::string_view text) { return Parser(text).parse(); }

std::shared_ptr<const CompiledPoly> CompiledPoly::make_plain(const BivarPoly& p) {
    auto c = std::make_shared<CompiledPoly>();
    for (const auto& [m, v] : p.terms()) {
        c->terms_.push_back({m.i, m.j, to_double(v)});
        c->max_i_ = std::max(c->max_i_, m.i);
        c->max_j_ = std::max(c->max_j_, m.j);
    }
    return c;
}

CompiledPoly::CompiledPoly(const BivarPoly& p) {
    *this = *make_plain(p);
    dx_ = make_plain(p.derivative_x());
    dy_ = make_plain(p.derivative_y());
}

double CompiledPoly::operator()(double x, double y) const {
    constexpr int kStack = 32;
    double xs[kStack], ys[kStack];
    std::vector<double> xh, yh;
    double* px = xs;
    double* py = ys;
    if (max_i_ >= kStack) {
        xh.resize(static_cast<std::size_t>(max_i_) + 1);
        px = xh.data();
    }
    if (max_j_ >= kStack) {
        yh.resize(static_cast<std::size_t>(max_j_) + 1);
        py = yh.data();
    }
    px[0] = 1;
    for (int k = 1; k <= max_i_; ++k) px[k] = px[k - 1] * x;
    py[0] = 1;
    for (int k = 1; k <= max_j_; ++k) py[k] = py[k - 1] * y;
    double sum = 0;
    for (const Term& t : terms_) sum += t.c * px[t.i] * py[t.j];
    return sum;
}

}  // namespace dstrat
