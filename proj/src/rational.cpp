#include "dstrat/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace dstrat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    const std::string original(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal '" + original + "'");
        auto strip = [](std::string_view v) {
            const auto nz = v.find_first_not_of('0');
            return nz == std::string_view::npos ? std::string("0") : std::string(v.substr(nz));
        };
        BigInt d{strip(den)};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
        result = Rational(BigInt{strip(num)}, d);
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = s.substr(e + 1);
            bool exp_neg = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_neg = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6)
                throw std::invalid_argument("malformed exponent in '" + original + "'");
            exponent = std::stol(std::string(exp_text));
            if (exp_neg) exponent = -exponent;
            s = s.substr(0, e);
        }
        std::string digits;
        long frac_digits = 0;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string_view ip = s.substr(0, dot);
            std::string_view fp = s.substr(dot + 1);
            if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
                (ip.empty() && fp.empty()))
                throw std::invalid_argument("malformed decimal literal '" + original + "'");
            digits = std::string(ip) + std::string(fp);
            frac_digits = static_cast<long>(fp.size());
        } else {
            if (!all_digits(s)) throw std::invalid_argument("malformed number '" + original + "'");
            digits = std::string(s);
        }
        // cpp_int reads a leading 0 as an octal prefix.
        const auto nz = digits.find_first_not_of('0');
        digits = nz == std::string::npos ? std::string("0") : digits.substr(nz);
        BigInt mantissa{digits};
        long shift = exponent - frac_digits;
        if (shift >= 0)
            result = Rational(mantissa * pow10(shift));
        else
            result = Rational(mantissa, pow10(-shift));
    }
    return negative ? Rational(-result) : result;
}

Rational rational_from_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::invalid_argument("cannot format double");
    std::string_view text(buf, static_cast<std::size_t>(end - buf));
    if (text.find_first_of("ni") != std::string_view::npos)
        throw std::invalid_argument("non-finite value has no rational form");
    return parse_rational(text);
}

std::string to_string(const Rational& value) { return value.str(); }

BigInt binomial(long n, long k) {
    if (k == 0) return 1;
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace dstrat
