#include "dstrat/text_util.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace dstrat {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        std::string_view piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        out.emplace_back(piece);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(v))
        throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
    return v;
}

int parse_int(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return v;
}

std::complex<double> parse_complex(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') return {parse_double(s), 0.0};
    s.pop_back();
    // Split at the last sign that is not part of an exponent.
    std::size_t split_at = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split_at = k;
            break;
        }
    std::string re_part = split_at == std::string::npos ? "" : s.substr(0, split_at);
    std::string im_part = split_at == std::string::npos ? s : s.substr(split_at);
    double im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_double(im_part);
    return {re_part.empty() ? 0.0 : parse_double(re_part), im};
}

std::string format_double(double v) {
    if (v == 0) v = 0;  // drop the sign of -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0) return format_double(z.real());
    std::string im = format_double(std::abs(z.imag())) + "i";
    if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + im;
    return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

}  // namespace dstrat
