#include "spectral/rational.hpp"

#include <cctype>

namespace spectral {

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty rational literal");
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')
            continue;
        throw ParseError("invalid character in rational literal: \"" + text + "\"");
    }
    auto slash = t.find('/');
    if (slash != std::string::npos && t.find('/', slash + 1) != std::string::npos)
        throw ParseError("multiple '/' in rational literal: \"" + text + "\"");
    try {
        Rational q(t);
        if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in \"" + text + "\"");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal: \"" + text + "\"");
    }
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

GaussianRational parse_gaussian(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return GaussianRational(parse_rational(text));
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string format_gaussian(const GaussianRational& z) {
    if (z.is_real()) return format_rational(z.re);
    std::string s = format_rational(z.re);
    if (sgn(z.im) >= 0) s += "+";
    return s + format_rational(z.im) + "i";
}

} // namespace spectral
