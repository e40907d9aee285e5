#include "crn/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "crn/errors.hpp"

namespace crn {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) throw InvalidArgument("empty numeric literal");

    auto slash = s.find('/');
    Rational result;
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidArgument("malformed rational literal '" + text + "'");
        Integer p(num, 10), q(den, 10);
        if (q == 0) throw InvalidArgument("zero denominator in '" + text + "'");
        result = Rational(p, q);
        result.canonicalize();
    } else {
        // integer / decimal / scientific, converted exactly
        auto epos = s.find_first_of("eE");
        long exp10 = 0;
        std::string mantissa = s;
        if (epos != std::string::npos) {
            mantissa = s.substr(0, epos);
            std::string expstr = s.substr(epos + 1);
            if (expstr.empty()) throw InvalidArgument("malformed literal '" + text + "'");
            char* end = nullptr;
            exp10 = std::strtol(expstr.c_str(), &end, 10);
            if (*end != '\0') throw InvalidArgument("malformed literal '" + text + "'");
        }
        auto dot = mantissa.find('.');
        std::string digits = mantissa;
        if (dot != std::string::npos) {
            digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
            exp10 -= static_cast<long>(mantissa.size() - dot - 1);
        }
        if (!all_digits(digits))
            throw InvalidArgument("malformed numeric literal '" + text + "'");
        Integer p(digits, 10);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
        if (exp10 >= 0)
            result = Rational(p * scale);
        else {
            result = Rational(p, scale);
            result.canonicalize();
        }
    }
    if (negative) result = -result;
    return result;
}

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational result = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1UL;
    }
    return result;
}

} // namespace crn
