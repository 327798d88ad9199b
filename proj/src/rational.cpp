#include "meixner/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace meixner {

namespace {

// [sign] digits [. digits] [eE [sign] digits] -> exact rational
Rational parse_decimal(const std::string& text) {
    const std::size_t epos = text.find_first_of("eE");
    const std::string mantissa = epos == std::string::npos ? text : text.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        exp10 = std::stol(text.substr(epos + 1));
    }
    std::string digits = mantissa;
    const std::size_t dot = mantissa.find('.');
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    const Integer num(digits, 10);
    Integer scale;
    const unsigned long mag = static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10);
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, mag);
    Rational value(num);
    if (exp10 < 0) {
        value /= Rational(scale);
    } else {
        value *= Rational(scale);
    }
    return value;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    const auto not_space = [](unsigned char ch) { return std::isspace(ch) == 0; };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    if (s.find('/') == std::string::npos && s.find_first_of(".eE") != std::string::npos) {
        return parse_decimal(s);
    }
    Rational value;
    if (mpq_set_str(value.get_mpq_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) {
        throw std::invalid_argument("zero denominator: " + s);
    }
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational pochhammer(const Rational& a, int k) {
    if (k < 0) {
        throw std::invalid_argument("pochhammer: negative order");
    }
    Rational result(1);
    Rational factor(a);
    for (int step = 0; step < k; ++step) {
        result *= factor;
        factor += 1;
    }
    return result;
}

Rational pow_int(const Rational& base, long e) {
    if (e == 0) {
        return Rational(1);
    }
    const bool invert = e < 0;
    if (invert && base == 0) {
        throw std::domain_error("pow_int: zero base with negative exponent");
    }
    const unsigned long mag = invert ? static_cast<unsigned long>(-(e + 1)) + 1
                                     : static_cast<unsigned long>(e);
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag);
    if (invert) {
        std::swap(num, den);
    }
    Rational result(num, den);
    result.canonicalize();
    return result;
}

Integer factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

bool is_nonpositive_integer(const Rational& value) {
    return value <= 0 && value.get_den() == 1;
}

}  // namespace meixner
