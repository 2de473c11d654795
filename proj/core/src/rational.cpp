#include "relfix/rational.hpp"

#include "relfix/error.hpp"

namespace relfix {

namespace {

bool valid_integer_text(std::string_view text) {
    if (text.empty()) return false;
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view numText = text.substr(0, slash);
    std::string_view denText = slash == std::string_view::npos ? std::string_view{}
                                                               : text.substr(slash + 1);
    if (!valid_integer_text(numText) ||
        (slash != std::string_view::npos && !valid_integer_text(denText))) {
        throw InstanceError("not a rational: '" + std::string(text) +
                            "' (expected 'p' or 'p/q' with integer p, q)");
    }
    mpz_class num(std::string(numText), 10);
    mpz_class den = slash == std::string_view::npos ? mpz_class(1)
                                                    : mpz_class(std::string(denText), 10);
    if (den == 0) {
        throw InstanceError("zero denominator in rational '" + std::string(text) + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // base was canonical, so num^e / den^e already is.
    return result;
}

} // namespace relfix
