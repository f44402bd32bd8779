#include "cbp/rational.hpp"

#include <boost/functional/hash.hpp>

#include <stdexcept>

namespace cbp {

BigInt ceil_rational(const Rational& r) {
    // boost::rational keeps the denominator positive
    BigInt q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) {
        ++q;
    }
    return q;
}

std::int64_t ceil_to_int64(const Rational& r) {
    return ceil_rational(r).convert_to<std::int64_t>();
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) {
        return r.numerator().str();
    }
    return r.numerator().str() + "/" + r.denominator().str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

std::size_t hash_value(const Rational& r) {
    std::size_t seed = 0;
    boost::hash_combine(seed, boost::multiprecision::hash_value(r.numerator()));
    boost::hash_combine(seed, boost::multiprecision::hash_value(r.denominator()));
    return seed;
}

}  // namespace cbp
