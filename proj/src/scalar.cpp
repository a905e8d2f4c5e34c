#include <selim/scalar.hpp>

#include <selim/error.hpp>

#include <cctype>
#include <cstdlib>

namespace selim {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw schema_error("malformed rational literal: \"" + text + "\"");
    Rational value;
    if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0)
        throw schema_error("malformed rational literal: \"" + text + "\"");
    if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0)
        throw schema_error("zero denominator in rational literal: \"" + text + "\"");
    value.canonicalize();
    return value;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw domain_error("zero denominator");
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_string(const Integer& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, std::int64_t exp) {
    if (exp == 0)
        return Rational(1);
    if (base == 0) {
        if (exp < 0)
            throw domain_error("zero raised to a negative power");
        return Rational(0);
    }
    const auto e = static_cast<std::uint64_t>(exp < 0 ? -exp : exp);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    // powers of a canonical rational stay canonical up to sign of the denominator
    if (exp < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
        if (mpz_sgn(mpq_denref(out.get_mpq_t())) < 0) {
            mpz_neg(mpq_numref(out.get_mpq_t()), mpq_numref(out.get_mpq_t()));
            mpz_neg(mpq_denref(out.get_mpq_t()), mpq_denref(out.get_mpq_t()));
        }
    }
    return out;
}

Integer integer_pow(const Integer& base, std::uint64_t exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

bool is_integer(const Rational& value) {
    return mpz_cmp_ui(mpq_denref(value.get_mpq_t()), 1) == 0;
}

Integer to_integer(const Rational& value) {
    if (!is_integer(value))
        throw domain_error("expected an integer, got " + to_string(value));
    return Integer(mpq_numref(value.get_mpq_t()));
}

bool is_perfect_square(const Rational& value) {
    if (value < 0)
        return false;
    return mpz_perfect_square_p(mpq_numref(value.get_mpq_t())) != 0 &&
           mpz_perfect_square_p(mpq_denref(value.get_mpq_t())) != 0;
}

Rational exact_sqrt(const Rational& value) {
    if (!is_perfect_square(value))
        throw domain_error(to_string(value) + " is not a perfect square");
    Rational out;
    mpz_sqrt(mpq_numref(out.get_mpq_t()), mpq_numref(value.get_mpq_t()));
    mpz_sqrt(mpq_denref(out.get_mpq_t()), mpq_denref(value.get_mpq_t()));
    return out;
}

} // namespace selim
