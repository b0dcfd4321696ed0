#include "toric_volume/rational.hpp"

#include "toric_volume/errors.hpp"

#include <cctype>
#include <string>

namespace toric {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer parse_integer(std::string_view text)
{
    auto s = trim(text);
    if (!is_integer_literal(s))
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s));
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_integer_literal(trim(num)) || !is_integer_literal(trim(den)))
        throw ValidationError("not a rational 'a/b': '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_string(const Integer& value)
{
    return value.get_str(10);
}

std::string to_decimal(const Rational& value, int digits)
{
    if (digits < 0)
        digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    Integer num = abs(value.get_num()) * scale;
    const Integer& den = value.get_den();
    // round half away from zero: floor((2*num + den) / (2*den))
    Integer scaled = (2 * num + den) / (2 * den);

    std::string body = scaled.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    bool negative = value < 0 && scaled != 0;
    return negative ? "-" + body : body;
}

Integer ceil(const Rational& value)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

Integer floor(const Rational& value)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer next_coprime(const Integer& from, const Integer& modulus)
{
    if (modulus == 0)
        throw DomainError("next_coprime: modulus must be nonzero");
    Integer m = from;
    while (gcd(m, modulus) != 1)
        ++m;
    return m;
}

} // namespace toric
