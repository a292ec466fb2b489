#include "kym/rational.hpp"

namespace kym {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(static_cast<long int>(num), static_cast<long int>(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : reciprocal();
    const unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                                  : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view s) {
    // "p" or "p/q": one optional leading sign on p, q unsigned digits.
    const auto is_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (const char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view ns = slash == std::string_view::npos ? s : s.substr(0, slash);
    const std::string_view ds = slash == std::string_view::npos
                                    ? std::string_view{"1"}
                                    : s.substr(slash + 1);
    if (!is_digits(ns) || !is_digits(ds)) return std::nullopt;
    const mpz_class num{std::string(ns)};
    const mpz_class den{std::string(ds)};
    if (den == 0) return std::nullopt;
    return Rational(negative ? mpz_class(-num) : num, den);
}

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

}  // namespace kym
