#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace rootrat {

/// Exact arbitrary-precision rational number.
using Rational = mpq_class;

/// Raised on malformed text input (expressions, numbers, CLI values).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Raised on domain violations in exact arithmetic (division by zero,
/// invalid homogenization degree, second root token, ...).
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& message) : std::runtime_error(message) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw MathError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal: " + text, 0);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw MathError("zero raised to a negative power");
    Rational out;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    if (exp < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    out.canonicalize();
    return out;
}

/// Exact square root of a rational, if it is a perfect square.
inline std::optional<Rational> sqrt_rational(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational root(rn, rd);
    root.canonicalize();
    return root;
}

/// Largest s (by square) with q = s^2 * q' and q' having square-free
/// integer numerator and denominator parts; returns (s, q').
inline std::pair<Rational, Rational> square_part_rational(const Rational& q) {
    if (q == 0) return {Rational(1), Rational(0)};
    auto int_square_part = [](const mpz_class& n) {
        mpz_class m = abs(n), s = 1, f = 2;
        // trial division is fine: inputs here are small desk-scale constants
        mpz_class rem = m;
        while (f * f <= rem) {
            int e = 0;
            while (mpz_divisible_p(rem.get_mpz_t(), f.get_mpz_t())) {
                rem /= f;
                ++e;
            }
            for (int i = 0; i + 1 < e; i += 2) s *= f;
            ++f;
        }
        return s;
    };
    mpz_class sn = int_square_part(q.get_num());
    mpz_class sd = int_square_part(q.get_den());
    Rational s(sn, sd);
    s.canonicalize();
    Rational rest = q / (s * s);
    return {s, rest};
}

} // namespace rootrat
