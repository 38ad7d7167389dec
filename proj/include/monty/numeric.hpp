// Exact scalar layer: arbitrary-precision integers and canonical rationals
// on top of GMP, plus the handful of helpers the rest of the library needs.

#ifndef MONTY_NUMERIC_HPP
#define MONTY_NUMERIC_HPP

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monty {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_gcd(std::span<const Int> xs) {
    Int g = 0;
    for (const Int& x : xs) {
        g = int_gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// b^e for possibly negative e; requires b != 0 when e < 0.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::invalid_argument("rat_pow: zero base, negative exponent");
    Rat r;
    mpq_class b = base;
    unsigned long ue = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), ue);
    mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), ue);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("div_exact: non-exact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a mod m in [0, m); requires m >= 1.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_floor: modulus < 1");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool invert_mod(Int& out, const Int& a, const Int& m) {
    return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

// Always "num/den", lowest terms, den > 0.
inline std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    Int x;
    if (mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_int: bad integer '" + s + "'");
    return x;
}

// Accepts "num/den" or a bare integer.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace monty

#endif
