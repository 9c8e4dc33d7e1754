#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symwalk {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// m^{falling p} = m(m-1)...(m-p+1); equals 0 when p > m, and 1 when p = 0.
inline Int falling_factorial(long m, long p) {
    if (m < 0 || p < 0) throw std::invalid_argument("falling_factorial: negative argument");
    if (p > m) return 0;
    Int r = 1;
    for (long i = 0; i < p; ++i) r *= (m - i);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact rational power with nonnegative exponent.
inline Rat pow_rat(const Rat& q, unsigned long e) {
    Rat r(pow_int(q.get_num(), e), pow_int(q.get_den(), e));
    r.canonicalize();
    return r;
}

// Natural log of a positive big integer, via mantissa + binary exponent.
inline double log_int(const Int& z) {
    if (z <= 0) throw std::domain_error("log_int: argument must be positive");
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(m) + static_cast<double>(exp2) * M_LN2;
}

inline double log_rat(const Rat& q) {
    if (q <= 0) throw std::domain_error("log_rat: argument must be positive");
    return log_int(Int(q.get_num())) - log_int(Int(q.get_den()));
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Guard tolerance for inequality checks whose right-hand side is transcendental
// and therefore evaluated in log-space doubles. Exact-rational checks use none.
inline constexpr double kLogGuard = 1e-9;

}  // namespace symwalk
