#ifndef FLOORLOG_ARITH_HPP
#define FLOORLOG_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace floorlog {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// floor(n^(1/k)) for n >= 0.
inline Int iroot_floor(const Int& n, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// If n is an exact k-th power, set root and return true.
inline bool perfect_root(const Int& n, unsigned long k, Int& root) {
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

// floor(num/den) for den > 0 (round toward -infinity).
inline Int fdiv(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& x) {
    return fdiv(x.get_num(), x.get_den());
}

inline bool fits_long(const Int& n) {
    return mpz_fits_slong_p(n.get_mpz_t()) != 0;
}

inline bool fits_ulong(const Int& n) {
    return mpz_fits_ulong_p(n.get_mpz_t()) != 0;
}

inline long to_long(const Int& n) {
    return mpz_get_si(n.get_mpz_t());
}

// gcd of all entries, 0 for an all-zero span.
inline Int vec_content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace floorlog

#endif
