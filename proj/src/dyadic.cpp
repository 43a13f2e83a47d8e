#include "floorlog/dyadic.hpp"

#include "floorlog/errors.hpp"

namespace floorlog {

namespace {

Int cdiv(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Rat dyadic(const Int& num, unsigned shift) {
    Rat r(num, Int(1) << shift);
    r.canonicalize();
    return r;
}

} // namespace

DyadicBounds log_k_bounds(unsigned k, const Int& num, const Int& den, unsigned prec_bits) {
    if (k < 2 || num < 1 || den < 1) throw parameter_error("log_k_bounds: bad arguments");
    if (num == den) return {0, 0, true};
    if (num < den) {
        DyadicBounds inv = log_k_bounds(k, den, num, prec_bits);
        return {-inv.hi, -inv.lo, inv.exact};
    }

    // integer part: largest t with k^t * den <= num
    long t = 0;
    Int pw = 1;
    while (pw * k * den <= num) {
        pw *= k;
        ++t;
    }
    Int mant_den = den * pw; // y = num / mant_den in [1, k)

    // scaled mantissa interval [Ylo, Yhi] ~ y * 2^F; squaring doubles the
    // relative error, so F = 2*prec + guard keeps prec bits decidable
    const unsigned F = 2 * prec_bits + 64;
    const Int one = Int(1) << F;
    const Int bound = Int(k) << F;
    Int ylo = fdiv(num << F, mant_den);
    Int yhi = cdiv(num << F, mant_den);

    Int bits = 0;
    unsigned done = 0;
    while (done < prec_bits) {
        if (ylo == one && yhi == one) {
            // mantissa hit exactly 1: the remaining expansion is all zeros
            Rat v = Rat(t) + dyadic(bits, done);
            return {v, v, true};
        }
        ylo = (ylo * ylo) >> F;
        yhi = cdiv(yhi * yhi, one);
        ++done;
        if (yhi < bound) {
            bits <<= 1;
        } else if (ylo >= bound) {
            bits <<= 1;
            bits += 1;
            ylo = fdiv(ylo, Int(k));
            yhi = cdiv(yhi, Int(k));
        } else {
            --done; // this bit is not decidable at this precision
            break;
        }
    }
    return {Rat(t) + dyadic(bits, done), Rat(t) + dyadic(bits + 1, done), false};
}

} // namespace floorlog
