#include "floorlog/alpha.hpp"

#include <cctype>
#include <utility>

#include "floorlog/config.hpp"
#include "floorlog/dyadic.hpp"
#include "floorlog/errors.hpp"

namespace floorlog {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_int(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t.erase(0, 1);
    }
    if (!all_digits(t)) throw parse_error("bad integer: '" + s + "'");
    Int v(t);
    return neg ? Int(-v) : v;
}

Rat parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    std::string den_s = s.substr(slash + 1);
    if (!all_digits(den_s)) throw parse_error("bad denominator: '" + s + "'");
    Int den(den_s);
    if (den == 0) throw parse_error("zero denominator: '" + s + "'");
    return make_rat(num, den);
}

// "12.345" / "-0.5" / plain integer / "a/b"
Rat parse_decimal_or_fraction(const std::string& s) {
    if (s.find('/') != std::string::npos) return parse_fraction(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(parse_int(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) {
        neg = ip[0] == '-';
        ip.erase(0, 1);
    }
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp)) throw parse_error("bad decimal: '" + s + "'");
    Int scale = ipow(10ul, static_cast<unsigned long>(fp.size()));
    Int units = Int(ip) * scale + Int(fp);
    Rat v = make_rat(units, scale);
    return neg ? Rat(-v) : v;
}

// inside of "log(...)": "p" or "p/q", positive
std::pair<Int, Int> parse_log_body(const std::string& s) {
    auto slash = s.find('/');
    std::string ps = slash == std::string::npos ? s : s.substr(0, slash);
    std::string qs = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!all_digits(ps) || !all_digits(qs)) throw parse_error("bad log argument: '" + s + "'");
    Int p(ps), q(qs);
    if (p == 0 || q == 0) throw parse_error("log argument must be positive: '" + s + "'");
    return {p, q};
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace

AlphaSpec AlphaSpec::rational(Rat r) {
    AlphaSpec a;
    a.exact_ = true;
    r.canonicalize();
    a.r_ = std::move(r);
    return a;
}

AlphaSpec AlphaSpec::with_log(Rat r, Int p, Int q) {
    if (p < 1 || q < 1) throw parameter_error("log argument must be positive");
    AlphaSpec a;
    a.exact_ = true;
    r.canonicalize();
    a.r_ = std::move(r);
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    a.p_ = p / g;
    a.q_ = q / g;
    return a;
}

AlphaSpec AlphaSpec::decimal_interval(Rat mid, Rat radius) {
    if (radius <= 0) throw parameter_error("interval radius must be positive");
    AlphaSpec a;
    a.exact_ = false;
    mid.canonicalize();
    radius.canonicalize();
    a.mid_ = std::move(mid);
    a.radius_ = std::move(radius);
    return a;
}

AlphaSpec AlphaSpec::parse(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw parse_error("empty alpha");

    if (s.rfind("dec:", 0) == 0) {
        std::string body = s.substr(4);
        auto tilde = body.find('~');
        if (tilde == std::string::npos)
            throw parse_error("interval alpha needs 'dec:<midpoint>~<radius>': '" + text + "'");
        Rat mid = parse_decimal_or_fraction(body.substr(0, tilde));
        Rat rad = parse_decimal_or_fraction(body.substr(tilde + 1));
        if (rad <= 0) throw parse_error("interval radius must be positive: '" + text + "'");
        return decimal_interval(mid, rad);
    }

    auto close = s.rfind(')');
    auto open = s.find("log(");
    if (open != std::string::npos) {
        if (close != s.size() - 1)
            throw parse_error("malformed log term: '" + text + "'");
        auto [p, q] = parse_log_body(s.substr(open + 4, close - open - 4));
        if (open == 0) return with_log(Rat(0), p, q);
        if (s[open - 1] != '+')
            throw parse_error("expected 'r+log(p/q)': '" + text + "'");
        return with_log(parse_fraction(s.substr(0, open - 1)), p, q);
    }
    return rational(parse_fraction(s));
}

AlphaSpec AlphaSpec::canonical(unsigned k) const {
    if (!exact_) return *this;
    Int p = p_, q = q_;
    Rat r = r_;
    Int kz(k);
    unsigned long a = mpz_remove(p.get_mpz_t(), p.get_mpz_t(), kz.get_mpz_t());
    unsigned long b = mpz_remove(q.get_mpz_t(), q.get_mpz_t(), kz.get_mpz_t());
    r += static_cast<long>(a);
    r -= static_cast<long>(b);
    return with_log(r, p, q);
}

bool AlphaSpec::same_value(const AlphaSpec& other, unsigned k) const {
    if (!exact_ || !other.exact_) return false;
    AlphaSpec x = canonical(k), y = other.canonical(k);
    return x.r_ == y.r_ && x.p_ == y.p_ && x.q_ == y.q_;
}

std::string AlphaSpec::str() const {
    if (!exact_) return "dec:" + rat_str(mid_) + "~" + rat_str(radius_);
    if (p_ == 1 && q_ == 1) return rat_str(r_);
    std::string log = "log(" + p_.get_str() + (q_ == 1 ? "" : "/" + q_.get_str()) + ")";
    if (r_ == 0) return log;
    return rat_str(r_) + "+" + log;
}

namespace {

// Exact power comparisons need k^|e| and v-th powers as plain integers.
unsigned long checked_exponent(const Int& e, const char* what) {
    if (!fits_ulong(e)) throw parameter_error(std::string(what) + " out of supported range");
    return e.get_ui();
}

// k^(j - alpha) <= x, exact. With alpha = u/v + log_k(p/q) this is
// k^(jv-u) * q^v <= (x*p)^v, cross-multiplied when the exponent is negative.
bool power_le(unsigned k, const AlphaSpec& alpha, const Int& j, const Int& x) {
    const Int u = alpha.r().get_num();
    const unsigned long v = checked_exponent(alpha.r().get_den(), "alpha denominator");
    Int e = j * static_cast<long>(v) - u;
    Int lhs = ipow(alpha.log_den(), v);
    Int rhs = ipow(x * alpha.log_num(), v);
    if (e >= 0)
        lhs *= ipow(Int(k), checked_exponent(e, "power exponent"));
    else
        rhs *= ipow(Int(k), checked_exponent(Int(-e), "power exponent"));
    return lhs <= rhs;
}

// Base-k digit count of x >= 1.
long digit_count(unsigned k, const Int& x) {
    long c = 0;
    Int t = 1;
    while (t <= x) {
        t *= k;
        ++c;
    }
    return c;
}

Int floor_exact(unsigned k, const AlphaSpec& alpha, const Int& n) {
    const Int x = n + 1;
    // a(n) is within a couple of units of floor(r) + len(p) - len(q) + len(x) - 1
    Int j = rat_floor(alpha.r()) + digit_count(k, alpha.log_num()) -
            digit_count(k, alpha.log_den()) + digit_count(k, x);
    Int step = 1;
    while (!power_le(k, alpha, j, x)) {
        j -= step;
        step *= 2;
    }
    step = 1;
    while (power_le(k, alpha, j + step, x)) {
        j += step;
        step *= 2;
    }
    // invariant: power_le(j) && !power_le(j+step); shrink
    while (step > 1) {
        step /= 2;
        if (power_le(k, alpha, j + step, x)) j += step;
    }
    return j;
}

Int floor_interval(unsigned k, const AlphaSpec& alpha, const Int& n) {
    const Int x = n + 1;
    const Rat lo0 = alpha.interval_mid() - alpha.interval_radius();
    const Rat hi0 = alpha.interval_mid() + alpha.interval_radius();
    for (unsigned prec = 64;; prec *= 2) {
        DyadicBounds b = log_k_bounds(k, x, 1, prec);
        Int flo = rat_floor(lo0 + b.lo);
        Int fhi = rat_floor(hi0 + b.hi);
        if (flo == fhi) return flo;
        if (b.exact || prec >= kIntervalPrecisionCap)
            throw ambiguous_floor_error(
                "ambiguous floor: alpha interval spans the integer " + fhi.get_str() +
                " at n=" + n.get_str() + (b.exact ? " (log term exact; radius too wide)"
                                                  : " even at " + std::to_string(kIntervalPrecisionCap) +
                                                        " fractional bits"));
    }
}

} // namespace

KAlphaClass classify_k_alpha(unsigned k, const AlphaSpec& alpha) {
    if (k < 2) throw parameter_error("base k must be >= 2");
    if (!alpha.is_exact())
        throw undecidable_error("undecidable representation: interval alpha cannot decide rationality of k^alpha");
    const Int u = alpha.r().get_num();
    const unsigned long v = checked_exponent(alpha.r().get_den(), "alpha denominator");
    Int au;
    mpz_abs(au.get_mpz_t(), u.get_mpz_t());
    Int base = ipow(Int(k), checked_exponent(au, "alpha exponent"));
    Int root;
    if (!perfect_root(base, v, root)) return {false, 0};
    Rat value = u >= 0 ? Rat(root) : make_rat(1, root);
    value *= make_rat(alpha.log_num(), alpha.log_den());
    value.canonicalize();
    return {true, value};
}

Int floor_alpha_plus_log(unsigned k, const AlphaSpec& alpha, const Int& n) {
    if (k < 2) throw parameter_error("base k must be >= 2");
    if (n < 0) throw parameter_error("n must be >= 0");
    return alpha.is_exact() ? floor_exact(k, alpha, n) : floor_interval(k, alpha, n);
}

std::pair<Int, AlphaSpec> floor_and_frac_alpha(unsigned k, const AlphaSpec& alpha) {
    if (!alpha.is_exact()) throw parameter_error("exact alpha required");
    Int f = floor_alpha_plus_log(k, alpha, 0);
    Rat rr = alpha.r() - Rat(f);
    Int p = alpha.log_num(), q = alpha.log_den();
    // fold an integer rational part into the log argument, unless alpha is
    // purely rational; log_k(3) - 1 reads back as log_k(3/2)
    if (rr.get_den() == 1 && rr != 0 && !(p == 1 && q == 1)) {
        Int e = rr.get_num();
        if (e > 0)
            p *= ipow(Int(k), checked_exponent(e, "fold exponent"));
        else
            q *= ipow(Int(k), checked_exponent(Int(-e), "fold exponent"));
        rr = 0;
    }
    return {f, AlphaSpec::with_log(rr, p, q)};
}

Int floor_k_power(unsigned k, const AlphaSpec& alpha, long m, Sign sign, Rounding mode) {
    if (k < 2) throw parameter_error("base k must be >= 2");
    if (!alpha.is_exact()) throw parameter_error("exact alpha required");
    if (m < 0) throw parameter_error("exponent m must be >= 0");
    auto [fl, theta] = floor_and_frac_alpha(k, alpha);
    const Int u = theta.r().get_num();
    const unsigned long v = checked_exponent(theta.r().get_den(), "alpha denominator");
    // k^(m - theta) = (k^(mv-u) * q^v / p^v)^(1/v)
    Int e = Int(m) * static_cast<long>(v) - u;
    Int num = ipow(theta.log_den(), v);
    Int den = ipow(theta.log_num(), v);
    if (e >= 0)
        num *= ipow(Int(k), checked_exponent(e, "power exponent"));
    else
        den *= ipow(Int(k), checked_exponent(Int(-e), "power exponent"));
    Int t = iroot_floor(fdiv(num, den), v);
    bool exact = ipow(t, v) * den == num;
    Int ceil_pos = exact ? t : Int(t + 1);
    if (sign == Sign::positive) return mode == Rounding::floor ? t : ceil_pos;
    return mode == Rounding::floor ? Int(-ceil_pos) : Int(-t);
}

} // namespace floorlog
