#include "floorlog/polynomial.hpp"

#include <algorithm>

#include "floorlog/errors.hpp"

namespace floorlog {

IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long poly_degree(const IntPoly& p) {
    return static_cast<long>(p.size()) - 1;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

Int poly_content(const IntPoly& p) {
    return vec_content(p);
}

IntPoly poly_primitive(const IntPoly& p) {
    Int c = poly_content(p);
    if (c == 0 || c == 1) return p;
    IntPoly r = p;
    for (Int& x : r) x /= c;
    return r;
}

namespace {

using QPoly = std::vector<Rat>;

QPoly to_q(const IntPoly& p) {
    QPoly r;
    r.reserve(p.size());
    for (const Int& c : p) r.emplace_back(c);
    return r;
}

QPoly q_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly q_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = q_trim(std::move(a));
    }
    return a;
}

IntPoly clear_denominators(const QPoly& p) {
    Int l = 1;
    for (const Rat& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly r;
    r.reserve(p.size());
    for (const Rat& c : p) {
        Rat s = c * l;
        r.push_back(s.get_num());
    }
    return r;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
    IntPoly a = poly_trim(a0), b = poly_trim(b0);
    if (a.empty()) return poly_primitive(b);
    if (b.empty()) return poly_primitive(a);
    QPoly x = to_q(a), y = to_q(b);
    while (!y.empty()) {
        QPoly r = q_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    IntPoly g = poly_primitive(clear_denominators(x));
    if (!g.empty() && g.back() < 0)
        for (Int& c : g) c = -c;
    return g;
}

IntPoly poly_divexact(const IntPoly& a0, const IntPoly& b0) {
    IntPoly a = poly_trim(a0), b = poly_trim(b0);
    if (b.empty()) throw internal_error("polynomial division by zero");
    if (a.empty()) return {};
    QPoly r = to_q(a);
    QPoly q(a.size() - b.size() + 1, Rat(0));
    while (r.size() >= b.size() && !r.empty()) {
        Rat f = r.back() / Rat(b.back());
        size_t off = r.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) r[off + i] -= f * Rat(b[i]);
        r = q_trim(std::move(r));
    }
    if (!r.empty()) throw internal_error("inexact polynomial division");
    IntPoly out;
    out.reserve(q.size());
    for (const Rat& c : q) {
        if (c.get_den() != 1) throw internal_error("inexact polynomial division");
        out.push_back(c.get_num());
    }
    return poly_trim(std::move(out));
}

Rat poly_eval(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

std::string poly_str(const IntPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!s.empty()) s += p[i] > 0 ? " + " : " - ";
        else if (p[i] < 0) s += "-";
        Int a;
        mpz_abs(a.get_mpz_t(), p[i].get_mpz_t());
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

RationalFunctionQ RationalFunctionQ::make(IntPoly num, IntPoly den) {
    num = poly_trim(std::move(num));
    den = poly_trim(std::move(den));
    if (den.empty() || den[0] == 0) throw parameter_error("denominator must not vanish at 0");
    if (!num.empty()) {
        IntPoly g = poly_gcd(num, den);
        if (poly_degree(g) > 0 || (g.size() == 1 && g[0] != 1)) {
            num = poly_divexact(num, g);
            den = poly_divexact(den, g);
        }
        Int cn = poly_content(num), cd = poly_content(den);
        Int c;
        mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (c > 1) {
            for (Int& x : num) x /= c;
            for (Int& x : den) x /= c;
        }
    } else {
        den = {Int(1)};
    }
    if (den[0] < 0) {
        for (Int& x : num) x = -x;
        for (Int& x : den) x = -x;
    }
    return RationalFunctionQ(std::move(num), std::move(den));
}

Rat RationalFunctionQ::taylor(long m) const {
    // d0*c_m = n_m - sum_{j>=1} d_j c_{m-j}
    auto& cache = taylor_cache_;
    while (static_cast<long>(cache.size()) <= m) {
        long i = static_cast<long>(cache.size());
        Rat s = i < static_cast<long>(num_.size()) ? Rat(num_[i]) : Rat(0);
        for (long j = 1; j < static_cast<long>(den_.size()) && j <= i; ++j)
            s -= Rat(den_[j]) * cache[i - j];
        s /= Rat(den_[0]);
        cache.push_back(s);
    }
    return cache[m];
}

std::string RationalFunctionQ::str() const {
    return "(" + poly_str(num_) + ") / (" + poly_str(den_) + ")";
}

} // namespace floorlog
