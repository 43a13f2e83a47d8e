// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] must point at the floorlog CLI binary (used by criterion 9).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "floorlog/config.hpp"
#include "floorlog/errors.hpp"
#include "floorlog/kernel.hpp"
#include "floorlog/recurrence.hpp"
#include "floorlog/series.hpp"

using namespace floorlog;

namespace {

std::string g_cli_path;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::vector<AlphaSpec> alpha_set() {
    return {AlphaSpec::parse("0"),      AlphaSpec::parse("1"),
            AlphaSpec::parse("-1/2"),   AlphaSpec::parse("1/2"),
            AlphaSpec::parse("1/3"),    AlphaSpec::parse("log(3)"),
            AlphaSpec::parse("1/2+log(5/3)")};
}

const std::vector<unsigned> kBases = {2, 3, 5, 10};

std::vector<Int> b_prefix(unsigned k, const AlphaSpec& a, long count) {
    std::vector<Int> b;
    b.push_back(floor_alpha_plus_log(k, a, 0));
    for (long m = 1; m < count; ++m) b.push_back(b_closed_form(k, a, m));
    return b;
}

// --- criterion 1: the displayed coefficients, both routes, under a second ---
Outcome criterion1() {
    Outcome out;
    AlphaSpec half = AlphaSpec::parse("1/2");
    const long expect[] = {1, 4, 11, 29, 74, 179, 422, 971, 2198};
    for (long m = 1; m <= 9; ++m) {
        out.require(b_bruteforce(2, half, m) == expect[m - 1],
                    "b_bruteforce(2,1/2," + std::to_string(m) + ")");
        out.require(b_closed_form(2, half, m) == expect[m - 1],
                    "b_closed_form(2,1/2," + std::to_string(m) + ")");
    }
    return out;
}

// --- criterion 2: closed form == brute force wherever the budget allows ---
Outcome criterion2() {
    Outcome out;
    for (unsigned k : kBases) {
        for (const AlphaSpec& a : alpha_set()) {
            for (long m = 1; m <= 20; ++m) {
                if (ipow(Int(k), static_cast<unsigned long>(m)) >
                    Int(static_cast<long>(summation_budget())))
                    break;
                if (b_closed_form(k, a, m) != b_bruteforce(k, a, m)) {
                    out.require(false, "mismatch k=" + std::to_string(k) + " alpha=" + a.str() +
                                           " m=" + std::to_string(m));
                }
            }
        }
    }
    return out;
}

// --- criterion 3: the two closed expressions for the k=2, alpha=1/2 case ---
Outcome criterion3() {
    Outcome out;
    AlphaSpec half = AlphaSpec::parse("1/2");
    for (long m = 1; m <= 20; ++m) {
        SpecialCaseK2Half s = b_special_case_k2_half(m); // checks the two-block form itself
        Int pow_half = ipow(Int(2), static_cast<unsigned long>(m - 1));
        out.require(s.b == (m + 1) * pow_half - s.c, "direct form m=" + std::to_string(m));
        out.require(s.b == b_closed_form(2, half, m), "general closed form m=" + std::to_string(m));
        out.require(s.c == iroot_floor(ipow(Int(2), static_cast<unsigned long>(2 * m - 1)), 2),
                    "c(m) root m=" + std::to_string(m));
    }
    return out;
}

// --- criterion 4: b(m) = [x^m] rational part + floor term, m <= 30 ---
Outcome criterion4() {
    Outcome out;
    for (unsigned k : kBases) {
        for (const AlphaSpec& a : alpha_set()) {
            RationalFunctionQ rp = rational_part(k, a);
            for (long m = 1; m <= 30; ++m) {
                Rat rhs = rp.taylor(m) +
                          Rat(floor_k_power(k, a, m, Sign::negative, Rounding::floor));
                if (Rat(b_closed_form(k, a, m)) != rhs)
                    out.require(false, "k=" + std::to_string(k) + " alpha=" + a.str() +
                                           " m=" + std::to_string(m));
            }
        }
    }
    return out;
}

// --- criterion 5: digit identity through m = 64, digits in range ---
Outcome criterion5() {
    Outcome out;
    for (unsigned k : kBases) {
        for (const AlphaSpec& a : alpha_set()) {
            GTransform g = g_coefficients(k, a, 64);
            std::vector<int> oracle = digit_oracle(k, a, 64);
            out.require(g.g == oracle, "g != oracle for k=" + std::to_string(k) +
                                           " alpha=" + a.str());
            for (int d : g.g)
                out.require(d >= 0 && d < static_cast<int>(k),
                            "digit range k=" + std::to_string(k) + " alpha=" + a.str());
        }
    }
    return out;
}

// --- criterion 6: the desk-scale dichotomy ---
Outcome criterion6() {
    Outcome out;
    for (unsigned k : kBases) {
        for (const AlphaSpec& a : alpha_set()) {
            const std::string tag = "k=" + std::to_string(k) + " alpha=" + a.str();
            GTransform g = g_coefficients(k, a, 64);
            auto period = detect_period(g.g, 64);
            if (classify_k_alpha(k, a).rational) {
                out.require(period.has_value(), tag + ": period expected");
                auto f = series_to_rational(b_prefix(k, a, 18), 8);
                out.require(f.has_value(), tag + ": rational gf expected");
                if (f) {
                    bool extends = true;
                    for (long m = 0; m <= 30; ++m) {
                        Int expect = m == 0 ? floor_alpha_plus_log(k, a, 0)
                                            : b_closed_form(k, a, m);
                        extends = extends && f->taylor(m) == Rat(expect);
                    }
                    out.require(extends, tag + ": gf must extend to m<=30");
                }
            } else {
                auto lin = guess_linear_recurrence(b_prefix(k, a, 60), 20);
                out.require(!lin.has_value(), tag + ": unexpected linear recurrence");
                out.require(!period || period->preperiod + period->period > 20,
                            tag + ": unexpected short period");
                std::vector<Int> gd;
                for (int d : g.g) gd.emplace_back(d);
                auto prec = guess_polynomial_recurrence(gd, 3, 3);
                out.require(!prec.has_value(), tag + ": unexpected polynomial recurrence");
            }
        }
    }
    return out;
}

// --- criterion 7: kernel rank evidence, as stated ---
Outcome criterion7() {
    Outcome out;
    AlphaSpec zero = AlphaSpec::parse("0");
    RankProfile p = rank_profile(2, zero, 6, 4096);
    out.require(p.stabilized, "alpha=0 must stabilize by e_max=6 at trunc 4096");
    int plateau = p.ranks.back();
    for (long trunc : {1024L, 4096L, 16384L}) {
        RankProfile q = rank_profile(2, zero, 6, trunc);
        out.require(q.ranks.back() == plateau,
                    "alpha=0 plateau at trunc " + std::to_string(trunc));
    }
    AlphaSpec half = AlphaSpec::parse("1/2");
    RankProfile h = rank_profile(2, half, 8, 16384);
    std::string ranks;
    for (int r : h.ranks) ranks += std::to_string(r) + " ";
    for (size_t e = 2; e <= 8; ++e) {
        if (!(h.ranks[e] >= h.ranks[e - 1] + 1))
            out.require(false, "alpha=1/2 rank must strictly increase at e=" +
                                   std::to_string(e) + " (profile: " + ranks + ")");
    }
    if (!out.pass)
        std::cerr << "note: the alpha=1/2 profile saturates once e exceeds ~log2(trunc_len)"
                     " scale; jump positions are exponentially spaced, so a fixed window"
                     " cannot witness strict growth through e=8. Growth in trunc_len"
                     " (13,15,17 at 2^10,2^12,2^14 for e=8) is the visible evidence.\n";
    return out;
}

// --- criterion 8: commutative projection vs the bivariate expansion ---
struct BivariateSeries {
    int cap;
    std::vector<std::vector<Int>> c; // c[d0][d1], total degree <= cap

    explicit BivariateSeries(int cap_) : cap(cap_), c(static_cast<size_t>(cap_) + 1) {
        for (auto& row : c) row.assign(static_cast<size_t>(cap) + 1, Int(0));
    }
    // divide by (1 - u) where u is a short polynomial: R = S + u*R by degree
    void divide(const std::vector<std::pair<std::pair<int, int>, Int>>& u) {
        for (int d = 0; d <= cap; ++d) {
            for (int d0 = 0; d0 <= d; ++d0) {
                int d1 = d - d0;
                Int s = c[static_cast<size_t>(d0)][static_cast<size_t>(d1)];
                for (const auto& [mono, coef] : u) {
                    int a = d0 - mono.first, b = d1 - mono.second;
                    if (a >= 0 && b >= 0) s += coef * c[static_cast<size_t>(a)][static_cast<size_t>(b)];
                }
                c[static_cast<size_t>(d0)][static_cast<size_t>(d1)] = s;
            }
        }
    }
};

Outcome criterion8() {
    Outcome out;
    constexpr int cap = 12;
    // x1 (1 - x0 - x1 + x0^2 + x0 x1) / ((1 - x1)(1 - x0 - x1)^2)
    BivariateSeries s(cap);
    s.c[0][1] = 1;
    s.c[1][1] = -1;
    s.c[0][2] = -1;
    s.c[2][1] = 1;
    s.c[1][2] = 1;
    s.divide({{{0, 1}, Int(1)}});
    s.divide({{{1, 0}, Int(1)}, {{0, 1}, Int(1)}});
    s.divide({{{1, 0}, Int(1)}, {{0, 1}, Int(1)}});

    auto proj = commutative_projection(nc_series_terms(2, AlphaSpec::parse("0"), cap));
    for (int d0 = 0; d0 <= cap; ++d0) {
        for (int d1 = 0; d1 + d0 <= cap; ++d1) {
            auto it = proj.find({d0, d1});
            Int brute = it == proj.end() ? Int(0) : it->second;
            if (brute != s.c[static_cast<size_t>(d0)][static_cast<size_t>(d1)])
                out.require(false, "(" + std::to_string(d0) + "," + std::to_string(d1) + ")");
        }
    }
    return out;
}

// --- criterion 9: headless determinism and the exit-code contract ---
int run_cli(const std::string& args, const std::string& stdout_file) {
    std::string cmd = g_cli_path + " " + args + " > " + stdout_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion9() {
    Outcome out;
    const std::string dir = "acceptance_tmp";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) out.require(false, "mkdir");

    const std::string report_args =
        "report --k 2 --alpha 1/2 --mmax 8 --emax 4 --trunc 1024 --seed 42";
    out.require(run_cli(report_args, dir + "/r1.json") == 0, "report run 1 exit");
    out.require(run_cli(report_args, dir + "/r2.json") == 0, "report run 2 exit");
    std::string r1 = slurp(dir + "/r1.json"), r2 = slurp(dir + "/r2.json");
    out.require(!r1.empty() && r1 == r2, "reports must be byte-identical");

    out.require(run_cli("report --k 2 --alpha 0 --mmax 8 --emax 4 --trunc 1024 --seed 1",
                        dir + "/r0.json") == 0,
                "report alpha=0 exit");
    out.require(slurp(dir + "/r0.json").find("\"rational\": true") != std::string::npos,
                "alpha=0 report must classify k^alpha rational");

    out.require(run_cli("terms --k 2 --alpha 1/2 --count 0", dir + "/empty.txt") == 0,
                "terms --count 0 exit");
    out.require(slurp(dir + "/empty.txt").empty(), "terms --count 0 output");
    out.require(run_cli("kernel --k 2 --alpha 0 --emax 1 --trunc 64", dir + "/k.txt") == 2,
                "kernel --emax 1 must exit 2");
    out.require(run_cli("terms --k 2 --alpha not_an_alpha", dir + "/bad.txt") == 2,
                "bad alpha must exit 2");
    out.require(run_cli("coeffs --k 2 --alpha 1/2 --mmax 26", dir + "/budget.txt") == 3,
                "over-budget coeffs must exit 3");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    g_cli_path = argc > 1 ? argv[1] : "./tools/floorlog";

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit_s; // 0 = no stated budget
    };
    const std::vector<Criterion> criteria = {
        {1, "coefficient table b(1..9), both routes", criterion1, 1.0},
        {2, "closed-form equivalence sweep", criterion2, 120.0},
        {3, "k=2 alpha=1/2 special-case identities", criterion3, 0},
        {4, "decomposition identity m<=30", criterion4, 0},
        {5, "digit identity through m=64", criterion5, 30.0},
        {6, "rational/irrational dichotomy at desk scale", criterion6, 120.0},
        {7, "kernel rank evidence", criterion7, 180.0},
        {8, "commutative projection vs bivariate expansion", criterion8, 0},
        {9, "deterministic reports and exit codes", criterion9, 0},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget ") +
                          std::to_string(c.limit_s) + "s";
        }
        char line[64];
        std::snprintf(line, sizeof(line), "(%.2fs)", secs);
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " " << line;
        if (!out.detail.empty()) std::cout << " -- " << out.detail;
        std::cout << std::endl;
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
