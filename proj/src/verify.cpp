#include "metallic/verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "metallic/analysis.hpp"
#include "metallic/charpoly.hpp"
#include "metallic/formats.hpp"
#include "metallic/invert.hpp"
#include "metallic/roots.hpp"
#include "metallic/tilings.hpp"

namespace metallic {

namespace {

struct Failure {
    std::string what;
};

class Check {
public:
    void fail(const std::string& msg) {
        if (failures_ < 5) detail_ << (failures_ ? "; " : "") << msg;
        ++failures_;
    }
    void require(bool ok, const std::string& msg) {
        if (!ok) fail(msg);
    }
    void note(const std::string& msg) { note_ = msg; }
    bool ok() const { return failures_ == 0; }
    std::string detail() const {
        if (failures_ == 0) return note_;
        std::ostringstream out;
        out << failures_ << " failure(s): " << detail_.str();
        return out.str();
    }

private:
    int failures_ = 0;
    std::ostringstream detail_;
    std::string note_;
};

struct CommandResult {
    int status = -1;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int st = pclose(pipe);
    if (WIFEXITED(st)) r.status = WEXITSTATUS(st);
    return r;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- check 1: certified enclosures reproduce the published constants ----

void check_mean_constants(Check& c) {
    struct Case {
        int k, m;
        double printed;
    };
    const Case cases[] = {{2, 1, 1.618}, {2, 2, 2.414}, {2, 3, 3.303},
                          {3, 1, 1.839}, {3, 2, 2.547}, {3, 3, 3.383}};
    for (const auto& cs : cases) {
        SequenceSpec spec{cs.k, cs.m};
        RealRootEnclosure enc = dominant_root(spec, 60);
        double mid = to_double(enc.midpoint());
        if (std::abs(mid - cs.printed) > 5e-4) {
            c.fail("k=" + std::to_string(cs.k) + " m=" + std::to_string(cs.m) +
                   ": midpoint " + fmt(mid) + " vs printed " + fmt(cs.printed));
            continue;
        }
        BigFloat closed = cs.k == 2 ? quadratic_closed_form(cs.m) : cubic_closed_form(cs.m);
        Rational exact = to_rational(closed);
        if (!enc.contains(exact))
            c.fail("k=" + std::to_string(cs.k) + " m=" + std::to_string(cs.m) +
                   ": closed form not strictly inside the 60-bit enclosure");
    }
    c.note("6 constants matched; closed forms strictly inside 60-bit enclosures");
}

// ---- check 2: exact reproduction of the published k=3, m=2 terms ----

void check_sequence_reproduction(Check& c, const std::string& cli_path) {
    const char* expected[] = {"1",    "2",    "5",    "13",   "33",   "84",  "214",
                              "545",  "1388", "3535", "9003", "22929", "58396"};
    TermVector g = recurrence_terms(SequenceSpec{3, 2}, 14);
    for (int n = 1; n <= 13; ++n)
        c.require(g[n] == BigInt(expected[n - 1]),
                  "term " + std::to_string(n) + " is " + g[n].str() + ", want " + expected[n - 1]);

    std::string want_bfile;
    for (int n = 1; n <= 13; ++n)
        want_bfile += std::to_string(n) + " " + expected[n - 1] + "\n";
    c.require(to_bfile(g) == want_bfile, "b-file rendering mismatch");

    if (!cli_path.empty()) {
        CommandResult r =
            run_command("'" + cli_path + "' seq --k 3 --m 2 --count 13 --format bfile");
        c.require(r.status == 0, "CLI exited with status " + std::to_string(r.status));
        c.require(r.output == want_bfile, "CLI b-file output differs from the published terms");
        c.note("13 terms exact, library and CLI byte-identical");
    } else {
        c.note("13 terms exact (library only, no CLI path given)");
    }
}

// ---- check 3: (m-1)-fold invert equals the direct recurrence ----

void check_invert_chain(Check& c, int kmax, int mmax) {
    const int N = 40;
    for (int k = 2; k <= kmax; ++k) {
        TermVector base = recurrence_terms(SequenceSpec{k, 1}, N);
        for (int m = 1; m <= mmax; ++m) {
            TermVector direct = recurrence_terms(SequenceSpec{k, m}, N);
            TermVector chained = invert_iterate(base, m - 1);
            if (chained.terms != direct.terms)
                c.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                       ": invert chain diverges from the recurrence");
        }
    }
    c.note("grid k<=" + std::to_string(kmax) + ", m<=" + std::to_string(mmax) +
           ", 40 terms each, term-exact");
}

// ---- check 4: bracket endpoints, root dominance, conjugacy, modulus product ----

void check_bracket_and_dominance(Check& c, int kmax, int mmax) {
    for (int k = 2; k <= kmax; ++k) {
        for (int m = 1; m <= mmax; ++m) {
            SequenceSpec spec{k, m};
            std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": ";

            auto [at_m, at_m1] = endpoint_values(spec);
            if (!(sign_of(at_m) < 0 && sign_of(at_m1) > 0)) {
                c.fail(tag + "endpoint values do not bracket");
                continue;
            }

            ComplexRootSet set;
            try {
                set = all_roots(spec, 1e-10);
            } catch (const RootConvergenceError& e) {
                c.fail(tag + e.what());
                continue;
            }

            int positive_real = 0;
            for (const auto& r : set.roots)
                if (r.real() > 0 && std::abs(r.imag()) <= 1e-9 * (1 + std::abs(r.real())))
                    ++positive_real;
            c.require(positive_real == 1, tag + "expected exactly one positive real root");

            RealRootEnclosure enc = dominant_root(spec, 60);
            double lo = to_double(enc.lo);
            for (size_t i = 0; i < set.roots.size(); ++i) {
                if (static_cast<int>(i) == set.dominant_index) continue;
                if (!(std::abs(set.roots[i]) < lo - 1e-9)) {
                    c.fail(tag + "non-dominant root modulus " + fmt(std::abs(set.roots[i])) +
                           " not strictly below enclosure lo " + fmt(lo));
                    break;
                }
            }

            for (const auto& r : set.roots) {
                double best = 1e300;
                for (const auto& s : set.roots) best = std::min(best, std::abs(s - std::conj(r)));
                if (best > 1e-9) {
                    c.fail(tag + "root multiset not conjugate-closed");
                    break;
                }
            }

            double product = 1;
            for (const auto& r : set.roots) product *= std::abs(r);
            c.require(std::abs(product - 1.0) <= 1e-10,
                      tag + "modulus product " + fmt(product) + " deviates from 1");
        }
    }
    c.note("bracket signs, unique positive root, strict dominance, conjugacy, |roots| product=1");
}

// ---- check 5: simplicity certificate and the q' factorization ----

void check_simplicity(Check& c, int kmax, int mmax) {
    for (int k = 2; k <= kmax; ++k) {
        for (int m = 1; m <= mmax; ++m) {
            SequenceSpec spec{k, m};
            std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": ";

            IntPolynomial p = metallic_charpoly(spec);
            IntPolynomial q = q_poly(spec);
            IntPolynomial x_minus_1{{BigInt(-1), BigInt(1)}};
            c.require(q == x_minus_1 * p, tag + "q != (x-1)p as polynomials");
            c.require(is_squarefree(p), tag + "p_m not squarefree");

            // q'(x) = x^(k-2) ((k+1)x^2 - k(m+1)x + (k-1)(m-1))
            IntPolynomial quad{{BigInt(k - 1) * (m - 1), BigInt(-k) * (m + 1), BigInt(k + 1)}};
            IntPolynomial expected = IntPolynomial::monomial(1, k - 2) * quad;
            c.require(derivative(q) == expected, tag + "q' factorization identity fails");

            BigInt disc = BigInt(k) * k * (m + 1) * (m + 1) -
                          4 * BigInt(k + 1) * (k - 1) * (m - 1);
            BigInt claimed = BigInt(k) * k * (m - 1) * (m - 1) + 4 * (BigInt(k) * k + m - 1);
            c.require(disc == claimed, tag + "discriminant formula mismatch");
            c.require(disc > 0, tag + "discriminant not positive");
        }
    }
    c.note("q=(x-1)p, squarefree p, q' factorization and positive discriminant, all exact");
}

// ---- check 6: ratio convergence and the fitted geometric rate ----

void check_ratio_convergence(Check& c) {
    const Rational bound{BigInt(1), pow_int(10, 12)};
    double worst_ratio_err = 0, worst_rate_dev = 0;
    for (int k = 2; k <= 4; ++k) {
        for (int m = 1; m <= 3; ++m) {
            SequenceSpec spec{k, m};
            std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": ";

            TermVector g = recurrence_terms(spec, 62);
            Rational ratio{g[61], g[60]};
            RealRootEnclosure enc = dominant_root(spec, 120);
            Rational err = abs(ratio - enc.midpoint()) + enc.width() / 2;
            worst_ratio_err = std::max(worst_ratio_err, to_double(err));
            c.require(err < bound, tag + "|g_61/g_60 - rho| = " + fmt(to_double(err)));

            ConvergenceReport rep = convergence_report(spec, 40);
            double dev = std::abs(rep.fitted_rate - rep.gap) / rep.gap;
            worst_rate_dev = std::max(worst_rate_dev, dev);
            c.require(dev <= 0.15, tag + "fitted rate " + fmt(rep.fitted_rate) +
                                       " vs gap " + fmt(rep.gap) + " deviates " + fmt(dev));
        }
    }
    c.note("worst |g_61/g_60 - rho| = " + fmt(worst_ratio_err) + ", worst rate deviation " +
           fmt(worst_rate_dev * 100) + "%");
}

// ---- check 7: |gamma^+-| = 1/sqrt(tau_m) for the cubic family ----

void check_cubic_modulus_law(Check& c) {
    double worst = 0;
    for (int m = 1; m <= 6; ++m) {
        SequenceSpec spec{3, m};
        double tau = to_double(dominant_root(spec, 60).midpoint());
        double want = 1.0 / std::sqrt(tau);
        ComplexRootSet set = all_roots(spec);
        for (size_t i = 0; i < set.roots.size(); ++i) {
            if (static_cast<int>(i) == set.dominant_index) continue;
            double dev = std::abs(std::abs(set.roots[i]) - want);
            worst = std::max(worst, dev);
            c.require(dev <= 1e-10, "m=" + std::to_string(m) + ": | |gamma| - 1/sqrt(tau) | = " +
                                        fmt(dev));
        }
    }
    c.note("m=1..6, worst deviation " + fmt(worst));
}

// ---- check 8: tiling counts against the sequence ----

void check_tilings(Check& c) {
    TilingProblem board{3, 3, 2};
    c.require(count_tilings_dp(board) == 13, "count(L=3,k=3,m=2) != 13");
    std::vector<Tiling> all = enumerate_tilings(board);
    c.require(all.size() == 13, "enumeration size " + std::to_string(all.size()) + " != 13");

    // inventory of the thirteen: 8 all-unit boards, 2+2 mixed, one 3-tile
    std::map<std::vector<int>, int> by_shape;
    for (const auto& t : all) {
        std::vector<int> shape;
        for (const auto& piece : t.pieces) shape.push_back(piece.size);
        ++by_shape[shape];
    }
    c.require(by_shape[{1, 1, 1}] == 8 && by_shape[{1, 2}] == 2 && by_shape[{2, 1}] == 2 &&
                  by_shape[{3}] == 1,
              "enumeration inventory does not match the published figure");

    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= 4; ++m) {
            OracleReport rep = oracle_agreement(SequenceSpec{k, m}, 12);
            if (!rep)
                c.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                       ": first mismatch at L=" + std::to_string(rep.first_mismatch));
        }
    c.note("13 canonical tilings; dp == g_(L+1) on k=2..6, m=1..4, L<=12");
}

// ---- check 9: the triangle-inequality refinement as a property suite ----

void check_triangle_refinement(Check& c) {
    std::mt19937_64 rng(0x6d65746cu);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_modulus = [&] { return 10.0 * (1.0 - unit(rng)); };  // (0, 10]
    auto random_angle = [&] { return 2.0 * std::numbers::pi * unit(rng); };

    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        auto z = [&] { return std::polar(random_modulus(), random_angle()); };
        TriangleCheck t = triangle_refinement_check(z(), z(), z());
        if (!t.holds) ++violations;
    }
    c.require(violations == 0, std::to_string(violations) + " violations in 1e5 random triples");

    int inequal = 0;
    for (int i = 0; i < 1000; ++i) {
        double angle = random_angle();
        std::complex<double> dir = std::polar(1.0, angle);
        TriangleCheck t = triangle_refinement_check(random_modulus() * dir, random_modulus() * dir,
                                                    random_modulus() * dir);
        if (std::abs(t.lhs - t.rhs) > 1e-12) ++inequal;
    }
    c.require(inequal == 0, "aligned triples missed the equality case " + std::to_string(inequal) +
                                " times");
    c.note("1e5 random triples hold; 1e3 aligned triples attain equality");
}

// ---- check 10: transform round trips and Binet reconstruction ----

void check_round_trips(Check& c) {
    std::mt19937_64 rng(0x696e7674u);
    std::uniform_int_distribution<int> len(1, 50);
    std::uniform_int_distribution<long long> value(-1000000000LL, 1000000000LL);

    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        TermVector v;
        v.terms.resize(len(rng));
        v.terms[0] = 0;
        for (size_t j = 1; j < v.terms.size(); ++j) v.terms[j] = value(rng);
        if (deinvert(invert_once(v)).terms != v.terms) ++bad;
        if (invert_once(deinvert(v)).terms != v.terms) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " round-trip failures in 1000 random sequences");

    double worst = 0;
    for (int k = 2; k <= 4; ++k)
        for (int m = 1; m <= 3; ++m) {
            SequenceSpec spec{k, m};
            BinetDecomposition dec = binet_coefficients(spec);
            TermVector g = recurrence_terms(spec, 31);
            for (int n = 0; n <= 30; ++n) {
                double exact = to_double(g[n]);
                double err = std::abs(dec.reconstruct(n) - exact) / std::max(1.0, std::abs(exact));
                worst = std::max(worst, err);
            }
        }
    c.require(worst < 1e-6, "Binet reconstruction relative error " + fmt(worst));
    c.note("1000 exact round trips; worst Binet reconstruction error " + fmt(worst));
}

CheckResult run_one(const std::string& name, double budget_seconds,
                    const std::function<void(Check&)>& body) {
    CheckResult result;
    result.name = name;
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.fail(std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.pass = check.ok();
    result.detail = check.detail();
    if (result.seconds >= budget_seconds) {
        result.pass = false;
        result.detail += (result.detail.empty() ? "" : "; ") + std::string("overran the ") +
                         fmt(budget_seconds) + " s budget";
    }
    return result;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (options.kmax < 2) throw std::invalid_argument("verify: kmax must be >= 2");
    if (options.mmax < 1) throw std::invalid_argument("verify: mmax must be >= 1");
    const int kmax = options.kmax;
    const int mmax = options.mmax;

    std::vector<CheckResult> results;
    results.push_back(run_one("metallic mean constants, closed forms inside enclosures", 1.0,
                              [&](Check& c) { check_mean_constants(c); }));
    results.push_back(run_one("published k=3, m=2 sequence reproduced exactly", 0.1,
                              [&](Check& c) { check_sequence_reproduction(c, options.cli_path); }));
    results.push_back(run_one("invert chain equals direct recurrence", 5.0,
                              [&](Check& c) { check_invert_chain(c, kmax, mmax); }));
    results.push_back(run_one("root bracket, dominance, conjugacy, modulus product", 10.0,
                              [&](Check& c) { check_bracket_and_dominance(c, kmax, mmax); }));
    results.push_back(run_one("simplicity certificate and q' factorization", 5.0,
                              [&](Check& c) { check_simplicity(c, kmax, mmax); }));
    results.push_back(run_one("ratio convergence and fitted decay rate", 5.0,
                              [&](Check& c) { check_ratio_convergence(c); }));
    results.push_back(run_one("cubic modulus law |gamma| = 1/sqrt(tau)", 1.0,
                              [&](Check& c) { check_cubic_modulus_law(c); }));
    results.push_back(run_one("tiling counts match the sequence", 5.0,
                              [&](Check& c) { check_tilings(c); }));
    results.push_back(run_one("triangle inequality refinement properties", 5.0,
                              [&](Check& c) { check_triangle_refinement(c); }));
    results.push_back(run_one("transform round trips and Binet reconstruction", 5.0,
                              [&](Check& c) { check_round_trips(c); }));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace metallic
