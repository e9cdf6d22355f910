#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metallic/analysis.hpp"
#include "metallic/charpoly.hpp"
#include "metallic/formats.hpp"
#include "metallic/invert.hpp"
#include "metallic/roots.hpp"
#include "metallic/sequences.hpp"
#include "metallic/tilings.hpp"
#include "metallic/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace metallic;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

BigInt parse_bigint(const std::string& token) {
    try {
        return BigInt(token);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + token + "'");
    }
}

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

TermVector read_sequence(const std::string& file, const std::string& inline_terms) {
    if (file.empty() == inline_terms.empty())
        throw std::invalid_argument("provide exactly one of --file and --terms");
    TermVector v;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        std::string line;
        while (std::getline(in, line)) {
            std::string t = trimmed(line);
            if (t.empty()) continue;
            v.terms.push_back(parse_bigint(t));
        }
        if (v.terms.empty()) throw std::invalid_argument("no terms in file: " + file);
    } else {
        std::stringstream ss(inline_terms);
        std::string token;
        while (std::getline(ss, token, ',')) v.terms.push_back(parse_bigint(trimmed(token)));
        if (v.terms.empty()) throw std::invalid_argument("no terms in --terms");
    }
    return v;
}

// bfile drops the n = 0 term, so for that format --count means data lines
// (g_1 .. g_count); for every other format it means terms from g_0.
TermVector terms_for_format(const SequenceSpec& spec, int count, OutputFormat f) {
    return recurrence_terms(spec, f == OutputFormat::Bfile ? count + 1 : count);
}

int cmd_seq(int k, int m, int count, const std::string& format) {
    OutputFormat f = parse_output_format(format);
    SequenceSpec spec{k, m};
    std::cout << render_terms(terms_for_format(spec, count, f), f);
    return 0;
}

int cmd_invert(const std::string& file, const std::string& inline_terms, int times, bool inverse,
               const std::string& format) {
    if (times < 0) throw std::invalid_argument("invert: --times must be >= 0");
    OutputFormat f = parse_output_format(format);
    TermVector v = read_sequence(file, inline_terms);
    if (inverse) {
        for (int i = 0; i < times; ++i) v = deinvert(v);
    } else {
        v = invert_iterate(v, times);
    }
    std::cout << render_terms(v, f);
    return 0;
}

int cmd_poly(int k, int m, const std::string& format) {
    SequenceSpec spec{k, m};
    IntPolynomial p = metallic_charpoly(spec);
    IntPolynomial q = q_poly(spec);
    auto [at_m, at_m1] = endpoint_values(spec);
    bool squarefree = is_squarefree(p);

    if (format == "json") {
        json out;
        out["k"] = k;
        out["m"] = m;
        out["p"] = {{"text", to_string(p)}, {"coeffs", json::parse(to_json_coeffs(p))}};
        out["q"] = {{"text", to_string(q)}, {"coeffs", json::parse(to_json_coeffs(q))}};
        out["p_at_m"] = to_fraction_string(at_m);
        out["p_at_m_plus_1"] = to_fraction_string(at_m1);
        out["squarefree"] = squarefree;
        std::cout << out.dump(2) << "\n";
    } else if (format == "plain") {
        std::cout << "p(x) = " << to_string(p) << "\n";
        std::cout << "q(x) = (x - 1) p(x) = " << to_string(q) << "\n";
        std::cout << "p(" << m << ") = " << to_fraction_string(at_m) << "\n";
        std::cout << "p(" << m + 1 << ") = " << to_fraction_string(at_m1) << "\n";
        std::cout << "squarefree: " << (squarefree ? "yes" : "no") << "\n";
    } else {
        throw std::invalid_argument("poly: format must be plain or json");
    }
    return 0;
}

int cmd_mean(int k, int m, int digits, const std::string& format) {
    if (digits < 1) throw std::invalid_argument("mean: --digits must be >= 1");
    SequenceSpec spec{k, m};

    int int_digits = static_cast<int>(std::to_string(m).size());
    int frac = digits > int_digits ? digits - int_digits : 0;

    // Truncated digits are certified once both endpoints agree on
    // floor(x * 10^frac); refine until they do and the width bound holds.
    Rational half_ulp = Rational{BigInt(1), 2 * pow_int(10, static_cast<unsigned>(frac))};
    int bits = 64;
    RealRootEnclosure enc = dominant_root(spec, bits);
    while (enc.width() >= half_ulp ||
           floor_scaled(enc.lo, frac) != floor_scaled(enc.hi, frac)) {
        bits *= 2;
        enc = refine(std::move(enc), Rational{BigInt(1), pow_int(2, static_cast<unsigned>(bits))});
        if (bits > (1 << 22)) throw std::runtime_error("mean: enclosure failed to settle");
    }
    std::string value = decimal_string(enc.lo, frac, Rounding::Down);

    if (format == "json") {
        json out;
        out["k"] = k;
        out["m"] = m;
        out["digits"] = digits;
        out["value"] = value;
        out["lo"] = decimal_string(enc.lo, frac + 4, Rounding::Down);
        out["hi"] = decimal_string(enc.hi, frac + 4, Rounding::Up);
        std::cout << out.dump(2) << "\n";
    } else if (format == "plain") {
        std::cout << value << "\n";
    } else {
        throw std::invalid_argument("mean: format must be plain or json");
    }
    return 0;
}

json roots_report(int k, int m) {
    SequenceSpec spec{k, m};
    const int digits = 15;
    RealRootEnclosure enc = dominant_root(spec, 53);
    ComplexRootSet set = all_roots(spec);

    json out;
    out["k"] = k;
    out["m"] = m;
    out["lo"] = decimal_string(enc.lo, digits, Rounding::Down);
    out["hi"] = decimal_string(enc.hi, digits, Rounding::Up);
    out["digits"] = digits;
    out["roots"] = json::array();
    for (const auto& r : set.roots)
        out["roots"].push_back({{"re", fmt17(r.real())},
                                {"im", fmt17(r.imag())},
                                {"modulus", fmt17(std::abs(r))}});
    double gap = 0;
    for (size_t i = 0; i < set.roots.size(); ++i)
        if (static_cast<int>(i) != set.dominant_index)
            gap = std::max(gap, std::abs(set.roots[i]));
    out["spectral_gap"] = fmt17(gap / std::abs(set.roots[set.dominant_index]));
    return out;
}

int cmd_roots(int k, int m, const std::string& format) {
    json out = roots_report(k, m);
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (format == "plain") {
        std::cout << "rho in [" << out["lo"].get<std::string>() << ", "
                  << out["hi"].get<std::string>() << "]\n";
        for (const auto& r : out["roots"])
            std::cout << r["re"].get<std::string>() << " " << r["im"].get<std::string>()
                      << "i  |.| = " << r["modulus"].get<std::string>() << "\n";
        std::cout << "spectral gap: " << out["spectral_gap"].get<std::string>() << "\n";
    } else {
        throw std::invalid_argument("roots: format must be plain or json");
    }
    return 0;
}

int cmd_ratios(int k, int m, int count, const std::string& format) {
    SequenceSpec spec{k, m};
    ConvergenceReport rep = convergence_report(spec, count);

    if (format == "json") {
        json out;
        out["k"] = k;
        out["m"] = m;
        out["count"] = count;
        out["points"] = json::array();
        for (const auto& pt : rep.points)
            out["points"].push_back({{"n", pt.n},
                                     {"ratio", to_fraction_string(pt.ratio)},
                                     {"value", fmt17(pt.ratio_value)},
                                     {"abs_error", fmt17(pt.abs_error)}});
        out["fitted_rate"] = fmt17(rep.fitted_rate);
        out["spectral_gap"] = fmt17(rep.gap);
        out["rate_over_gap"] = fmt17(rep.rate_over_gap);
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,ratio,value,abs_error\n";
        for (const auto& pt : rep.points)
            std::cout << pt.n << "," << to_fraction_string(pt.ratio) << ","
                      << fmt17(pt.ratio_value) << "," << fmt17(pt.abs_error) << "\n";
    } else if (format == "plain") {
        for (const auto& pt : rep.points)
            std::cout << "n=" << pt.n << "  g_{n+1}/g_n = " << to_fraction_string(pt.ratio)
                      << " = " << fmt17(pt.ratio_value) << "  err = " << fmt17(pt.abs_error)
                      << "\n";
        std::cout << "fitted rate:  " << fmt17(rep.fitted_rate) << "\n";
        std::cout << "spectral gap: " << fmt17(rep.gap) << "\n";
        std::cout << "rate / gap:   " << fmt17(rep.rate_over_gap) << "\n";
    } else {
        throw std::invalid_argument("ratios: format must be plain, csv or json");
    }
    return 0;
}

int cmd_tilings(int length, int k, int m, bool enumerate, long long cap,
                const std::string& format) {
    TilingProblem problem{length, k, m};
    BigInt count = count_tilings_dp(problem);
    std::vector<Tiling> all;
    if (enumerate) all = enumerate_tilings(problem, BigInt(cap));

    if (format == "json") {
        json out;
        out["length"] = length;
        out["k"] = k;
        out["m"] = m;
        out["count"] = count.str();
        if (enumerate) {
            out["tilings"] = json::array();
            for (const auto& t : all) out["tilings"].push_back(to_string(t));
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "plain") {
        std::cout << count.str() << "\n";
        for (const auto& t : all) std::cout << to_string(t) << "\n";
    } else {
        throw std::invalid_argument("tilings: format must be plain or json");
    }
    return 0;
}

int cmd_verify(int kmax, int mmax, const std::string& self) {
    VerifyOptions options;
    options.kmax = kmax;
    options.mmax = mmax;
    options.cli_path = self;
    std::vector<CheckResult> results = run_verification(options);
    for (const auto& r : results) {
        char line[4096];
        std::snprintf(line, sizeof line, "%s  %-55s (%.2f s)  %s\n", r.pass ? "PASS" : "FAIL",
                      r.name.c_str(), r.seconds, r.detail.c_str());
        std::cout << line;
    }
    if (!all_passed(results)) {
        std::cout << "verification FAILED\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

std::string self_path(const char* argv0) {
    char buf[4096];
    ssize_t n = readlink("/proc/self/exe", buf, sizeof buf - 1);
    if (n > 0) {
        buf[n] = '\0';
        return buf;
    }
    return argv0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Metallic means of degree k: exact k-th order Fibonacci-type sequences,\n"
        "iterated invert transforms, certified enclosures of the dominant root of\n"
        "x^k - m x^(k-1) - x^(k-2) - ... - x - 1, and the full verification suite.\n"
        "Sequences are indexed from n = 0 with g_0 = 0, g_1 = 1; the classical\n"
        "displays (1, 2, 5, 13, ... for k = 3, m = 2) start at n = 1."};
    app.require_subcommand(1);

    int k = 2, m = 1, count = 10, digits = 12, times = 1, length = 0;
    int kmax = 8, mmax = 6;
    long long cap = 1000000;
    bool inverse = false, enumerate = false;
    std::string format_terms = "plain", format_json = "json", format_plain = "plain";
    std::string file, terms;

    auto* seq = app.add_subcommand("seq", "print terms of the (k, m) sequence");
    seq->add_option("--k", k, "recurrence order, >= 2")->required();
    seq->add_option("--m", m, "invert level / leading coefficient, >= 1")->required();
    seq->add_option("--count", count, "how many terms (bfile: data lines from n = 1)")
        ->required();
    seq->add_option("--format", format_terms, "plain | json | csv | bfile");

    auto* inv = app.add_subcommand("invert", "apply the invert transform to a sequence");
    inv->add_option("--file", file, "file with one integer per line");
    inv->add_option("--terms", terms, "inline comma-separated integers");
    inv->add_option("--times", times, "how many applications, >= 0");
    inv->add_flag("--inverse", inverse, "apply the inverse transform instead");
    inv->add_option("--format", format_terms, "plain | json | csv | bfile");

    auto* poly = app.add_subcommand("poly", "characteristic polynomial and certificates");
    poly->add_option("--k", k, "recurrence order, >= 2")->required();
    poly->add_option("--m", m, "invert level, >= 1")->required();
    poly->add_option("--format", format_plain, "plain | json");

    auto* mean = app.add_subcommand("mean", "certified decimal digits of the dominant root");
    mean->add_option("--k", k, "recurrence order, >= 2")->required();
    mean->add_option("--m", m, "invert level, >= 1")->required();
    mean->add_option("--digits", digits, "significant digits, every printed digit certified");
    mean->add_option("--format", format_plain, "plain | json");

    auto* roots = app.add_subcommand("roots", "all complex roots and the spectral gap");
    roots->add_option("--k", k, "recurrence order, >= 2")->required();
    roots->add_option("--m", m, "invert level, >= 1")->required();
    roots->add_option("--format", format_json, "json | plain");

    auto* ratios = app.add_subcommand("ratios", "consecutive-term ratios and convergence fit");
    ratios->add_option("--k", k, "recurrence order, >= 2")->required();
    ratios->add_option("--m", m, "invert level, >= 1")->required();
    ratios->add_option("--count", count, "terms to generate, >= 10");
    ratios->add_option("--format", format_plain, "plain | csv | json");

    auto* tilings = app.add_subcommand("tilings", "colored tilings of a 1 x L board");
    tilings->add_option("--length", length, "board length L, >= 0")->required();
    tilings->add_option("--k", k, "largest tile size, >= 2")->required();
    tilings->add_option("--m", m, "colors for unit tiles, >= 1")->required();
    tilings->add_flag("--enumerate", enumerate, "list every tiling after the count");
    tilings->add_option("--cap", cap, "refuse to enumerate more than this many");
    tilings->add_option("--format", format_plain, "plain | json");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--kmax", kmax, "largest k for the grid checks");
    verify->add_option("--mmax", mmax, "largest m for the grid checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(seq)) return cmd_seq(k, m, count, format_terms);
        if (app.got_subcommand(inv))
            return cmd_invert(file, terms, times, inverse, format_terms);
        if (app.got_subcommand(poly)) return cmd_poly(k, m, format_plain);
        if (app.got_subcommand(mean)) return cmd_mean(k, m, digits, format_plain);
        if (app.got_subcommand(roots)) return cmd_roots(k, m, format_json);
        if (app.got_subcommand(ratios)) return cmd_ratios(k, m, count, format_plain);
        if (app.got_subcommand(tilings))
            return cmd_tilings(length, k, m, enumerate, cap, format_plain);
        if (app.got_subcommand(verify)) return cmd_verify(kmax, mmax, self_path(argv[0]));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
