#include "metallic/formats.hpp"

#include <json.hpp>

#include <stdexcept>

namespace metallic {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "bfile") return OutputFormat::Bfile;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string to_plain(const TermVector& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ' ';
        out += v[i].str();
    }
    out += '\n';
    return out;
}

std::string to_bfile(const TermVector& v) {
    std::string out;
    for (size_t i = 1; i < v.size(); ++i) {
        out += std::to_string(i);
        out += ' ';
        out += v[i].str();
        out += '\n';
    }
    return out;
}

std::string to_csv(const TermVector& v) {
    std::string out = "n,value\n";
    for (size_t i = 0; i < v.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += v[i].str();
        out += '\n';
    }
    return out;
}

std::string to_json_terms(const TermVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : v.terms) arr.push_back(t.str());
    return arr.dump() + "\n";
}

std::string render_terms(const TermVector& v, OutputFormat f) {
    switch (f) {
        case OutputFormat::Plain: return to_plain(v);
        case OutputFormat::Json: return to_json_terms(v);
        case OutputFormat::Csv: return to_csv(v);
        case OutputFormat::Bfile: return to_bfile(v);
    }
    throw std::logic_error("render_terms: unhandled format");
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        BigInt c = p.coeff(d);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        BigInt a = boost::multiprecision::abs(c);
        if (d == 0) {
            out += a.str();
        } else {
            if (a != 1) {
                out += a.str();
                out += "*";
            }
            out += (d == 1) ? "x" : "x^" + std::to_string(d);
        }
    }
    return out;
}

std::string to_json_coeffs(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs) arr.push_back(c.str());
    return arr.dump();
}

std::string to_fraction_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace metallic
