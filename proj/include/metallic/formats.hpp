#pragma once

#include <string>

#include "metallic/polynomial.hpp"
#include "metallic/sequences.hpp"

namespace metallic {

enum class OutputFormat { Plain, Json, Csv, Bfile };

/// "plain" | "json" | "csv" | "bfile", anything else is a usage error.
OutputFormat parse_output_format(const std::string& name);

/// Terms on one line, space separated.
std::string to_plain(const TermVector& v);

/// OEIS b-file: one "n a(n)" line per term, starting at n = 1 (the n = 0
/// term is not part of the format).
std::string to_bfile(const TermVector& v);

/// "n,value" header plus one row per term from n = 0.
std::string to_csv(const TermVector& v);

/// JSON array of decimal strings; terms outgrow 64-bit consumers fast, so
/// no JSON numbers.
std::string to_json_terms(const TermVector& v);

std::string render_terms(const TermVector& v, OutputFormat f);

/// Human rendering, descending powers: "x^3 - 2*x^2 - x - 1".
std::string to_string(const IntPolynomial& p);

/// JSON array of ascending-degree coefficients as decimal strings.
std::string to_json_coeffs(const IntPolynomial& p);

/// Exact fraction rendering, "89/55" or "-3".
std::string to_fraction_string(const Rational& x);

}  // namespace metallic
