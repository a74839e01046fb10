#pragma once

// Text, JSON and CSV renderings. Big integers are always plain decimal strings
// in JSON and CSV.

#include <string>

#include <nlohmann/json.hpp>

#include "peakpoly/engine.hpp"
#include "peakpoly/intpoly.hpp"
#include "peakpoly/perm.hpp"
#include "peakpoly/verify.hpp"

namespace peakpoly {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);

// {"center": k, "coefficients": ["c0", ...], "degree": d}
nlohmann::json to_json(const BinomialPolynomial& p);
BinomialPolynomial polynomial_from_json(const nlohmann::json& j);

/// "25*C(x-6,1) + 50*C(x-6,2) + ..."; "0" for the zero polynomial.
std::string binomial_expansion(const BinomialPolynomial& p);
std::string render(const BinomialPolynomial& p, Format format);

/// CSV header "j\k,kmin,...,kmax" then one row per j.
std::string table_csv(const DifferenceTable& t);
std::string render(const DifferenceTable& t, Format format);

nlohmann::json to_json(const VerificationReport& r);
std::string render(const VerificationReport& r, Format format);

/// Elapsed time is left out of JSON and CSV so reports are reproducible.
nlohmann::json to_json(const SweepSummary& s);
std::string render(const SweepSummary& s, Format format);

std::string render(const PeakCounts& counts, Format format);

} // namespace peakpoly
