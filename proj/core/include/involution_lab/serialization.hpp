#pragma once

// Deterministic text forms: CSV with a header row and JSON documents. All
// integers are written as decimal strings or plain JSON integers, never in
// floating-point notation.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "involution_lab/bivariate_poly.hpp"
#include "involution_lab/conjecture.hpp"
#include "involution_lab/enumeration.hpp"
#include "involution_lab/periodicity.hpp"
#include "involution_lab/valuations.hpp"

namespace involution_lab {

/// [[deg_x, deg_y, "numerator", exponent], ...] sorted by degrees.
std::string poly_to_json(const BivariatePoly& p);
/// Inverse of poly_to_json. Throws ArgumentError on malformed input.
BivariatePoly poly_from_json(std::string_view text);

/// {"bag": [...], "cycles": [{"cycle": [...], "multiplicity": m}, ...]}
std::string refined_class_to_json(const RefinedClass& h);
/// {"vertices": V, "edges": [[a, b, multiplicity], ...]}
std::string graph_to_json(const ConstrainedGraph& g);

std::string period_report_to_json(const PeriodReport& report);
/// Report plus expected_preperiod, expected_period and matches.
std::string period_check_to_json(const PeriodCheck& check);

/// {k_max, digits, undetermined_from, confirmed_up_to_k, violations}
std::string two_adic_prefix_to_json(const TwoAdicPrefix& prefix);

struct SequenceRow {
  std::uint64_t n = 0;
  std::string value;  // decimal
};

/// "n,value" header, one row per term.
std::string sequence_to_csv(const std::vector<SequenceRow>& rows);
/// {"kind": kind, "terms": [{"n": n, "value": "..."}, ...]}
std::string sequence_to_json(std::string_view kind, const std::vector<SequenceRow>& rows);

/// Groups the four reports of each n into one row. Infinite valuations are
/// written "inf" and missing predictions "unknown".
std::string table3_to_csv(const std::vector<ValuationReport>& reports);
std::string table3_to_json(const std::vector<ValuationReport>& reports);

}  // namespace involution_lab
