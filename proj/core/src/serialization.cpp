#include "involution_lab/serialization.hpp"

#include <array>
#include <map>
#include <sstream>

#include "involution_lab/errors.hpp"
#include "json.hpp"

namespace involution_lab {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json witness_json(const PeriodWitness& w) {
  return Json{{"kind", w.kind == PeriodWitness::Kind::Preperiod ? "preperiod" : "rejected_divisor"},
              {"shift", w.shift},
              {"index", w.index},
              {"value_at_index", w.value_at_index},
              {"value_at_shifted", w.value_at_shifted}};
}

Json report_json(const PeriodReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
  return Json{{"modulus", r.modulus},
              {"preperiod", r.preperiod},
              {"period", r.period},
              {"window_checked", r.window_checked},
              {"witnesses", witnesses}};
}

std::string cell(const Valuation& v) { return v.to_string(); }
std::string cell(const std::optional<Valuation>& v) { return v ? v->to_string() : "unknown"; }
std::string flag(const ValuationReport& r) {
  if (!r.predicted) return "unknown";
  return r.matches ? "true" : "false";
}

// Rows of Table 3, keyed by n, columns in SequenceKind order T, TSigned,
// TEven, TOdd.
using Table3Row = std::array<const ValuationReport*, 4>;

std::map<std::uint64_t, Table3Row> group_rows(const std::vector<ValuationReport>& reports) {
  std::map<std::uint64_t, Table3Row> rows;
  for (const auto& r : reports) {
    std::size_t column = 0;
    switch (r.kind) {
      case SequenceKind::T: column = 0; break;
      case SequenceKind::TSigned: column = 1; break;
      case SequenceKind::TEven: column = 2; break;
      case SequenceKind::TOdd: column = 3; break;
      case SequenceKind::Tau: throw ArgumentError("table rows take no tau reports");
    }
    rows[r.n][column] = &r;
  }
  for (const auto& [n, row] : rows) {
    for (const auto* r : row) {
      if (r == nullptr) throw ArgumentError("incomplete table row at n = " + std::to_string(n));
    }
  }
  return rows;
}

constexpr std::array<const char*, 4> column_names{"t", "signed", "even", "odd"};

}  // namespace

std::string poly_to_json(const BivariatePoly& p) {
  Json doc = Json::array();
  for (const auto& [m, c] : p.terms()) {
    doc.push_back(Json::array({m.x_degree, m.y_degree, c.numerator().to_string(), c.exponent()}));
  }
  return doc.dump();
}

BivariatePoly poly_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ArgumentError(std::string("polynomial JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ArgumentError("polynomial JSON must be an array");
  BivariatePoly p;
  for (const auto& term : doc) {
    if (!term.is_array() || term.size() != 4 || !term[0].is_number_unsigned() || !term[1].is_number_unsigned() ||
        !term[2].is_string() || !term[3].is_number_unsigned()) {
      throw ArgumentError("polynomial JSON term must be [deg_x, deg_y, \"numerator\", exponent]");
    }
    const auto numerator = ExactInt::from_string(term[2].get<std::string>());
    const auto exponent = term[3].get<std::int64_t>();
    p.add_term({term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>()}, Dyadic::from_parts(numerator, exponent));
  }
  return p;
}

std::string refined_class_to_json(const RefinedClass& h) {
  Json cycles = Json::array();
  for (const auto& [cycle, multiplicity] : h.cycle_multiset) {
    cycles.push_back(Json{{"cycle", cycle.entries()}, {"multiplicity", multiplicity}});
  }
  return Json{{"bag", h.bag_members}, {"cycles", cycles}}.dump();
}

std::string graph_to_json(const ConstrainedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.a, e.b, e.multiplicity}));
  return Json{{"vertices", g.vertex_count}, {"edges", edges}}.dump();
}

std::string period_report_to_json(const PeriodReport& report) { return dump(report_json(report)); }

std::string period_check_to_json(const PeriodCheck& check) {
  Json doc = report_json(check.report);
  doc["expected_preperiod"] = check.expected_preperiod;
  doc["expected_period"] = check.expected_period;
  doc["matches"] = check.matches;
  return dump(doc);
}

std::string two_adic_prefix_to_json(const TwoAdicPrefix& prefix) {
  Json violations = Json::array();
  for (const auto& v : prefix.violations) {
    Json entry{{"k", v.k}};
    entry["bit"] = v.bit ? Json(*v.bit) : Json(nullptr);
    entry["message"] = v.message;
    violations.push_back(entry);
  }
  Json digits = Json::array();
  for (const auto d : prefix.digits) digits.push_back(static_cast<int>(d));
  return dump(Json{{"k_max", prefix.k_max},
                   {"digits", digits},
                   {"undetermined_from", prefix.undetermined_from},
                   {"confirmed_up_to_k", prefix.confirmed_up_to_k},
                   {"violations", violations}});
}

std::string sequence_to_csv(const std::vector<SequenceRow>& rows) {
  std::ostringstream out;
  out << "n,value\n";
  for (const auto& row : rows) out << row.n << ',' << row.value << '\n';
  return out.str();
}

std::string sequence_to_json(std::string_view kind, const std::vector<SequenceRow>& rows) {
  Json terms = Json::array();
  for (const auto& row : rows) terms.push_back(Json{{"n", row.n}, {"value", row.value}});
  return dump(Json{{"kind", std::string(kind)}, {"terms", terms}});
}

std::string table3_to_csv(const std::vector<ValuationReport>& reports) {
  std::ostringstream out;
  out << "n,k,r";
  for (const char* name : column_names) out << ",ord_" << name;
  for (const char* name : column_names) out << ",predicted_" << name;
  for (const char* name : column_names) out << ",match_" << name;
  out << '\n';
  for (const auto& [n, row] : group_rows(reports)) {
    out << n << ',' << n / 4 << ',' << n % 4;
    for (const auto* r : row) out << ',' << cell(r->computed);
    for (const auto* r : row) out << ',' << cell(r->predicted);
    for (const auto* r : row) out << ',' << flag(*r);
    out << '\n';
  }
  return out.str();
}

std::string table3_to_json(const std::vector<ValuationReport>& reports) {
  Json rows = Json::array();
  for (const auto& [n, row] : group_rows(reports)) {
    Json entry{{"n", n}, {"k", n / 4}, {"r", n % 4}};
    for (std::size_t c = 0; c < row.size(); ++c) entry[std::string("ord_") + column_names[c]] = cell(row[c]->computed);
    for (std::size_t c = 0; c < row.size(); ++c) {
      entry[std::string("predicted_") + column_names[c]] = cell(row[c]->predicted);
    }
    for (std::size_t c = 0; c < row.size(); ++c) entry[std::string("match_") + column_names[c]] = flag(*row[c]);
    rows.push_back(entry);
  }
  return dump(Json{{"rows", rows}});
}

}  // namespace involution_lab
