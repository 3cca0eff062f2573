#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "specbound/certify.hpp"
#include "specbound/sym_matrix.hpp"

namespace specbound::report {

/// Ordered JSON keeps record fields in insertion order, so every command
/// emits a schema-stable byte sequence for fixed inputs.
using Record = nlohmann::ordered_json;

inline Record to_record(const certify::BoundReport& r) {
  Record rec;
  rec["name"] = r.name;
  rec["n"] = r.n;
  rec["quantity"] = r.quantity;
  rec["bound"] = r.bound;
  rec["slack"] = r.slack;
  rec["tight"] = r.tight;
  return rec;
}

inline Record matrix_record(const linalg::SymMatrix& m) {
  Record rows = Record::array();
  for (int i = 0; i < m.order(); ++i) {
    Record row = Record::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Record spectrum_record(const linalg::Spectrum& s) {
  Record vals = Record::array();
  for (int i = 1; i <= s.order(); ++i) vals.push_back(s.eig(i));
  return vals;
}

inline std::string json_line(const Record& rec) { return rec.dump(); }

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_header(const Record& rec) {
  std::string out;
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    if (!out.empty()) out += ',';
    out += csv_escape(it.key());
  }
  return out;
}

inline std::string csv_row(const Record& rec) {
  std::string out;
  bool first = true;
  for (const auto& [key, value] : rec.items()) {
    if (!first) out += ',';
    first = false;
    if (value.is_null())
      continue;
    else if (value.is_string())
      out += csv_escape(value.get<std::string>());
    else if (value.is_boolean())
      out += value.get<bool>() ? "true" : "false";
    else if (value.is_number())
      out += value.dump();
    else
      out += csv_escape(value.dump());
  }
  return out;
}

/// 0 when every report holds, 1 when any slack dips below -1e-9.
inline int exit_code_for(std::span<const certify::BoundReport> reports) {
  for (const auto& r : reports)
    if (r.slack < -certify::kSlackTol) return 1;
  return 0;
}

}  // namespace specbound::report
