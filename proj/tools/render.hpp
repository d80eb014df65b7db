#pragma once

// JSON, CSV and text renderings of library results for the command line.

#include <ostream>
#include <string>

#include <json.hpp>

#include "k3fib/catalog.hpp"
#include "k3fib/classifier.hpp"
#include "k3fib/fibration.hpp"

namespace k3fib::cli {

using nlohmann::json;

json to_json(const DivisorClass& d);
json to_json(const Catalog& catalog);
json to_json(const FibrationReport& rep);
json to_json(const ConfigurationRow& row);
json to_json(const Enumeration& e, bool with_audit);

/// Sorted keys, two-space indent; parsing the output and dumping it again is byte-identical.
std::string canonical_dump(const json& j);

void catalog_csv(std::ostream& os, const Catalog& catalog);
void catalog_text(std::ostream& os, const Catalog& catalog);

void report_text(std::ostream& os, const FibrationReport& rep);

void rows_csv(std::ostream& os, const std::vector<ConfigurationRow>& rows);
void rows_text(std::ostream& os, const std::string& mode, const std::vector<ConfigurationRow>& rows);
void audit_text(std::ostream& os, const Enumeration& e);

/// Comparison of computed classification values with the reference lists.
/// Returns true when every value matches.
bool tables_text(std::ostream& os);
json tables_json();

std::string csv_field(const std::string& s);

} // namespace k3fib::cli
