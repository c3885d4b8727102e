#ifndef LSGQ_REPORT_HPP
#define LSGQ_REPORT_HPP

#include <optional>
#include <string>

#include "lsgq/classify.hpp"
#include "lsgq/constructions.hpp"

namespace lsgq {

/// JSON serialization with a fixed key order; identical inputs produce
/// byte-identical output.  runtime_ms is emitted only when provided, so the
/// default output stays deterministic.
std::string report_to_json(const ClassificationReport& rep,
                           std::optional<long long> runtime_ms = std::nullopt,
                           int indent = 2);

std::string scan_csv_header();
std::string scan_csv_row(const ClassificationReport& rep);

std::string family_to_json(const ExampleFamily& fam, int indent = 2);

}  // namespace lsgq

#endif
