#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qgt/design.hpp"
#include "qgt/qgt.hpp"
#include "qgt/sim.hpp"

namespace qgt::io {

/// Malformed or mismatched input files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kPlanVersion = 1;

// Item indices are 1-based in every file; everything in memory is 0-based.

/// {"version":1,"N","M","r","t","q","seed","right_adj":[[...],...]}; the
/// signature is rebuilt from (t, r) on load.
nlohmann::json plan_to_json(const TestPlan& plan);
TestPlan plan_from_json(const nlohmann::json& j);

/// Sorted array of defective item ids.
nlohmann::json support_to_json(const SupportVector& x);
SupportVector support_from_json(const nlohmann::json& j, std::uint32_t N);

/// Flat integer array of length m = M * s.
nlohmann::json results_to_json(const TestResults& y);
TestResults results_from_json(const nlohmann::json& j, const TestPlan& plan);

nlohmann::json outcome_to_json(const DecodeOutcome& out);
nlohmann::json design_to_json(const DesignResult& design);
nlohmann::json plan_summary_to_json(const Plan& plan);
nlohmann::json report_to_json(const SimReport& report);

/// Parses a whole file; throws FormatError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace qgt::io
