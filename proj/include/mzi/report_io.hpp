#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mzi/enumeration.hpp"
#include "mzi/verify.hpp"

namespace mzi {

// Serialisations are deterministic: keys appear in a fixed order and
// runtime_ms is null unless timing was recorded.
std::string to_json(const VerificationReport& report, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, int indent = 2);
std::string to_json(const ExtremalReport& report, int indent = 2);

// One header line plus one row per report.
void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_csv(std::ostream& out, const ExtremalReport& report);

}  // namespace mzi
