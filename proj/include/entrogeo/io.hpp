#pragma once

#include <string>
#include <variant>
#include <vector>

#include "entrogeo/contractions.hpp"
#include "entrogeo/oracle.hpp"
#include "entrogeo/profile.hpp"

namespace entrogeo::io {

using State = std::variant<DiscreteDistribution, DensityOperator>;
using Transform = std::variant<SequenceMap, Partition, BlockStructure>;

// Round-trip-exact decimal rendering of a double (17 significant digits).
std::string format_double(double x);

// State schema: {"kind":"distribution","weights":[...]} or
// {"kind":"density","re":[[...]],"im":[[...]]} ("im" may be omitted for a
// real matrix). Parse/validation failures throw entrogeo::error.
State parse_state(const std::string& json_text, double tol = default_tol);
State load_state(const std::string& path, double tol = default_tol);
std::string to_json(const State& s);

// Transform schema: {"kind":"matrix","rows":[[...]]},
// {"kind":"partition","blocks":[[...]]} or
// {"kind":"blockstructure","sizes":[...]}.
Transform parse_transform(const std::string& json_text);
Transform load_transform(const std::string& path);

// Breakpoint CSV with header "r1,rinf", one row per breakpoint.
std::string profile_csv(const EntropyProfile& p);
// Rebuilds the profile from its CSV; segment multiplicities are recovered
// from the (integer-reciprocal) slopes.
EntropyProfile profile_from_csv(const std::string& csv_text);

struct EntropyRecord {
    double direct = 0.0;
    double boundary = 0.0;
    double quadrature = 0.0;
    double max_discrepancy = 0.0;
};
std::string to_json(const EntropyRecord& r);
EntropyRecord entropy_record_from_json(const std::string& json_text);

std::string to_json(const SeparationVerdict& v);
SeparationVerdict verdict_from_json(const std::string& json_text);

std::string to_json(const std::vector<MonotonicityReport>& reports);
std::vector<MonotonicityReport> reports_from_json(const std::string& json_text);

}  // namespace entrogeo::io
