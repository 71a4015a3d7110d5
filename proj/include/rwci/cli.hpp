#pragma once

// Command-line front end. The commands live in a library so tests can run
// them in-process against string streams.

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rwci/gaussian_vector.hpp"
#include "rwci/oracle.hpp"

namespace rwci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

inline constexpr int kSchemaVersion = 1;
std::string_view tool_version();

using Json = nlohmann::ordered_json;

/// Accepts {"kx", "ky", "kxy"} or {"joint", "dim_x"}; matrices are arrays of
/// rows. Throws InputError on schema violations. The result is not yet
/// validated (see validate_cov).
JointGaussianCov parse_covariance(const nlohmann::json& doc);

/// JSON number for finite values, the string "inf" / "-inf" otherwise.
Json encode_number(double v);
double decode_number(const Json& j);

/// Inverse of the serialization used in ResultRecord's allocation field.
Json encode_allocation(const Allocation& a);
Allocation decode_allocation(const Json& j);

Json encode_report(const oracle::Report& report);

/// The fixed instance matrix behind `verify --suite <name>`. Names:
/// scalar, waterfill, lemma3, graywyner, discrete, all. Throws InputError
/// for anything else.
std::vector<std::function<oracle::Report()>> suite_tasks(std::string_view suite);

/// Runs the tasks (concurrently) and returns reports in task order.
std::vector<oracle::Report> run_suite(const std::vector<std::function<oracle::Report()>>& tasks);

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace rwci::cli
