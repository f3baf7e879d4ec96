#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gq3cli {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kDomainError = 1, kUsageError = 2 };

struct Request {
  std::optional<std::string> params;  // "l1,l2,l3"
  std::optional<std::string> family;
  std::string op;
  std::vector<std::string> operands;
  std::optional<int> n;
  std::optional<int> s;
  std::optional<double> theta;
  std::optional<double> tol;
  std::optional<double> period_tol;
};

struct Response {
  Json body;
  Exit exit = kOk;
};

/// Names accepted as `op`, aliases included.
const std::vector<std::string>& operation_names();

Response handle(const Request& request);

/// Builds a request from one NDJSON line. Throws std::invalid_argument.
Request request_from_json(const Json& line);

/// JSON text with every non-integer number printed to 17 significant digits.
std::string emit(const Json& value);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gq3cli
