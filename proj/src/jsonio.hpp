#pragma once

#include <string>

#include <json.hpp>

#include "families.hpp"
#include "render.hpp"

namespace excseq {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

ordered_json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

ordered_json module_to_json(const StringModule& m);
StringModule module_from_json(const Quiver& q, const nlohmann::json& j);

ordered_json diagram_to_json(const ArcDiagram& d);
ArcDiagram diagram_from_json(const nlohmann::json& j);

ordered_json family_to_json(const Family& f);

// Dispatcher behind the C API and the CLI. The request carries a "command"
// field plus the command's inputs; the response is the report text (JSON for
// every command except render, which yields SVG).
struct RunResult {
    int status = 0;  // 0 ok, 1 invalid input, 2 verification violation
    std::string output;
    std::string error;
};

RunResult run_request(const std::string& request_json);

}  // namespace excseq
