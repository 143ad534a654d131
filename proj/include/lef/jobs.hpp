#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lef {

enum class JobKind { GENUS, LEFSCHETZ, RIGIDITY, VERIFY, BOTT_TAUBES, INTEGRALITY };

struct JobConfig {
    JobKind kind = JobKind::GENUS;
    std::map<std::string, std::string> params;

    const std::string& need(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
};

/// Config parse/validation failure with source position.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, int col, const std::string& msg)
        : std::runtime_error(msg), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/// Line-oriented `key = value` config; '#' starts a comment; the `job` key
/// selects the kind. Reports diagnostics with line/column.
JobConfig parse_config(const std::string& text);

/// Builds a config from a job kind plus `key=value` tokens (CLI surface).
JobConfig parse_job_args(JobKind kind, const std::vector<std::string>& tokens);

JobKind job_kind_from_name(const std::string& name);

/// Executes the job; the result is canonical and byte-stable for equal inputs.
nlohmann::json run_job(const JobConfig& cfg);

/// Human-readable rendering; decimal approximations are flagged "approx".
std::string render_table(const nlohmann::json& report);

/// True when the report signals a verification/integrality failure (exit 1).
bool report_failed(const nlohmann::json& report);

}  // namespace lef
