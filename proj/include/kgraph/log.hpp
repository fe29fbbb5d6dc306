#pragma once
// Structured logging: one JSON object per line. The sink is injectable so
// tests can capture output; the default sink writes to stderr. Prompt and
// document content never appears at default verbosity.

#include <json.hpp>

#include <functional>
#include <string>

namespace kgraph {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

class Logger {
public:
    using Sink = std::function<void(const std::string& line)>;

    static Logger& instance();

    void set_level(LogLevel level) { level_ = level; }
    LogLevel level() const { return level_; }
    // Returns the previous sink; pass nullptr to restore stderr.
    Sink set_sink(Sink sink);

    void emit(LogLevel level, const std::string& event, const nlohmann::json& fields);

private:
    Logger() = default;
    LogLevel level_ = LogLevel::Info;
    Sink sink_;
};

void log_debug(const std::string& event, const nlohmann::json& fields);
void log_info(const std::string& event, const nlohmann::json& fields);
void log_warn(const std::string& event, const nlohmann::json& fields);
void log_error(const std::string& event, const nlohmann::json& fields);

} // namespace kgraph
