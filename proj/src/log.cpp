#include "kgraph/log.hpp"

#include <chrono>
#include <cstdio>
#include <mutex>

namespace kgraph {

namespace {

std::mutex g_mutex;

const char* level_name(LogLevel level) {
    switch (level) {
    case LogLevel::Debug: return "debug";
    case LogLevel::Info: return "info";
    case LogLevel::Warn: return "warn";
    case LogLevel::Error: return "error";
    }
    return "";
}

} // namespace

Logger& Logger::instance() {
    static Logger logger;
    return logger;
}

Logger::Sink Logger::set_sink(Sink sink) {
    std::lock_guard<std::mutex> lock(g_mutex);
    Sink prev = std::move(sink_);
    sink_ = std::move(sink);
    return prev;
}

void Logger::emit(LogLevel level, const std::string& event, const nlohmann::json& fields) {
    if (level < level_) return;
    nlohmann::ordered_json line;
    line["level"] = level_name(level);
    line["event"] = event;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
        line[it.key()] = it.value();
    }
    std::string text = line.dump();
    std::lock_guard<std::mutex> lock(g_mutex);
    if (sink_) {
        sink_(text);
    } else {
        std::fprintf(stderr, "%s\n", text.c_str());
    }
}

void log_debug(const std::string& event, const nlohmann::json& fields) {
    Logger::instance().emit(LogLevel::Debug, event, fields);
}
void log_info(const std::string& event, const nlohmann::json& fields) {
    Logger::instance().emit(LogLevel::Info, event, fields);
}
void log_warn(const std::string& event, const nlohmann::json& fields) {
    Logger::instance().emit(LogLevel::Warn, event, fields);
}
void log_error(const std::string& event, const nlohmann::json& fields) {
    Logger::instance().emit(LogLevel::Error, event, fields);
}

} // namespace kgraph
