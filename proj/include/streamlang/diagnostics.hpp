#pragma once

#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>

namespace streamlang {

struct Position {
    int line = 0;  // 1-based; 0 = unknown
    int col = 0;

    bool known() const { return line > 0; }
    std::string str() const {
        return std::to_string(line) + ":" + std::to_string(col);
    }
    friend bool operator==(const Position&, const Position&) = default;
};

// Every failure in the pipeline is an Error with a machine-greppable class
// tag. The CLI prints them as "file:line:col: error[<cls>]: <message>".
class Error : public std::exception {
public:
    Error(std::string cls, Position pos, std::string msg)
        : cls_(std::move(cls)), pos_(pos), msg_(std::move(msg)) {
        what_ = "error[" + cls_ + "]: " + msg_;
        if (pos_.known())
            what_ = pos_.str() + ": " + what_;
    }

    const char* what() const noexcept override { return what_.c_str(); }
    const std::string& cls() const { return cls_; }
    const Position& pos() const { return pos_; }
    const std::string& message() const { return msg_; }

private:
    std::string cls_;
    Position pos_;
    std::string msg_;
    std::string what_;
};

namespace errc {
inline constexpr const char* lex = "lex";
inline constexpr const char* parse = "parse";
inline constexpr const char* type = "type";
inline constexpr const char* unbound = "unbound";
inline constexpr const char* clock_conflict = "clock-conflict";
inline constexpr const char* clock_cycle = "clock-cycle";
inline constexpr const char* fallible_output = "fallible-output";
inline constexpr const char* runtime = "runtime";
inline constexpr const char* io = "io";
inline constexpr const char* format = "format";
inline constexpr const char* cycle_abort = "cycle-abort";
}  // namespace errc

[[noreturn]] inline void fail(const char* cls, Position pos, const std::string& msg) {
    throw Error(cls, pos, msg);
}
[[noreturn]] inline void fail(const char* cls, const std::string& msg) {
    throw Error(cls, Position{}, msg);
}

enum class LogLevel { Error = 0, Info = 1, Trace = 2 };

inline LogLevel& log_level() {
    static LogLevel lvl = [] {
        if (const char* env = std::getenv("STREAMLANG_LOG")) {
            std::string v = env;
            if (v == "trace") return LogLevel::Trace;
            if (v == "info") return LogLevel::Info;
        }
        return LogLevel::Error;
    }();
    return lvl;
}

inline std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}

inline void log_line(LogLevel lvl, const std::string& msg) {
    if (lvl > log_level()) return;
    std::lock_guard<std::mutex> lock(log_mutex());
    const char* tag = lvl == LogLevel::Error ? "error" : lvl == LogLevel::Info ? "info" : "trace";
    std::fprintf(stderr, "%s: %s\n", tag, msg.c_str());
}

inline void log_info(const std::string& msg) { log_line(LogLevel::Info, msg); }
inline void log_trace(const std::string& msg) { log_line(LogLevel::Trace, msg); }
inline void log_error(const std::string& msg) { log_line(LogLevel::Error, msg); }

}  // namespace streamlang
