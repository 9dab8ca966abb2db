#pragma once

#include <stdexcept>
#include <string>

namespace coxl2 {

/** Base class of every error raised by the library. `code()` is a stable
 *  machine-readable tag used by the CLI's error object. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse_error", w) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error("invalid_argument", w) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error("division_by_zero", w) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& w) : Error("pole", w) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& w) : Error("unsupported", w) {}
};

// q lies strictly between the two regions where a formula is available.
struct NotComputable : Error {
    explicit NotComputable(const std::string& w) : Error("not_computable", w) {}
};

struct CheckFailed : Error {
    explicit CheckFailed(const std::string& w) : Error("check_failed", w) {}
};

}  // namespace coxl2
