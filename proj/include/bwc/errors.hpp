// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bwc {

// Base of every error the library raises. `code()` is a stable machine
// name used by the CLI to pick exit codes and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)),
          message_(std::move(message)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

#define BWC_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& message)                     \
            : Error(#Name, message) {}                                \
    }

BWC_DEFINE_ERROR(InvalidInput);
BWC_DEFINE_ERROR(DegenerateWall);
BWC_DEFINE_ERROR(ZeroRank);
BWC_DEFINE_ERROR(WrongShape);
BWC_DEFINE_ERROR(NotUpperHalfPlane);
BWC_DEFINE_ERROR(NotK3);
BWC_DEFINE_ERROR(WrongSurface);
BWC_DEFINE_ERROR(OutOfRange);
BWC_DEFINE_ERROR(NoSolution);
BWC_DEFINE_ERROR(EmptySearch);
BWC_DEFINE_ERROR(ConditionCViolated);
BWC_DEFINE_ERROR(ValidationError);

#undef BWC_DEFINE_ERROR

// Parse failures carry a source position (1-based line and column).
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("ParseError",
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace bwc
