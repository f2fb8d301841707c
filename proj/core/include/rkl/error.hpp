#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rkl {

using Nat = std::size_t;

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed text input (files, bit strings, command-line values).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NotPrefixClosed : public Error {
public:
    NotPrefixClosed(std::string offending, std::string missing)
        : Error("not prefix-closed: " + offending + " is present but its prefix " + missing +
                " is not"),
          offending_(std::move(offending)),
          missing_(std::move(missing)) {}

    const std::string& offending() const noexcept { return offending_; }
    const std::string& missing() const noexcept { return missing_; }

private:
    std::string offending_;
    std::string missing_;
};

class NotGraded : public Error {
public:
    NotGraded() : Error("family is not graded (one string of each length 1..n required)") {}
};

class EmptyPath : public Error {
public:
    EmptyPath() : Error("path is empty") {}
};

class LevelEmpty : public Error {
public:
    explicit LevelEmpty(Nat level)
        : Error("tree has no member of length " + std::to_string(level)), level_(level) {}
    Nat level() const noexcept { return level_; }

private:
    Nat level_;
};

class NoLongString : public Error {
public:
    explicit NoLongString(Nat y)
        : Error("family has no string of length >= " + std::to_string(y)), y_(y) {}
    Nat y() const noexcept { return y_; }

private:
    Nat y_;
};

class BadStage : public Error {
public:
    BadStage(Nat stage, const std::string& why)
        : Error("bad stage " + std::to_string(stage) + ": " + why), stage_(stage) {}
    Nat stage() const noexcept { return stage_; }

private:
    Nat stage_;
};

/// The bounded mu-search ran past its cap: x is not confirmed in A_0 or A_1 yet.
class CapExceeded : public Error {
public:
    CapExceeded(Nat x, Nat y, Nat cap)
        : Error("no witness z <= " + std::to_string(cap) + " for h(" + std::to_string(x) + "," +
                std::to_string(y) + ")"),
          x_(x),
          y_(y) {}
    Nat x() const noexcept { return x_; }
    Nat y() const noexcept { return y_; }

private:
    Nat x_;
    Nat y_;
};

class TooSmall : public Error {
public:
    TooSmall(Nat have, Nat need)
        : Error("set has " + std::to_string(have) + " elements, need " + std::to_string(need)) {}
};

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

class NotHomogeneousForColoring : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string name)
        : Error("unbound variable: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

} // namespace rkl
