#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filmgrp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A formula would divide by zero (f, b, g or q vanishing).
class DegenerateState : public Error {
public:
    using Error::Error;
};

/// Input or intermediate state outside the region a routine supports.
class DomainError : public Error {
public:
    using Error::Error;
};

class NoRoot : public Error {
public:
    using Error::Error;
};

/// Caller asked for a wave relation that does not match the fan.
class ConfigMismatch : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class StateSpaceViolation : public Error {
public:
    StateSpaceViolation(std::size_t cell, const std::string& what)
        : Error("cell " + std::to_string(cell) + ": " + what), cell_(cell) {}
    std::size_t cell() const { return cell_; }

private:
    std::size_t cell_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& key, const std::string& what)
        : Error(key + ": " + what), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

}  // namespace filmgrp
