#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

/// An exhaustive search or enumeration was requested beyond the instance
/// sizes the implementation is budgeted for.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver hit its iteration cap; carries the last iterate so
/// callers can inspect how far it got.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last)
        : std::runtime_error(what), last_value_(last) {}
    double last_value() const { return last_value_; }

private:
    double last_value_;
};

/// Configuration rejected before any computation ran.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Failure writing an output artifact.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dlab
