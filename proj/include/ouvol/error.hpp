#pragma once

#include <stdexcept>
#include <string>

namespace ouvol {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or argument; the message names the offending field.
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

/// Evaluation requested outside a model's analytic domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// A quadrature or inversion failed to meet its tolerance; carries
/// the error estimate that was actually achieved.
class tolerance_error : public error {
public:
    tolerance_error(const std::string& msg, double achieved_estimate)
        : error(msg + " (achieved error estimate " + std::to_string(achieved_estimate) + ")"),
          achieved(achieved_estimate) {}
    double achieved;
};

/// Numerical failure other than a missed tolerance (overflow, cancellation, ...).
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

} // namespace ouvol
