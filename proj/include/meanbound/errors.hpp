#pragma once

#include <stdexcept>
#include <string>

namespace meanbound {

/// Thrown when an iterative scheme exhausts its budget before reaching the
/// requested tolerance. Carries the error estimate that was actually achieved.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// Thrown by root finders when the search bracket shows no sign change; the
/// message names the endpoint whose sign failed.
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace meanbound
