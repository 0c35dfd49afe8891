#pragma once

#include <stdexcept>
#include <string>

namespace cheapboot {

// Argument outside its mathematical domain (p not in (0,1), empty data, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Interval or region requested with fewer resamples than the method supports.
class InsufficientResamples : public std::runtime_error {
public:
    explicit InsufficientResamples(const std::string& what) : std::runtime_error(what) {}
};

// Scatter matrix not invertible; the T^2 membership test is undefined.
class SingularScatter : public std::runtime_error {
public:
    explicit SingularScatter(const std::string& what) : std::runtime_error(what) {}
};

// Estimator undefined on its input (degenerate margin, rank-deficient design, ...).
class EstimatorError : public std::runtime_error {
public:
    explicit EstimatorError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal numeric assumption; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Malformed experiment configuration; message carries the offending field path.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cheapboot
