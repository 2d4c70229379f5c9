#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cmm {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A closed-form expression hit a vanishing denominator.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// The drift matrix has an eigenvalue with non-negative real part.
class UnstableError : public Error {
public:
    UnstableError(const std::string& what, double spectral_abscissa)
        : Error(what), spectral_abscissa_(spectral_abscissa) {}

    double spectral_abscissa() const noexcept { return spectral_abscissa_; }

private:
    double spectral_abscissa_;
};

/// A numerical routine produced a result that failed its own acceptance check.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what, double residual = 0.0)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Fixed-point iteration ran out of iterations. Carries the iterate history.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> history)
        : Error(what), history_(std::move(history)) {}

    const std::vector<double>& history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::string key = {}, int line = 0)
        : Error(what), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

class IoError : public Error {
public:
    IoError(const std::string& what, std::string path)
        : Error(what + ": " + path), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace cmm
