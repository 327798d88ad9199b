#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace meixner {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A c_i, c_tilde_i, or c0 parameter is zero.
class ZeroParameter : public Error {
public:
    using Error::Error;
};

// Candidate parameters fail the defining conditions of the parameter set.
class NotInParameterSet : public Error {
public:
    NotInParameterSet(const std::string& message, std::vector<std::string> violations)
        : Error(message), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Gram-Schmidt step produced a vector with <v,v> = 0 or leading coordinate 0.
class DegenerateStep : public Error {
public:
    using Error::Error;
};

// A denominator in the triangular family construction vanishes.
class ZeroDenominator : public Error {
public:
    ZeroDenominator(const std::string& message, int index) : Error(message), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

// Grid application needs a value with nonzero coefficient that is absent.
class MissingGridPoint : public Error {
public:
    using Error::Error;
};

// Truncated summation failed to certify its tail below tolerance within the cap.
class NoConvergence : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

}  // namespace meixner
