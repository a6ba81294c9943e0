#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An Element/SupportSet was combined with a ring it does not belong to.
class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// A label is not a valid basis encoding for the ring at hand.
class InvalidLabelError : public Error {
public:
    explicit InvalidLabelError(const std::string& what) : Error(what) {}
};

/// Bad configuration (ring identifier, generator list, parameters).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace fusion
