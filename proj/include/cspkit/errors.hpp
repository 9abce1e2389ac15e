#pragma once

#include <stdexcept>
#include <string>

namespace cspkit {

struct OutOfDomain : std::invalid_argument {
    explicit OutOfDomain(const std::string& what) : std::invalid_argument(what) {}
};

struct FamilyMismatch : std::invalid_argument {
    explicit FamilyMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct NegativeExponent : std::invalid_argument {
    explicit NegativeExponent(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace cspkit
