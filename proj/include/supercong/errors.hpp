#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supercong {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// modring
struct NotInvertible : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct DenominatorDivisibleByP : Error {
    using Error::Error;
};
struct ModulusMismatch : Error {
    using Error::Error;
};

// sequences
struct TierExceeded : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};

// quadforms
struct NotAResidue : Error {
    using Error::Error;
};
struct WrongResidueClass : Error {
    using Error::Error;
};

// sums: a denominator in a summation range reduced to 0 mod p.
// Carries the offending index; the ranges used by the check registry are
// chosen so this never fires, so hitting it means a mis-transcribed check.
struct DenominatorHitsZeroModP : Error {
    DenominatorHitsZeroModP(const std::string& what, std::uint64_t index)
        : Error(what + " (k=" + std::to_string(index) + ")"), k(index) {}
    std::uint64_t k;
};

// checks
struct NotApplicable : Error {
    using Error::Error;
};
struct UnknownCheck : Error {
    using Error::Error;
};
struct UnknownIdentity : Error {
    using Error::Error;
};
struct OutOfDomain : Error {
    using Error::Error;
};

}  // namespace supercong
