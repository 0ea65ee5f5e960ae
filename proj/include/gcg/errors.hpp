#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcg {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- group table validation ----

struct NotLatinSquare : Error {
    using Error::Error;
};
struct NoIdentity : Error {
    using Error::Error;
};
struct NoInverse : Error {
    using Error::Error;
};
struct NotAssociative : Error {
    using Error::Error;
};

// ---- group operations ----

struct NotASubgroup : Error {
    using Error::Error;
};
struct OrderLimitExceeded : Error {
    using Error::Error;
};
struct NotAbelian : Error {
    using Error::Error;
};
struct InvalidGroupMap : Error {
    using Error::Error;
};

// ---- catalog / parsing ----

struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(const std::string& what, std::size_t off, std::string exp)
        : Error(what + " (at byte " + std::to_string(off) + ", expected " + exp + ")"),
          offset(off),
          expected(std::move(exp)) {}
};
struct UnsupportedOrder : Error {
    using Error::Error;
};
struct ElementNotFound : Error {
    using Error::Error;
};

// ---- generalized Cayley subsets ----

struct NotInvolutory : Error {
    using Error::Error;
};
struct IdentityAlpha : Error {
    using Error::Error;
};
struct MeetsOmega : Error {
    int witness;
    MeetsOmega(const std::string& what, int w) : Error(what), witness(w) {}
};
struct NotAlphaSymmetric : Error {
    int witness;
    NotAlphaSymmetric(const std::string& what, int w) : Error(what), witness(w) {}
};
struct EmptySubset : Error {
    using Error::Error;
};

// ---- graphs ----

struct NotSymmetricSet : Error {
    using Error::Error;
};
struct NotSquareFree : Error {
    int witness;
    NotSquareFree(const std::string& what, int w) : Error(what), witness(w) {}
};
struct InternalAsymmetry : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// ---- criteria / census ----

struct NotConnected : Error {
    using Error::Error;
};
struct VerdictDisagreement : Error {
    using Error::Error;
};
struct MismatchAgainstGolden : Error {
    using Error::Error;
};

}  // namespace gcg
