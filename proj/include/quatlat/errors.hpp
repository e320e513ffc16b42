#pragma once

#include <stdexcept>
#include <string>

namespace quatlat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (bad JSON, bad polynomial string, unresolved reference).
// The CLI maps this to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// p divides [O_K : Z[theta]]; factorization of f mod p does not describe the
// prime decomposition, so the prime is unsupported for this generator.
struct IndexDivisibleError : Error {
    std::string prime;
    IndexDivisibleError(const std::string& p, const std::string& field)
        : Error("prime " + p + " divides the index [O_K : Z[theta]] of field " + field), prime(p) {}
};

struct NotAnEmbeddingError : Error {
    using Error::Error;
};

struct DegreeMismatchError : Error {
    using Error::Error;
};

struct MatchAmbiguousError : Error {
    using Error::Error;
};

struct NotAutomorphismError : Error {
    using Error::Error;
};

struct OddRamificationError : Error {
    using Error::Error;
};

struct ComplexPlaceListedError : Error {
    using Error::Error;
};

struct TotallyDefiniteError : Error {
    using Error::Error;
};

struct ZeroDenominatorError : Error {
    using Error::Error;
};

struct NonSquarefreeError : Error {
    using Error::Error;
};

struct CompositeModulusError : Error {
    using Error::Error;
};

// A rational coefficient has denominator divisible by the modulus.
struct BadDenominatorError : Error {
    using Error::Error;
};

struct NotFreeError : Error {
    using Error::Error;
};

struct IntervalSeparationError : Error {
    using Error::Error;
};

}  // namespace quatlat
