// Shared basics: exact arithmetic aliases, error taxonomy, deterministic RNG.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cardcomp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error taxonomy. One exception type per failure category so callers (and the
// CLI exit-code mapping) can distinguish them without string matching.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure: byte offset plus a human-readable "expected ..." set.
struct SyntaxError : Error {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, const std::string& expected_what)
        : Error("syntax error at offset " + std::to_string(pos) + ": expected " + expected_what),
          position(pos),
          expected(expected_what) {}
};

// A formula/term mentions a label absent from the registry.
struct UnknownLabel : Error {
    std::string label;
    explicit UnknownLabel(const std::string& name)
        : Error("unknown label '" + name + "'"), label(name) {}
};

// Mixing objects built over different atom universes.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A binary-tree shape string with a node that has exactly one child,
// or tree/term-list arity disagreement.
struct MalformedTree : Error {
    using Error::Error;
};

// Label cap or step budget exhausted.
struct LimitExceeded : Error {
    using Error::Error;
};

// Brute-force search space exceeds the step budget before the search starts.
struct BoundsTooLarge : Error {
    using Error::Error;
};

// Total-order extension: the seeded non-relation is already forced.
struct SeedDerivable : Error {
    using Error::Error;
};

// Problem-file / artifact-file shape errors (CLI layer).
struct InputError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic RNG. SplitMix64: tiny, well mixed, and — unlike the standard
// <random> distributions — produces the same stream on every implementation.
// ---------------------------------------------------------------------------

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n). Plain modulo: the tiny bias is irrelevant
    // for test-data generation and the result is fully portable.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool chance_percent(std::uint64_t percent) { return below(100) < percent; }

  private:
    std::uint64_t state_;
};

}  // namespace cardcomp
