#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendro {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArityMismatch : Error { using Error::Error; };
struct LeafHasNoBreadth : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DerivOrderOverflow : Error { using Error::Error; };
struct MorphismPrecondition : Error { using Error::Error; };
struct CommutativityViolation : Error { using Error::Error; };
struct AxiomViolation : Error { using Error::Error; };
struct RBLawViolation : Error { using Error::Error; };
struct CommutationViolation : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };
struct ZeroQ : Error { using Error::Error; };
struct WeightNotZero : Error { using Error::Error; };
struct UnboundSymbol : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

/// Parse failure with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;

    ParseError(std::size_t off, std::string exp)
        : Error("parse error at byte " + std::to_string(off) + ": expected " + exp),
          offset(off),
          expected(std::move(exp)) {}
};

/// Two different product operators chained without parentheses.
struct MixedOperatorAmbiguity : ParseError {
    MixedOperatorAmbiguity(std::size_t off, std::string exp)
        : ParseError(off, std::move(exp)) {}
};

}  // namespace dendro
