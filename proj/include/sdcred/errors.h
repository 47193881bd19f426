#pragma once

#include <stdexcept>
#include <string>

namespace sdcred {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// crypto-core / serialization
struct DecodeError : Error { using Error::Error; };

// pedersen
struct EncodingError : Error { using Error::Error; };

// merkle
struct EmptyTreeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct MalformedProofError : Error { using Error::Error; };

// bls
struct EmptyAggregateError : Error { using Error::Error; };

// rangeproof
struct OutOfRangeError : Error { using Error::Error; };
struct UnsupportedBitWidthError : Error { using Error::Error; };

// credential / presentation
struct FormatError : Error { using Error::Error; };
struct TypeError : Error { using Error::Error; };
struct InvalidCredentialError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };

// registry
struct RogueKeyError : Error { using Error::Error; };
struct ImmutableFormatError : Error { using Error::Error; };
struct UntrustedKeyError : Error { using Error::Error; };
struct DuplicateRootError : Error { using Error::Error; };
struct UnknownFormatError : Error { using Error::Error; };

// environment: unreadable or locked files, not domain failures
struct EnvironmentError : Error { using Error::Error; };

}  // namespace sdcred
