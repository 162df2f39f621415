#pragma once

#include <stdexcept>
#include <string>

namespace isirank {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf2
struct PolynomialNotPrimitive : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct SingularGramMatrix : Error { using Error::Error; };

// rank codes
struct ParamsOutOfRange : Error { using Error::Error; };
struct EnumerationTooLarge : Error { using Error::Error; };
struct NotZeroTailed : Error { using Error::Error; };
struct TailNotZero : Error { using Error::Error; };

// minimal basis
struct SpaceTooLarge : Error { using Error::Error; };
struct NotRepresentable : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ThresholdNotMet : Error { using Error::Error; };

// constellation / encoder
struct UnsupportedL : Error { using Error::Error; };
struct LabelLengthMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct IncompatibleLayerParams : Error { using Error::Error; };
struct CodebookTooLarge : Error { using Error::Error; };

// trellis
struct BlockTooShort : Error { using Error::Error; };
struct MessageDegreeTooHigh : Error { using Error::Error; };

// channel / sim
struct EmptyCodebook : Error { using Error::Error; };
struct InsufficientPoints : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

} // namespace isirank
