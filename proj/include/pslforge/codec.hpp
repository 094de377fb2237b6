#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pslforge/sequence.hpp"

namespace pslforge::codec {

class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal lowercase hex rendering of a sequence plus the length needed to
/// decode it again. -1 maps to bit 0, +1 to bit 1, b_0 is the most
/// significant bit, and leading zero digits are dropped ("0" for all -1).
struct HexSequence {
    std::string text;
    int length = 0;
};

/// Strips all whitespace and lowercases. Throws CodecError if nothing is
/// left. Published tables wrap hex strings across lines, so this runs in
/// front of every decode.
std::string normalize(std::string_view raw);

HexSequence encode(const BinarySequence& seq);

/// Inverse of encode. `hex` is normalized first; its value must be < 2^n.
BinarySequence decode(std::string_view hex, int n);

} // namespace pslforge::codec
