#include "pslforge/codec.hpp"

#include <cctype>

namespace pslforge::codec {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

int bit_width(int digit) {
    int w = 0;
    while (digit) {
        ++w;
        digit >>= 1;
    }
    return w;
}

} // namespace

std::string normalize(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (out.empty()) throw CodecError("empty hex string");
    return out;
}

HexSequence encode(const BinarySequence& seq) {
    const int n = seq.length();
    // bit n-1-i of the value corresponds to b_i; emit nibbles MSB-first
    const int digits = (n + 3) / 4;
    std::string text(static_cast<std::size_t>(digits), '0');
    for (int i = 0; i < n; ++i) {
        if (seq[i] < 0) continue;
        const int bit = n - 1 - i;
        const int d = digits - 1 - bit / 4;
        const int v = hex_digit(text[static_cast<std::size_t>(d)]) | (1 << (bit % 4));
        text[static_cast<std::size_t>(d)] = "0123456789abcdef"[v];
    }
    const std::size_t first = text.find_first_not_of('0');
    if (first == std::string::npos) {
        text = "0";
    } else {
        text.erase(0, first);
    }
    return HexSequence{std::move(text), n};
}

BinarySequence decode(std::string_view hex, int n) {
    if (n < 2) throw CodecError("decode requires length >= 2");
    std::string h = normalize(hex);
    for (char c : h) {
        if (hex_digit(c) < 0) throw CodecError("invalid hex character");
    }
    const std::size_t first = h.find_first_not_of('0');
    if (first == std::string::npos) {
        h = "0";
    } else {
        h.erase(0, first);
    }
    // the value must fit in n bits
    const long long bits = (h == "0") ? 0
                                      : 4LL * (static_cast<long long>(h.size()) - 1) +
                                            bit_width(hex_digit(h.front()));
    if (bits > n) {
        throw CodecError("hex value does not fit in the declared length");
    }
    std::vector<std::int8_t> elems(static_cast<std::size_t>(n), -1);
    // hex digit k from the right covers bits 4k..4k+3; bit j maps to b_{n-1-j}
    for (std::size_t k = 0; k < h.size(); ++k) {
        const int d = hex_digit(h[h.size() - 1 - k]);
        for (int t = 0; t < 4; ++t) {
            if ((d >> t) & 1) {
                const std::size_t bit = 4 * k + static_cast<std::size_t>(t);
                elems[static_cast<std::size_t>(n) - 1 - bit] = 1;
            }
        }
    }
    return BinarySequence(std::move(elems));
}

} // namespace pslforge::codec
