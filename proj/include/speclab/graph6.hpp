#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "speclab/graph.hpp"

namespace speclab {

// Parse failure carrying the byte offset of the offending character.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}

    std::size_t byte_offset;
};

// Standard graph6 encoding (bit-exact): N(n) header followed by the upper
// triangle in column-major order, six bits per byte, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > 68719476735LL) throw std::invalid_argument("to_graph6: order exceeds graph6 limits");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw Graph6ParseError("graph6: truncated input", pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6ParseError("graph6: byte out of printable range", pos);
        ++pos;
        return c - 63;
    };

    long long n = next();
    if (n == 63) {
        n = 0;
        int first = next();
        if (first == 63) {  // '~~': 36-bit order
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        } else {
            n = first;
            for (int i = 0; i < 2; ++i) n = (n << 6) | next();
        }
    }
    if (n > 4096) throw Graph6ParseError("graph6: order too large for this tool", 0);

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw Graph6ParseError("graph6: nonzero padding bits", pos - 1);
    if (pos != text.size())
        throw Graph6ParseError("graph6: trailing bytes after encoding", pos);
    return g;
}

}  // namespace speclab
