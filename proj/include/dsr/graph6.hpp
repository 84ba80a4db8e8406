#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// graph6 text format: printable bytes 63..126, six payload bits per byte,
// order header followed by the upper triangle in column order.

namespace graph6_detail {

inline int payload(char c, std::size_t offset) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw parse_error("graph6: non-printable or out-of-range byte at offset " +
                          std::to_string(offset));
    return b - 63;
}

} // namespace graph6_detail

inline Graph from_graph6(std::string_view text) {
    using graph6_detail::payload;
    // strip a trailing newline, tolerate the optional ">>graph6<<" header
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    int h0 = payload(text[pos], pos);
    ++pos;
    if (h0 < 63) {
        n = h0;
    } else {
        // 126 escape: 3-byte order, or 126 126 escape: 6-byte order
        if (pos >= text.size()) throw parse_error("graph6: truncated order header at offset 1");
        int h1 = payload(text[pos], pos);
        int words = 3;
        if (h1 == 63) {
            ++pos;
            words = 6;
        }
        n = 0;
        for (int i = 0; i < words; ++i, ++pos) {
            if (pos >= text.size())
                throw parse_error("graph6: truncated order header at offset " + std::to_string(pos));
            n = (n << 6) | payload(text[pos], pos);
        }
    }
    if (n < 1) throw parse_error("graph6: order must be >= 1");
    if (n > (1LL << 18)) throw parse_error("graph6: order exceeds 2^18");

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    int bit_in_byte = 0;
    int current = 0;
    long long bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit_index) {
            if (bit_in_byte == 0) {
                if (pos >= text.size())
                    throw parse_error("graph6: truncated bit field at offset " + std::to_string(pos));
                current = payload(text[pos], pos);
                ++pos;
                bit_in_byte = 6;
            }
            --bit_in_byte;
            if (current & (1 << bit_in_byte)) g.add_edge(u, v);
        }
    }
    (void)bits_needed;
    if (pos != text.size())
        throw parse_error("graph6: trailing bytes at offset " + std::to_string(pos));
    return g;
}

inline std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order exceeds 2^18");
    }
    int bit_in_byte = 6;
    int current = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            --bit_in_byte;
            if (g.has_edge(u, v)) current |= 1 << bit_in_byte;
            if (bit_in_byte == 0) {
                out.push_back(static_cast<char>(current + 63));
                current = 0;
                bit_in_byte = 6;
            }
        }
    }
    if (bit_in_byte != 6) out.push_back(static_cast<char>(current + 63));
    return out;
}

// Parses newline-delimited graph6 text, skipping ">>" header lines and blanks.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.substr(0, 2) != ">>") out.push_back(from_graph6(line));
        start = end + 1;
    }
    return out;
}

} // namespace dsr
