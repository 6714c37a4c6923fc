#include "stemtree/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stemtree {

// graph6: N(n) header then the upper triangle of the adjacency matrix in
// column-major order, packed 6 bits per printable byte (offset 63).

namespace {

constexpr int kOffset = 63;
constexpr char kLongPrefix = 126;  // '~'

int data_value(std::string_view s, size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte " + std::to_string(i + 1) + " out of range");
    return c - kOffset;
}

// Decodes N(n) and returns the number of header bytes consumed.
size_t decode_order(std::string_view s, std::int64_t& n) {
    if (s.empty()) throw ParseError("graph6: empty input");
    if (s[0] != kLongPrefix) {
        n = data_value(s, 0);
        return 1;
    }
    if (s.size() >= 2 && s[1] == kLongPrefix) {
        if (s.size() < 8) throw ParseError("graph6: truncated 8-byte order field");
        n = 0;
        for (size_t i = 2; i < 8; ++i) n = (n << 6) | data_value(s, i);
        if (n < 258048) throw ParseError("graph6: non-minimal order encoding");
        return 8;
    }
    if (s.size() < 4) throw ParseError("graph6: truncated 4-byte order field");
    n = 0;
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | data_value(s, i);
    if (n < 63) throw ParseError("graph6: non-minimal order encoding");
    return 4;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    std::int64_t n64 = 0;
    size_t pos = decode_order(line, n64);
    // Distance sentinels and size_t products stay safe well below this cap,
    // and no practical input comes anywhere near it.
    if (n64 > 1'000'000) throw ParseError("graph6: vertex count too large");
    if (n64 < 1) throw ParseError("graph6: graph of order zero is not supported");
    int n = static_cast<int>(n64);

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                         std::to_string(line.size() - pos));

    std::vector<Edge> edges;
    size_t bit = 0;
    int value = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) value = data_value(line, pos + bit / 6);
            if (value & (1 << (5 - static_cast<int>(bit % 6)))) edges.emplace_back(i, j);
        }
    }
    if (nbits % 6 != 0 && nbytes > 0) {
        int last = data_value(line, pos + nbytes - 1);
        int pad = static_cast<int>(6 - nbits % 6);
        if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    std::int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back(kLongPrefix);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
    } else {
        out.push_back(kLongPrefix);
        out.push_back(kLongPrefix);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
    }

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t header = out.size();
    out.resize(header + (nbits + 5) / 6, static_cast<char>(kOffset));
    size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                out[header + bit / 6] += static_cast<char>(1 << (5 - static_cast<int>(bit % 6)));
        }
    }
    return out;
}

}  // namespace stemtree
