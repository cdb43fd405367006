#include "spanlf/graph6.hpp"

#include "spanlf/errors.hpp"

namespace spanlf {
namespace {

constexpr int kBias = 63;
constexpr int kLongPrefix = 126;

int sextet(char c, std::size_t pos) {
    const int value = static_cast<unsigned char>(c);
    if (value < kBias || value > kLongPrefix)
        throw ParseError(ParseErrorKind::byte_out_of_range,
                         "graph6 byte " + std::to_string(value) + " at offset " +
                             std::to_string(pos) + " outside [63, 126]");
    return value - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw ParseError(ParseErrorKind::malformed_header, "empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    if (static_cast<unsigned char>(text[0]) == kLongPrefix) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongPrefix) {
            // 8-byte form, only used for n >= 258048.
            if (text.size() < 8)
                throw ParseError(ParseErrorKind::malformed_header, "truncated 8-byte graph6 header");
            throw ParseError(ParseErrorKind::too_many_vertices, "graph6 order exceeds 64");
        }
        if (text.size() < 4)
            throw ParseError(ParseErrorKind::malformed_header, "truncated 4-byte graph6 header");
        for (pos = 1; pos < 4; ++pos) {
            const int value = static_cast<unsigned char>(text[pos]);
            if (value < kBias || value > kLongPrefix)
                throw ParseError(ParseErrorKind::malformed_header, "invalid graph6 size byte");
            n = (n << 6) | (value - kBias);
        }
        if (n < 63)
            throw ParseError(ParseErrorKind::malformed_header,
                             "4-byte graph6 header used for order " + std::to_string(n));
    } else {
        const int value = static_cast<unsigned char>(text[0]);
        if (value < kBias)
            throw ParseError(ParseErrorKind::byte_out_of_range, "graph6 size byte below 63");
        n = value - kBias;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw ParseError(ParseErrorKind::too_many_vertices,
                         "graph6 order " + std::to_string(n) + " exceeds 64");
    if (n == 0) throw ParseError(ParseErrorKind::malformed_header, "graph6 order 0 is not supported");

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(pairs(order));
    const std::size_t body = (bits + 5) / 6;
    if (text.size() < pos + body)
        throw ParseError(ParseErrorKind::truncated, "graph6 body has " +
                                                        std::to_string(text.size() - pos) +
                                                        " bytes, expected " + std::to_string(body));
    if (text.size() > pos + body)
        throw ParseError(ParseErrorKind::trailing_garbage,
                         "graph6 string has " + std::to_string(text.size() - pos - body) +
                             " extra bytes");

    Graph g(order);
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = sextet(text[pos + k / 6], pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const int chunk = sextet(text[pos + k / 6], pos + k / 6);
        if (chunk & ((1 << (6 - k % 6)) - 1))
            throw ParseError(ParseErrorKind::trailing_garbage, "nonzero graph6 padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kLongPrefix));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        const VertexSet row = g.rows()[j];
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | static_cast<int>((row >> i) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_catalog(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace spanlf
