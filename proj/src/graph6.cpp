#include "d2tf/graph6.hpp"

namespace d2tf {

namespace {

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw Graph6ParseError(pos, "unexpected end of line");
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw Graph6ParseError(pos, "byte outside printable graph6 range");
    return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw Graph6ParseError(0, "empty line");

    std::size_t pos = 0;
    long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6ParseError(0, "8-byte order field exceeds supported range");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | sextet(line, pos);
    } else {
        n = sextet(line, 0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw Graph6ParseError(0, "vertex count " + std::to_string(n) + " outside [1, " +
                                      std::to_string(kMaxVertices) + "]");

    GraphBuilder builder(static_cast<int>(n));
    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != pos + nbytes)
        throw Graph6ParseError(line.size(),
                               "expected " + std::to_string(pos + nbytes) + " bytes, got " +
                                   std::to_string(line.size()));

    long bit = 0;
    int col = 1, row = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        int group = sextet(line, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            const int value = (group >> b) & 1;
            if (bit >= nbits) {
                if (value)
                    throw Graph6ParseError(pos + k, "nonzero padding bit");
                continue;
            }
            if (value) builder.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return std::move(builder).build();
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((group << (6 - nbits)) + 63));
    return out;
}

}  // namespace d2tf
