#include "locdom/graph6.hpp"

namespace locdom {

// graph6 layout: a length header, then ceil(n(n-1)/2 / 6) bytes of edge bits.
// Every data byte holds 6 bits (most significant first) offset by 63 so it
// stays printable. Edge bits run over the upper triangle column by column:
// x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxOrder = 258047;

int data_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw Graph6Error("unexpected end of input", pos);
    unsigned char c = line[pos];
    if (c < 63 || c > 126) throw Graph6Error("byte out of graph6 range", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    std::size_t pos = 0;
    if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

    if (pos >= line.size()) throw Graph6Error("missing length header", pos);
    long n;
    int first = data_byte(line, pos);
    if (first < 63) {
        n = first;
        pos++;
    } else {
        // 126 introduces the medium form; a second 126 would be the long form.
        if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126)
            throw Graph6Error("long-form length header not supported", pos);
        long b1 = data_byte(line, pos + 1);
        long b2 = data_byte(line, pos + 2);
        long b3 = data_byte(line, pos + 3);
        n = (b1 << 12) | (b2 << 6) | b3;
        if (n > kMaxOrder) throw Graph6Error("graph order exceeds 258047", pos);
        pos += 4;
    }

    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    int col = 1, row = 0;
    for (long k = 0; k < nbytes; k++) {
        int val = data_byte(line, pos);
        for (int s = 5; s >= 0; s--, bit++) {
            int b = (val >> s) & 1;
            if (bit >= nbits) {
                if (b) throw Graph6Error("nonzero padding bit", pos);
                continue;
            }
            if (b) edges.emplace_back(row, col);
            if (++row == col) {
                col++;
                row = 0;
            }
        }
        pos++;
    }
    if (pos != line.size()) throw Graph6Error("trailing data after edge bits", pos);
    return Graph(int(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const long n = g.order();
    if (n > kMaxOrder) throw std::invalid_argument("graph order exceeds graph6 limit of 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; col++) {
        for (int row = 0; row < col; row++) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(char((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace locdom
