#include <cstdint>
#include <string>
#include <vector>

#include "cyclemax/errors.hpp"
#include "cyclemax/graph.hpp"

namespace cyclemax {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

class Reader {
public:
    Reader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    int next(const char* what) {
        if (pos_ >= text_.size())
            throw ParseError(std::string("unexpected end of input while reading ") + what,
                             base_ + pos_);
        const auto c = static_cast<unsigned char>(text_[pos_]);
        if (c < kBias || c > kBias + 63)
            throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126",
                             base_ + pos_);
        ++pos_;
        return c - kBias;
    }

    std::size_t offset() const { return base_ + pos_; }
    bool done() const { return pos_ == text_.size(); }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::uint64_t read_order(Reader& in) {
    int first = in.next("vertex count");
    if (first < 63)
        return static_cast<std::uint64_t>(first);
    int groups = 3;
    int second = in.next("vertex count");
    if (second == 63) {
        groups = 6;
    } else {
        std::uint64_t n = static_cast<std::uint64_t>(second);
        for (int i = 1; i < groups; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(in.next("vertex count"));
        if (n < 63)
            throw ParseError("non-minimal vertex count encoding", in.offset());
        return n;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < groups; ++i)
        n = (n << 6) | static_cast<std::uint64_t>(in.next("vertex count"));
    if (n < 258048)
        throw ParseError("non-minimal vertex count encoding", in.offset());
    return n;
}

void write_order(std::string& out, std::uint64_t n) {
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n < 258048) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

} // namespace

SimpleGraph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    Reader in(text, base);
    const std::uint64_t n64 = read_order(in);
    if (n64 > 100000)
        throw ParseError("vertex count " + std::to_string(n64) + " too large", base);
    const int n = static_cast<int>(n64);

    std::vector<Edge> edges;
    int chunk = 0;
    int bits_left = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits_left == 0) {
                chunk = in.next("adjacency bits");
                bits_left = 6;
            }
            --bits_left;
            if ((chunk >> bits_left) & 1)
                edges.push_back({u, v});
        }
    }
    if (bits_left > 0 && (chunk & ((1 << bits_left) - 1)) != 0)
        throw ParseError("nonzero padding bits", in.offset() - 1);
    if (!in.done())
        throw ParseError("trailing bytes after adjacency data", in.offset());
    return SimpleGraph(n, edges);
}

std::string to_graph6(const SimpleGraph& g) {
    std::string out;
    const int n = g.order();
    write_order(out, static_cast<std::uint64_t>(n));
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

} // namespace cyclemax
