#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "cyclemax/errors.hpp"
#include "cyclemax/graph.hpp"

namespace cyclemax {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_integer(std::string_view token, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                             std::string(token) + "'",
                         line_no);
    return value;
}

} // namespace

Multigraph parse_multigraph(std::string_view text) {
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<Multigraph::Bundle> bundles;
    std::set<std::pair<long long, long long>> seen;

    while (!text.empty()) {
        auto cut = text.find('\n');
        std::string_view raw = text.substr(0, cut);
        text.remove_prefix(cut == std::string_view::npos ? text.size() : cut + 1);
        ++line_no;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto tokens = fields(line);
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(line_no) + ": " + why, line_no);
        };

        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "MULTI")
                fail("expected header 'MULTI <n>'");
            n = to_integer(tokens[1], line_no);
            if (n < 0 || n > 100000)
                fail("vertex count out of range");
            continue;
        }
        if (tokens.size() != 3)
            fail("expected '<u> <v> <mult>'");
        long long u = to_integer(tokens[0], line_no);
        long long v = to_integer(tokens[1], line_no);
        long long k = to_integer(tokens[2], line_no);
        if (u == v)
            fail("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("vertex index out of range 0.." + std::to_string(n - 1));
        if (u > v)
            fail("pair must be written with u < v");
        if (k < 1)
            fail("multiplicity must be at least 1");
        if (k > 0xffffffffLL)
            fail("multiplicity too large");
        if (!seen.insert({u, v}).second)
            fail("duplicate pair " + std::to_string(u) + " " + std::to_string(v));
        bundles.push_back({{static_cast<Vertex>(u), static_cast<Vertex>(v)},
                           static_cast<std::uint32_t>(k)});
    }
    if (n < 0)
        throw ParseError("missing 'MULTI <n>' header", line_no);
    return Multigraph(static_cast<int>(n), bundles);
}

std::string to_multigraph_text(const Multigraph& g) {
    std::string out = "MULTI " + std::to_string(g.order()) + "\n";
    for (const auto& b : g.bundles())
        out += std::to_string(b.pair.u) + " " + std::to_string(b.pair.v) + " " +
               std::to_string(b.multiplicity) + "\n";
    return out;
}

} // namespace cyclemax
