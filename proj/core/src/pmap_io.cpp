#include "planedual/pmap_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace planedual {

const char* to_string(ParseErrorKind k) {
    switch (k) {
    case ParseErrorKind::BadHeader: return "bad header";
    case ParseErrorKind::NonIntegerToken: return "non-integer token";
    case ParseErrorKind::CountsInconsistent: return "counts inconsistent";
    case ParseErrorKind::DartRepeated: return "dart repeated";
    case ParseErrorKind::DartMissing: return "dart missing";
    }
    return "?";
}

namespace {

struct Line {
    int number = 0; // 1-based physical line
    std::vector<std::string> tokens;
};

std::vector<Line> effective_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                             : nl - pos);
        ++number;
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        if (!raw.empty() && raw.front() == '#') continue;
        Line line;
        line.number = number;
        std::istringstream iss{std::string(raw)};
        std::string tok;
        while (iss >> tok) line.tokens.push_back(tok);
        if (line.tokens.empty()) continue;
        out.push_back(std::move(line));
    }
    return out;
}

std::int64_t parse_int(const std::string& tok, int line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(ParseErrorKind::NonIntegerToken, line,
                         "non-integer token '" + tok + "'");
    return value;
}

} // namespace

RotationSystem parse_rotation_system(std::string_view text) {
    const std::vector<Line> lines = effective_lines(text);
    std::size_t at = 0;
    auto need_line = [&](const char* what) -> const Line& {
        if (at >= lines.size()) {
            int last = lines.empty() ? 1 : lines.back().number;
            throw ParseError(ParseErrorKind::CountsInconsistent, last,
                             std::string("missing ") + what);
        }
        return lines[at++];
    };

    {
        const Line& header = need_line("header");
        if (header.tokens.size() != 2 || header.tokens[0] != "pmap" || header.tokens[1] != "1")
            throw ParseError(ParseErrorKind::BadHeader, header.number,
                             "expected 'pmap 1'");
    }

    RotationSystem rs;
    {
        const Line& vline = need_line("V line");
        if (vline.tokens.size() != 2 || vline.tokens[0] != "V")
            throw ParseError(ParseErrorKind::BadHeader, vline.number, "expected 'V <n>'");
        std::int64_t n = parse_int(vline.tokens[1], vline.number);
        if (n < 1)
            throw ParseError(ParseErrorKind::CountsInconsistent, vline.number,
                             "vertex count must be positive");
        rs.n_vertices = static_cast<std::int32_t>(n);
    }
    {
        const Line& eline = need_line("E line");
        if (eline.tokens.size() != 2 || eline.tokens[0] != "E")
            throw ParseError(ParseErrorKind::BadHeader, eline.number, "expected 'E <m>'");
        std::int64_t m = parse_int(eline.tokens[1], eline.number);
        if (m < 1)
            throw ParseError(ParseErrorKind::CountsInconsistent, eline.number,
                             "edge count must be positive");
        rs.n_edges = static_cast<std::int32_t>(m);
    }

    const std::int32_t n_darts = rs.dart_count();
    rs.sigma.assign(static_cast<std::size_t>(n_darts), -1);
    rs.vertex_of.assign(static_cast<std::size_t>(n_darts), -1);
    std::vector<bool> vertex_seen(static_cast<std::size_t>(rs.n_vertices), false);

    for (std::int32_t i = 0; i < rs.n_vertices; ++i) {
        const Line& line = need_line("sigma line");
        if (line.tokens.size() < 3 || line.tokens[0] != "sigma")
            throw ParseError(ParseErrorKind::CountsInconsistent, line.number,
                             "expected 'sigma <v>: d0 d1 ...'");
        std::string vtok = line.tokens[1];
        if (vtok.empty() || vtok.back() != ':')
            throw ParseError(ParseErrorKind::CountsInconsistent, line.number,
                             "vertex id must be followed by ':'");
        vtok.pop_back();
        std::int64_t v = parse_int(vtok, line.number);
        if (v < 0 || v >= rs.n_vertices)
            throw ParseError(ParseErrorKind::CountsInconsistent, line.number,
                             "vertex id out of range");
        if (vertex_seen[static_cast<std::size_t>(v)])
            throw ParseError(ParseErrorKind::CountsInconsistent, line.number,
                             "vertex " + std::to_string(v) + " listed twice");
        vertex_seen[static_cast<std::size_t>(v)] = true;

        std::vector<Dart> cycle;
        for (std::size_t t = 2; t < line.tokens.size(); ++t) {
            std::int64_t d = parse_int(line.tokens[t], line.number);
            if (d < 0 || d >= n_darts)
                throw ParseError(ParseErrorKind::CountsInconsistent, line.number,
                                 "dart " + std::to_string(d) + " out of range");
            if (rs.vertex_of[static_cast<std::size_t>(d)] != -1)
                throw ParseError(ParseErrorKind::DartRepeated, line.number,
                                 "dart " + std::to_string(d) + " repeated");
            rs.vertex_of[static_cast<std::size_t>(d)] = static_cast<VertexId>(v);
            cycle.push_back(static_cast<Dart>(d));
        }
        for (std::size_t t = 0; t < cycle.size(); ++t)
            rs.sigma[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % cycle.size()];
    }

    if (at < lines.size())
        throw ParseError(ParseErrorKind::CountsInconsistent, lines[at].number,
                         "unexpected content after sigma lines");

    for (Dart d = 0; d < n_darts; ++d)
        if (rs.vertex_of[static_cast<std::size_t>(d)] == -1)
            throw ParseError(ParseErrorKind::DartMissing,
                             lines.empty() ? 1 : lines.back().number,
                             "dart " + std::to_string(d) + " missing");

    return rs;
}

std::string serialize(const RotationSystem& rs) {
    const std::int32_t n_darts = rs.dart_count();
    std::vector<Dart> min_dart(static_cast<std::size_t>(rs.n_vertices), -1);
    for (Dart d = 0; d < n_darts; ++d) {
        VertexId v = rs.vertex_of[static_cast<std::size_t>(d)];
        if (v < 0 || v >= rs.n_vertices)
            throw std::invalid_argument("serialize: vertex id out of range");
        if (min_dart[static_cast<std::size_t>(v)] == -1)
            min_dart[static_cast<std::size_t>(v)] = d;
    }

    std::ostringstream out;
    out << "pmap 1\n";
    out << "V " << rs.n_vertices << "\n";
    out << "E " << rs.n_edges << "\n";
    for (VertexId v = 0; v < rs.n_vertices; ++v) {
        Dart start = min_dart[static_cast<std::size_t>(v)];
        if (start == -1)
            throw std::invalid_argument("serialize: vertex owns no darts");
        out << "sigma " << v << ":";
        Dart d = start;
        std::int32_t guard = 0;
        do {
            out << " " << d;
            d = rs.sigma[static_cast<std::size_t>(d)];
            if (++guard > n_darts)
                throw std::invalid_argument("serialize: sigma is not a permutation");
        } while (d != start);
        out << "\n";
    }
    return out.str();
}

} // namespace planedual
