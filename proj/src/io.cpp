#include "neardist/io.hpp"

#include "neardist/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace neardist {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line) {
    T value{};
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, "non-numeric token '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

PointSet parse_pointset_text(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back(text.substr(start));
            }
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    std::size_t at = 0;
    while (at < lines.size() && split_ws(lines[at]).empty()) {
        ++at;
    }
    if (at == lines.size()) {
        throw ParseError(1, "missing header 'd n'");
    }
    const auto header = split_ws(lines[at]);
    if (header.size() != 2) {
        throw ParseError(at + 1, "header must be 'd n'");
    }
    const auto dim = parse_number<long long>(header[0], at + 1);
    const auto n = parse_number<long long>(header[1], at + 1);
    if (dim <= 0 || n < 0) {
        throw ParseError(at + 1, "header needs d >= 1 and n >= 0");
    }

    PointSet out(static_cast<std::size_t>(dim));
    for (++at; at < lines.size(); ++at) {
        const auto toks = split_ws(lines[at]);
        if (toks.empty()) {
            continue;
        }
        if (out.size() == static_cast<std::size_t>(n)) {
            throw ParseError(at + 1, "more rows than the header's n = " + std::to_string(n));
        }
        if (toks.size() != static_cast<std::size_t>(dim)) {
            throw ParseError(at + 1, "row has " + std::to_string(toks.size()) +
                                         " coordinates, header says d = " + std::to_string(dim));
        }
        Coords p;
        p.reserve(toks.size());
        for (auto tok : toks) {
            const double x = parse_number<double>(tok, at + 1);
            if (!std::isfinite(x)) {
                throw ParseError(at + 1, "non-finite coordinate");
            }
            p.push_back(x);
        }
        out.push_back(std::move(p));
    }
    if (out.size() != static_cast<std::size_t>(n)) {
        throw ParseError(lines.size() + 1, "expected " + std::to_string(n) + " rows, found " +
                                               std::to_string(out.size()));
    }
    return out;
}

PointSet parse_pointset(const std::filesystem::path& path) {
    return parse_pointset_text(read_file(path));
}

std::string format_pointset(const PointSet& points) {
    std::string out = std::to_string(points.dim()) + " " + std::to_string(points.size()) + "\n";
    char buf[40];
    for (const auto& p : points.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", p[i]);
            if (i > 0) {
                out += ' ';
            }
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void emit_pointset(const PointSet& points, const std::filesystem::path& path) {
    write_file_atomic(path, format_pointset(points));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw InputError("cannot open " + tmp.string() + " for writing");
        }
        os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!os) {
            throw InputError("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace neardist
