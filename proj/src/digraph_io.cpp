#include "scimm/digraph_io.hpp"

#include <fstream>
#include <sstream>

namespace scimm {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw Error("line " + std::to_string(line_no) + ": " + what);
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
    std::istringstream ss(s);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        if (is_blank(line)) fail(line_no, "blank line before header");
        if (!parse_two_ints(line, n, m)) fail(line_no, "malformed header, expected \"n m\"");
        if (n < 0 || m < 0) fail(line_no, "negative count in header");
        break;
    }
    if (n < 0) throw Error("empty input, missing \"n m\" header");

    Digraph d(static_cast<int>(n));
    long long seen = 0;
    while (seen < m) {
        if (!std::getline(in, line)) throw Error("unexpected end of input: expected " +
                                                 std::to_string(m) + " arcs, got " +
                                                 std::to_string(seen));
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        long long u, v;
        if (!parse_two_ints(line, u, v)) fail(line_no, "malformed arc line, expected \"u v\"");
        if (u < 0 || u >= n) fail(line_no, "vertex index " + std::to_string(u) + " out of range");
        if (v < 0 || v >= n) fail(line_no, "vertex index " + std::to_string(v) + " out of range");
        if (u == v) fail(line_no, "loop arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (d.has_arc(static_cast<int>(u), static_cast<int>(v)))
            fail(line_no, "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        d.add_arc(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        if (!is_blank(line)) fail(line_no, "trailing content after " + std::to_string(m) + " arcs");
    }
    return d;
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return parse_digraph(in);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
    return out.str();
}

}  // namespace scimm
