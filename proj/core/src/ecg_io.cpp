#include "rgl/ecg_io.hpp"

#include <fstream>
#include <sstream>

namespace rgl {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    return value;
}

} // namespace

EdgeColoredGraph parse_ecg(std::istream& in) {
    EdgeColoredGraph g;
    std::string line;
    int lineno = 0;
    int stage = 0; // 0: want magic, 1: want n, 2: classes
    int class_line_of_color_start = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (stage == 0) {
            if (toks.size() != 2 || toks[0] != "ecg" || toks[1] != "1")
                throw ParseError(lineno, "expected header 'ecg 1'");
            stage = 1;
            continue;
        }
        if (stage == 1) {
            if (toks.size() != 2 || toks[0] != "n")
                throw ParseError(lineno, "expected 'n <vertex_count>'");
            g.n = parse_int(toks[1], lineno, "vertex count");
            if (g.n < 0) throw ParseError(lineno, "vertex count is negative");
            stage = 2;
            continue;
        }

        if (toks[0] != "class")
            throw ParseError(lineno, "expected 'class ...' line, got '" + toks[0] + "'");
        if (toks.size() < 5)
            throw ParseError(lineno, "class line needs a color, a kind and at least one edge");
        if ((toks.size() - 3) % 2 != 0)
            throw ParseError(lineno, "odd number of edge endpoints");

        ColorClass c;
        c.color = parse_int(toks[1], lineno, "color");
        auto kind = class_kind_from_string(toks[2]);
        if (!kind) throw ParseError(lineno, "unknown class kind '" + toks[2] + "'");
        c.kind = *kind;

        for (std::size_t i = 3; i + 1 < toks.size(); i += 2) {
            int u = parse_int(toks[i], lineno, "vertex");
            int v = parse_int(toks[i + 1], lineno, "vertex");
            if (u == v) throw ParseError(lineno, "loop edge " + toks[i] + " " + toks[i + 1]);
            if (u > v)
                throw ParseError(lineno, "edge not in min-max order: " + toks[i] + " " + toks[i + 1]);
            if (u < 0 || v >= g.n)
                throw ParseError(lineno, "vertex out of range: " + toks[i] + " " + toks[i + 1]);
            c.edges.push_back(Edge{u, v});
        }
        for (std::size_t i = 0; i + 1 < c.edges.size(); ++i) {
            if (c.edges[i] == c.edges[i + 1]) throw ParseError(lineno, "duplicate edge in class");
            if (!(c.edges[i] < c.edges[i + 1])) throw ParseError(lineno, "class edges not sorted");
        }

        ClassKind actual = classify_class(c.edges);
        if (actual != c.kind) {
            if (c.kind == ClassKind::Matching2 && actual == ClassKind::Star) {
                const Edge a = c.edges[0], b = c.edges[1];
                Vertex shared = (a.u == b.u || a.u == b.v) ? a.u : a.v;
                throw ParseError(lineno, "matching2 edges share vertex " + std::to_string(shared));
            }
            throw ParseError(lineno, std::string("declared ") + to_string(c.kind) +
                                         " but edges classify as " + to_string(actual));
        }

        if (!g.classes.empty() && c.color <= g.classes.back().color)
            throw ParseError(lineno, "class colors not strictly ascending");
        if (g.classes.empty()) class_line_of_color_start = lineno;
        g.classes.push_back(std::move(c));
    }

    if (stage == 0) throw ParseError(lineno, "missing header 'ecg 1'");
    if (stage == 1) throw ParseError(lineno, "missing 'n <vertex_count>' line");

    g.rebuild_index();
    auto diags = validate(g);
    if (!diags.empty()) throw ParseError(class_line_of_color_start, diags.front());
    return g;
}

EdgeColoredGraph parse_ecg_string(const std::string& text) {
    std::istringstream is(text);
    return parse_ecg(is);
}

EdgeColoredGraph load_ecg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_ecg(in);
}

void serialize_ecg(const EdgeColoredGraph& g, std::ostream& out) {
    out << "ecg 1\n";
    out << "n " << g.n << "\n";
    for (const auto& c : g.classes) {
        out << "class " << c.color << " " << to_string(c.kind);
        for (const Edge& e : c.edges) out << " " << e.u << " " << e.v;
        out << "\n";
    }
}

std::string serialize_ecg_string(const EdgeColoredGraph& g) {
    std::ostringstream os;
    serialize_ecg(g, os);
    return os.str();
}

void save_ecg_file(const EdgeColoredGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    serialize_ecg(g, out);
}

} // namespace rgl
