#include "wg/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wg {

namespace {

// Feeds content lines (comments stripped, blanks skipped) one at a time and
// remembers the line number for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::istringstream next(const std::string& expected) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return std::istringstream(line);
        }
        throw ParseError("unexpected end of file, expected " + expected, lineno_);
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, lineno_); }
    long lineno() const { return lineno_; }

private:
    std::istream& in_;
    long lineno_ = 0;
};

template <typename T>
T want(LineReader& reader, std::istringstream& line, const std::string& what) {
    T value;
    if (!(line >> value)) reader.fail("expected " + what);
    return value;
}

void want_id(LineReader& reader, std::istringstream& line, int expected,
             const std::string& what) {
    int id = want<int>(reader, line, what + " id");
    if (id != expected)
        reader.fail(what + " id " + std::to_string(id) + " out of order, expected " +
                    std::to_string(expected));
}

void want_end(LineReader& reader, std::istringstream& line) {
    std::string rest;
    if (line >> rest) reader.fail("trailing content '" + rest + "'");
}

int want_count(LineReader& reader, const std::string& keyword) {
    auto line = reader.next("'" + keyword + " N'");
    std::string word = want<std::string>(reader, line, "keyword '" + keyword + "'");
    if (word != keyword) reader.fail("expected '" + keyword + "', got '" + word + "'");
    int count = want<int>(reader, line, keyword + " count");
    if (count < 0) reader.fail("negative " + keyword + " count");
    want_end(reader, line);
    return count;
}

void format(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

Mesh read_mesh(std::istream& in, const CurveRegistry& registry) {
    LineReader reader(in);

    {
        auto line = reader.next("'wgmesh 1' header");
        std::string magic = want<std::string>(reader, line, "'wgmesh' header");
        int version = want<int>(reader, line, "format version");
        if (magic != "wgmesh" || version != 1)
            reader.fail("not a wgmesh version 1 file");
        want_end(reader, line);
    }

    int nv = want_count(reader, "vertices");
    std::vector<Point2> vertices(nv);
    for (int i = 0; i < nv; ++i) {
        auto line = reader.next("vertex record");
        want_id(reader, line, i, "vertex");
        vertices[i].x = want<double>(reader, line, "vertex x");
        vertices[i].y = want<double>(reader, line, "vertex y");
        want_end(reader, line);
    }

    int ne = want_count(reader, "edges");
    std::vector<EdgeDef> edges(ne);
    for (int i = 0; i < ne; ++i) {
        auto line = reader.next("edge record");
        want_id(reader, line, i, "edge");
        edges[i].v0 = want<int>(reader, line, "edge v0");
        edges[i].v1 = want<int>(reader, line, "edge v1");
        std::string kind = want<std::string>(reader, line, "edge kind");
        if (kind == "line") {
            edges[i].geometry = LineSpec{}; // resolved from the vertex table
        } else if (kind == "arc") {
            ArcSpec arc;
            arc.center.x = want<double>(reader, line, "arc cx");
            arc.center.y = want<double>(reader, line, "arc cy");
            arc.radius = want<double>(reader, line, "arc r");
            arc.theta0 = want<double>(reader, line, "arc theta0");
            arc.theta1 = want<double>(reader, line, "arc theta1");
            edges[i].geometry = arc;
        } else if (kind == "graph") {
            GraphSpec graph;
            graph.curve_name = want<std::string>(reader, line, "graph curve name");
            graph.x0 = want<double>(reader, line, "graph x0");
            graph.x1 = want<double>(reader, line, "graph x1");
            edges[i].geometry = graph;
        } else {
            reader.fail("unknown edge kind '" + kind + "'");
        }
        want_end(reader, line);
    }

    int nel = want_count(reader, "elements");
    std::vector<std::vector<SignedEdge>> loops(nel);
    for (int i = 0; i < nel; ++i) {
        auto line = reader.next("element record");
        want_id(reader, line, i, "element");
        int count = want<int>(reader, line, "element edge count");
        if (count < 1) reader.fail("element edge count must be positive");
        loops[i].resize(count);
        for (int j = 0; j < count; ++j) {
            // the sign character carries the direction, so "-0" works
            std::string tok = want<std::string>(reader, line, "signed edge reference");
            SignedEdge& se = loops[i][j];
            se.reversed = tok[0] == '-';
            std::size_t pos = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
            try {
                std::size_t used = 0;
                se.edge = std::stoi(tok.substr(pos), &used);
                if (pos + used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                reader.fail("bad edge reference '" + tok + "'");
            }
        }
        want_end(reader, line);
    }

    try {
        return build_mesh(std::move(vertices), edges, loops, registry);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("mesh file invalid: ") + e.what());
    }
}

Mesh read_mesh_file(const std::string& path, const CurveRegistry& registry) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open mesh file '" + path + "'");
    return read_mesh(in, registry);
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
    std::string buf;
    buf += "wgmesh 1\n";
    buf += "vertices " + std::to_string(mesh.vertices.size()) + "\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        buf += std::to_string(i) + " ";
        format(buf, mesh.vertices[i].x);
        buf += " ";
        format(buf, mesh.vertices[i].y);
        buf += "\n";
    }
    buf += "edges " + std::to_string(mesh.edges.size()) + "\n";
    for (const Edge& e : mesh.edges) {
        buf += std::to_string(e.id) + " " + std::to_string(e.v0) + " " + std::to_string(e.v1);
        if (std::holds_alternative<LineSpec>(e.geometry)) {
            buf += " line";
        } else if (const auto* arc = std::get_if<ArcSpec>(&e.geometry)) {
            buf += " arc";
            for (double v : {arc->center.x, arc->center.y, arc->radius, arc->theta0,
                             arc->theta1}) {
                buf += " ";
                format(buf, v);
            }
        } else {
            const auto& graph = std::get<GraphSpec>(e.geometry);
            buf += " graph " + graph.curve_name + " ";
            format(buf, graph.x0);
            buf += " ";
            format(buf, graph.x1);
        }
        buf += "\n";
    }
    buf += "elements " + std::to_string(mesh.elements.size()) + "\n";
    for (const Element& el : mesh.elements) {
        buf += std::to_string(el.id) + " " + std::to_string(el.loop.size());
        for (const SignedEdge& se : el.loop) {
            buf += se.reversed ? " -" : " ";
            buf += std::to_string(se.edge);
        }
        buf += "\n";
    }
    out << buf;
}

void write_mesh_file(const std::string& path, const Mesh& mesh) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_mesh(out, mesh);
    out.flush();
    if (!out) throw Error("write to '" + path + "' failed");
}

} // namespace wg
