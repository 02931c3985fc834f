#include "crcs/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "crcs/errors.hpp"

namespace crcs::io {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

struct Line {
    std::vector<Token> tokens;
    int number = 0;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        Line line{{}, number};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            if (i == raw.size())
                break;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            line.tokens.push_back({raw.substr(i, j - i), number, static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Token& t, const std::string& what)
{
    throw ParseError(t.line, t.column, what);
}

int to_int(const Token& t)
{
    int value = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        fail(t, "expected an integer, found '" + t.text + "'");
    return value;
}

Color to_color(const Token& t)
{
    if (t.text == "*")
        return kStar;
    const int c = to_int(t);
    if (c < 1)
        fail(t, "colors are positive integers or '*'");
    return c;
}

// Drives one file: header check, keyword dispatch, end position for errors
// about missing items.
class Reader {
public:
    Reader(const std::string& text, const std::string& kind) : lines_(tokenize(text))
    {
        if (lines_.empty())
            throw ParseError(1, 1, "empty input, expected header '" + kind + " 1'");
        const auto& h = lines_.front().tokens;
        if (h[0].text != kind)
            fail(h[0], "expected header '" + kind + " 1'");
        if (h.size() != 2 || h[1].text != "1")
            fail(h.size() > 1 ? h[1] : h[0], "unsupported format version, expected '" + kind + " 1'");
        end_line_ = lines_.back().number + 1;
    }

    template <class F>
    void each(F&& f) const
    {
        for (std::size_t i = 1; i < lines_.size(); ++i)
            f(lines_[i].tokens);
    }

    [[noreturn]] void missing(const std::string& what) const
    {
        throw ParseError(end_line_, 1, "missing '" + what + "' line");
    }

private:
    std::vector<Line> lines_;
    int end_line_ = 1;
};

void arity(const std::vector<Token>& t, std::size_t n)
{
    if (t.size() < n)
        fail(t.back(), "'" + t[0].text + "' needs " + std::to_string(n - 1) + " argument(s)");
    if (t.size() > n)
        fail(t[n], "unexpected extra token '" + t[n].text + "'");
}

void once(std::optional<Token>& seen, const std::vector<Token>& t)
{
    if (seen)
        fail(t[0], "duplicate '" + t[0].text + "' line (first on line " + std::to_string(seen->line) + ")");
    seen = t[0];
}

void check_vertex(const Token& t, int v, int n)
{
    if (v < 0 || v >= n)
        fail(t, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
}

// Shared body of the crcs and svr formats.
struct ColoredGraph {
    Graph graph;
    int k = 0;
    Coloring fs;
    Coloring ft;
};

ColoredGraph parse_colored(const std::string& text, const std::string& kind)
{
    Reader r(text, kind);
    std::optional<Token> k_tok, n_tok, fs_tok, ft_tok;
    int k = 0, n = 0;
    std::vector<std::pair<Token, Edge>> edges;
    std::vector<std::pair<Token, Color>> fs, ft;
    r.each([&](const std::vector<Token>& t) {
        const std::string& key = t[0].text;
        if (key == "k") {
            arity(t, 2);
            once(k_tok, t);
            k = to_int(t[1]);
            if (k < 1)
                fail(t[1], "k must be positive");
        } else if (key == "n") {
            arity(t, 2);
            once(n_tok, t);
            n = to_int(t[1]);
            if (n < 0)
                fail(t[1], "n must be non-negative");
        } else if (key == "edge") {
            arity(t, 3);
            edges.push_back({t[1], {to_int(t[1]), to_int(t[2])}});
        } else if (key == "fs" || key == "ft") {
            auto& seen = key == "fs" ? fs_tok : ft_tok;
            auto& dst = key == "fs" ? fs : ft;
            once(seen, t);
            for (std::size_t i = 1; i < t.size(); ++i)
                dst.push_back({t[i], to_color(t[i])});
        } else {
            fail(t[0], "unknown keyword '" + key + "'");
        }
    });
    if (!k_tok)
        r.missing("k");
    if (!n_tok)
        r.missing("n");
    if (!fs_tok)
        r.missing("fs");
    if (!ft_tok)
        r.missing("ft");

    ColoredGraph out{Graph(n), k, {}, {}};
    for (const auto& [tok, e] : edges) {
        check_vertex(tok, e.first, n);
        check_vertex(tok, e.second, n);
        if (e.first == e.second)
            fail(tok, "self-loop on vertex " + std::to_string(e.first));
        if (out.graph.has_edge(e.first, e.second))
            fail(tok, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
        out.graph.add_edge(e.first, e.second);
    }
    auto coloring = [&](const std::vector<std::pair<Token, Color>>& src, const Token& key) {
        if (static_cast<int>(src.size()) != n)
            fail(key, "'" + key.text + "' lists " + std::to_string(src.size()) + " colors for " + std::to_string(n) +
                          " vertices");
        Coloring f;
        f.k = k;
        for (const auto& [tok, c] : src) {
            if (c > k)
                fail(tok, "color " + std::to_string(c) + " exceeds k = " + std::to_string(k));
            f.colors.push_back(c);
        }
        return f;
    };
    out.fs = coloring(fs, *fs_tok);
    out.ft = coloring(ft, *ft_tok);
    return out;
}

void append_colors(std::ostringstream& os, const char* key, const Coloring& f)
{
    os << key;
    for (Color c : f.colors) {
        if (c == kStar)
            os << " *";
        else
            os << ' ' << c;
    }
    os << '\n';
}

void append_edges(std::ostringstream& os, const Graph& g)
{
    for (auto [u, v] : g.edges())
        os << "edge " << u << ' ' << v << '\n';
}

std::vector<Vertex> vertex_list(const std::vector<Token>& t, int n)
{
    std::vector<Vertex> out;
    for (std::size_t i = 1; i < t.size(); ++i) {
        const int v = to_int(t[i]);
        if (n >= 0)
            check_vertex(t[i], v, n);
        out.push_back(v);
    }
    return out;
}

} // namespace

std::string detect_format(const std::string& text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty input");
    const auto& h = lines.front().tokens;
    for (const char* kind : {"crcs", "ts", "svr", "ncl"})
        if (h[0].text == kind) {
            if (h.size() != 2 || h[1].text != "1")
                fail(h.size() > 1 ? h[1] : h[0], "unsupported format version");
            return kind;
        }
    fail(h[0], "unknown header '" + h[0].text + "'");
}

Instance parse_crcs(const std::string& text)
{
    ColoredGraph c = parse_colored(text, "crcs");
    Instance out{std::move(c.graph), c.k, std::move(c.fs), std::move(c.ft)};
    if (!is_proper_extended(out.graph, out.fs))
        throw ValidationError("fs is not a proper coloring");
    if (!is_proper_extended(out.graph, out.ft))
        throw ValidationError("ft is not a proper coloring");
    return out;
}

SVRInstance parse_svr(const std::string& text)
{
    ColoredGraph c = parse_colored(text, "svr");
    if (c.fs.has_star() || c.ft.has_star())
        throw ValidationError("recoloring instances do not use '*'");
    SVRInstance out{std::move(c.graph), c.k, std::move(c.fs), std::move(c.ft)};
    if (!is_proper(out.graph, out.gs))
        throw ValidationError("fs is not a proper coloring");
    if (!is_proper(out.graph, out.gt))
        throw ValidationError("ft is not a proper coloring");
    return out;
}

TokenSlidingInstance parse_ts(const std::string& text)
{
    Reader r(text, "ts");
    std::optional<Token> n_tok, is_tok, it_tok, side_tok;
    int n = 0;
    std::vector<std::pair<Token, Edge>> edges;
    std::vector<std::vector<Token>> sets[2];
    std::vector<Token> side_line;
    r.each([&](const std::vector<Token>& t) {
        const std::string& key = t[0].text;
        if (key == "n") {
            arity(t, 2);
            once(n_tok, t);
            n = to_int(t[1]);
            if (n < 0)
                fail(t[1], "n must be non-negative");
        } else if (key == "edge") {
            arity(t, 3);
            edges.push_back({t[1], {to_int(t[1]), to_int(t[2])}});
        } else if (key == "is" || key == "it") {
            once(key == "is" ? is_tok : it_tok, t);
            sets[key == "it"].push_back(t);
        } else if (key == "side") {
            once(side_tok, t);
            side_line = t;
        } else {
            fail(t[0], "unknown keyword '" + key + "'");
        }
    });
    if (!n_tok)
        r.missing("n");
    if (!is_tok)
        r.missing("is");
    if (!it_tok)
        r.missing("it");

    TokenSlidingInstance ts;
    ts.graph = Graph(n);
    for (const auto& [tok, e] : edges) {
        check_vertex(tok, e.first, n);
        check_vertex(tok, e.second, n);
        if (e.first == e.second)
            fail(tok, "self-loop on vertex " + std::to_string(e.first));
        if (ts.graph.has_edge(e.first, e.second))
            fail(tok, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
        ts.graph.add_edge(e.first, e.second);
    }
    ts.is = vertex_list(sets[0].front(), n);
    ts.it = vertex_list(sets[1].front(), n);
    if (side_tok) {
        if (static_cast<int>(side_line.size()) - 1 != n)
            fail(side_line[0], "'side' needs one entry per vertex");
        for (std::size_t i = 1; i < side_line.size(); ++i) {
            const int s = to_int(side_line[i]);
            if (s != 0 && s != 1)
                fail(side_line[i], "side entries are 0 or 1");
            ts.side.push_back(s);
        }
    }
    try {
        check_token_sliding(ts);
    } catch (const PreconditionError& e) {
        throw ValidationError(e.what());
    }
    for (auto [u, v] : ts.graph.edges())
        if (!ts.side.empty() && ts.side[u] == ts.side[v])
            throw ValidationError("edge " + std::to_string(u) + " " + std::to_string(v) +
                                  " joins two vertices on the same side");
    return ts;
}

NclInstance parse_ncl(const std::string& text)
{
    Reader r(text, "ncl");
    std::map<int, std::pair<Token, NclType>> vertices;
    std::map<int, std::pair<Token, NclEdge>> edges;
    std::vector<std::pair<Token, std::pair<int, int>>> dirs[2];
    r.each([&](const std::vector<Token>& t) {
        const std::string& key = t[0].text;
        if (key == "vertex") {
            arity(t, 3);
            const int id = to_int(t[1]);
            NclType type;
            if (t[2].text == "and")
                type = NclType::And;
            else if (t[2].text == "or")
                type = NclType::Or;
            else
                fail(t[2], "vertex type must be 'and' or 'or'");
            if (!vertices.emplace(id, std::pair{t[1], type}).second)
                fail(t[1], "duplicate vertex id " + std::to_string(id));
        } else if (key == "edge") {
            arity(t, 5);
            NclEdge e{to_int(t[1]), to_int(t[2]), to_int(t[3]), to_int(t[4])};
            if (e.weight != 1 && e.weight != 2)
                fail(t[4], "edge weight must be 1 or 2");
            if (!edges.emplace(e.id, std::pair{t[1], e}).second)
                fail(t[1], "duplicate edge id " + std::to_string(e.id));
        } else if (key == "cs" || key == "ct") {
            arity(t, 3);
            dirs[key == "ct"].push_back({t[1], {to_int(t[1]), to_int(t[2])}});
        } else {
            fail(t[0], "unknown keyword '" + key + "'");
        }
    });

    NclInstance out;
    int expect = 0;
    for (const auto& [id, entry] : vertices) {
        if (id != expect++)
            fail(entry.first, "vertex ids must be 0.." + std::to_string(vertices.size() - 1));
        out.machine.vertices.push_back(entry.second);
    }
    const int nv = static_cast<int>(vertices.size());
    for (const auto& [id, entry] : edges) {
        const NclEdge& e = entry.second;
        if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv)
            fail(entry.first, "edge " + std::to_string(id) + " has an unknown endpoint");
        if (e.u == e.v)
            fail(entry.first, "edge " + std::to_string(id) + " is a self-loop");
        out.machine.edges.push_back(e);
    }
    for (int which = 0; which < 2; ++which) {
        NclOrientation& o = which ? out.ct : out.cs;
        o.toward.assign(out.machine.edges.size(), -1);
        for (const auto& [tok, d] : dirs[which]) {
            const int idx = out.machine.edge_index(d.first);
            if (idx < 0)
                fail(tok, "unknown edge id " + std::to_string(d.first));
            const auto& e = out.machine.edges[idx];
            if (d.second != e.u && d.second != e.v)
                fail(tok, "edge " + std::to_string(d.first) + " cannot point to vertex " + std::to_string(d.second));
            if (o.toward[idx] != -1)
                fail(tok, "edge " + std::to_string(d.first) + " oriented twice");
            o.toward[idx] = d.second;
        }
        for (std::size_t i = 0; i < o.toward.size(); ++i)
            if (o.toward[i] == -1)
                r.missing(std::string(which ? "ct " : "cs ") + std::to_string(out.machine.edges[i].id));
    }
    try {
        check_ncl_machine(out.machine);
    } catch (const PreconditionError& e) {
        throw ValidationError(e.what());
    }
    if (!is_valid_orientation(out.machine, out.cs))
        throw ValidationError("cs violates an in-weight constraint");
    if (!is_valid_orientation(out.machine, out.ct))
        throw ValidationError("ct violates an in-weight constraint");
    return out;
}

std::string format_crcs(const Instance& instance)
{
    std::ostringstream os;
    os << "crcs 1\nk " << instance.k << "\nn " << instance.graph.n() << '\n';
    append_edges(os, instance.graph);
    append_colors(os, "fs", instance.fs);
    append_colors(os, "ft", instance.ft);
    return os.str();
}

std::string format_svr(const SVRInstance& svr)
{
    std::ostringstream os;
    os << "svr 1\nk " << svr.k << "\nn " << svr.graph.n() << '\n';
    append_edges(os, svr.graph);
    append_colors(os, "fs", svr.gs);
    append_colors(os, "ft", svr.gt);
    return os.str();
}

std::string format_ts(const TokenSlidingInstance& ts)
{
    std::ostringstream os;
    os << "ts 1\nn " << ts.graph.n() << '\n';
    append_edges(os, ts.graph);
    for (auto [key, set] : {std::pair{"is", &ts.is}, std::pair{"it", &ts.it}}) {
        os << key;
        for (Vertex v : *set)
            os << ' ' << v;
        os << '\n';
    }
    if (!ts.side.empty()) {
        os << "side";
        for (int s : ts.side)
            os << ' ' << s;
        os << '\n';
    }
    return os.str();
}

std::string format_ncl(const NclInstance& ncl)
{
    std::ostringstream os;
    os << "ncl 1\n";
    for (std::size_t v = 0; v < ncl.machine.vertices.size(); ++v)
        os << "vertex " << v << ' ' << to_string(ncl.machine.vertices[v]) << '\n';
    for (const auto& e : ncl.machine.edges)
        os << "edge " << e.id << ' ' << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    for (auto [key, o] : {std::pair{"cs", &ncl.cs}, std::pair{"ct", &ncl.ct}})
        for (std::size_t i = 0; i < ncl.machine.edges.size(); ++i)
            os << key << ' ' << ncl.machine.edges[i].id << ' ' << o->toward[i] << '\n';
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error("cannot write '" + path + "'");
}

} // namespace crcs::io
