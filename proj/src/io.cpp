#include "ultrafree/io.hpp"

#include "ultrafree/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ultrafree {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::size_t parse_index(const std::string& token, std::size_t line, std::size_t col)
{
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a non-negative integer, got '" + token + "'", line, col);
    try {
        return static_cast<std::size_t>(std::stoull(token));
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: '" + token + "'", line, col);
    }
}

Graph parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<Graph> g;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<std::pair<std::string, std::size_t>> tokens;
        for (std::size_t i = 0; i < raw.size();) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            tokens.emplace_back(raw.substr(start, i - start), start + 1);
        }
        if (tokens.empty() || tokens[0].first == "c")
            continue;
        const std::string& kind = tokens[0].first;
        if (kind == "p") {
            if (g)
                throw ParseError("duplicate problem line", line_no, 1);
            if (tokens.size() != 4 || (tokens[1].first != "edge" && tokens[1].first != "col"))
                throw ParseError("expected 'p edge <n> <m>'", line_no, 1);
            g = Graph(parse_index(tokens[2].first, line_no, tokens[2].second));
            parse_index(tokens[3].first, line_no, tokens[3].second);
        } else if (kind == "e") {
            if (!g)
                throw ParseError("edge line before the problem line", line_no, 1);
            if (tokens.size() != 3)
                throw ParseError("expected 'e <u> <v>'", line_no, 1);
            std::size_t u = parse_index(tokens[1].first, line_no, tokens[1].second);
            std::size_t v = parse_index(tokens[2].first, line_no, tokens[2].second);
            if (u == 0 || u > g->order())
                throw ParseError("vertex " + tokens[1].first + " out of range", line_no, tokens[1].second);
            if (v == 0 || v > g->order())
                throw ParseError("vertex " + tokens[2].first + " out of range", line_no, tokens[2].second);
            if (u == v)
                throw SelfLoopRejected("self-loop at vertex " + tokens[1].first, line_no, tokens[1].second);
            g->add_edge(u - 1, v - 1);
        } else {
            throw ParseError("unknown line type '" + kind + "'", line_no, tokens[0].second);
        }
    }
    if (!g) {
        // A lone edge line is still worth a precise diagnosis.
        throw ParseError("missing 'p edge <n> <m>' line", line_no == 0 ? 1 : line_no, 1);
    }
    return *g;
}

std::size_t json_index(const nlohmann::json& j, const char* what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ParseError(std::string(what) + " must be a non-negative integer", 0, 0);
    return j.get<std::size_t>();
}

const nlohmann::json& field(const nlohmann::json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'", 0, 0);
    return j.at(key);
}

}  // namespace

nlohmann::json parse_json(std::string_view text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
}

Graph parse_graph(std::string_view text)
{
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{')
        return graph_from_json(parse_json(text));
    return parse_dimacs(text);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph read_graph_file(const std::string& path)
{
    return parse_graph(read_file(path));
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    std::size_t n = json_index(field(j, "n"), "n");
    const auto& edges = field(j, "edges");
    if (!edges.is_array())
        throw ParseError("'edges' must be an array", 0, 0);
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (!e.is_array() || e.size() != 2)
            throw ParseError("edge " + std::to_string(i) + " must be a pair", 0, 0);
        std::size_t u = json_index(e[0], "vertex");
        std::size_t v = json_index(e[1], "vertex");
        if (u >= n || v >= n)
            throw ParseError("edge " + std::to_string(i) + " has a vertex out of range", 0, 0);
        if (u == v)
            throw SelfLoopRejected("self-loop at vertex " + std::to_string(u), 0, 0);
        g.add_edge(u, v);
    }
    return g;
}

std::string emit_graph_json(const Graph& g)
{
    return graph_to_json(g).dump() + "\n";
}

std::string emit_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

nlohmann::json setsystem_to_json(const SetSystem& f)
{
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : f.sets())
        sets.push_back(s.members());
    nlohmann::json out = {{"ground", f.ground_size()}, {"sets", sets}};
    out["labels"] = f.labels();
    return out;
}

SetSystem setsystem_from_json(const nlohmann::json& j)
{
    std::size_t ground = json_index(field(j, "ground"), "ground");
    const auto& sets = field(j, "sets");
    if (!sets.is_array())
        throw ParseError("'sets' must be an array", 0, 0);
    std::vector<std::vector<std::size_t>> lists;
    for (const auto& s : sets) {
        if (!s.is_array())
            throw ParseError("each set must be an array", 0, 0);
        std::vector<std::size_t> members;
        for (const auto& e : s) {
            std::size_t x = json_index(e, "element");
            if (x >= ground)
                throw ParseError("element " + std::to_string(x) + " outside the ground set", 0, 0);
            members.push_back(x);
        }
        lists.push_back(std::move(members));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) {
            if (!l.is_string())
                throw ParseError("labels must be strings", 0, 0);
            labels.push_back(l.get<std::string>());
        }
        if (!labels.empty() && labels.size() != lists.size())
            throw ParseError("label count does not match set count", 0, 0);
    }
    return SetSystem::from_lists(ground, lists, std::move(labels));
}

nlohmann::json space_to_json(const ConvexitySpace& s)
{
    switch (s.kind()) {
    case SpaceKind::from_graph:
        return {{"kind", "from_graph"}, {"graph", graph_to_json(s.graph())}};
    case SpaceKind::subcubes:
        return {{"kind", "subcubes"}, {"n", s.cube_dimension()}};
    case SpaceKind::explicit_space:
        break;
    }
    return {{"kind", "explicit"}, {"generators", setsystem_to_json(s.generators())}};
}

ConvexitySpace space_from_json(const nlohmann::json& j, const SearchBudget& budget)
{
    const auto& kind = field(j, "kind");
    if (!kind.is_string())
        throw ParseError("'kind' must be a string", 0, 0);
    const auto k = kind.get<std::string>();
    if (k == "from_graph")
        return ConvexitySpace::from_graph(graph_from_json(field(j, "graph")), budget);
    if (k == "subcubes")
        return ConvexitySpace::subcubes(json_index(field(j, "n"), "n"));
    if (k == "explicit")
        return ConvexitySpace::explicit_space(setsystem_from_json(field(j, "generators")));
    throw ParseError("unknown space kind '" + k + "'", 0, 0);
}

nlohmann::json decomposition_to_json(const BlowupDecomposition& d)
{
    return {{"parts", d.parts}, {"quotient", graph_to_json(d.quotient)}, {"origin", d.origin}};
}

BlowupDecomposition decomposition_from_json(const nlohmann::json& j)
{
    BlowupDecomposition d;
    for (const auto& p : field(j, "parts")) {
        VertexSet part;
        for (const auto& v : p)
            part.push_back(json_index(v, "vertex"));
        d.parts.push_back(std::move(part));
    }
    d.quotient = graph_from_json(field(j, "quotient"));
    for (const auto& v : field(j, "origin"))
        d.origin.push_back(json_index(v, "origin"));
    return d;
}

Measure measure_from_json(const nlohmann::json& j)
{
    Measure mu;
    for (const auto& w : field(j, "weights")) {
        if (!w.is_string())
            throw ParseError("weights must be \"P/Q\" strings", 0, 0);
        mu.weights.push_back(parse_rational(w.get<std::string>()));
    }
    return mu;
}

}  // namespace ultrafree
