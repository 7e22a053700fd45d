#include "turan/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace turan {

Hypergraph read_hypergraph_text(std::istream& in) {
    int n = -1, r = -1;
    bool have_header = false;
    std::vector<std::vector<int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError("line " + std::to_string(lineno) + ": duplicate p line");
            std::string fmt;
            if (!(ls >> fmt >> n >> r) || fmt != "hg") {
                throw ParseError("line " + std::to_string(lineno) + ": expected 'p hg <n> <r>'");
            }
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            std::vector<int> vs;
            int v;
            while (ls >> v) vs.push_back(v);
            if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": bad vertex token");
            edges.push_back(std::move(vs));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p hg <n> <r>' header");
    try {
        return Hypergraph::from_vertex_lists(n, r, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& h) {
    out << "p hg " << h.n() << ' ' << h.r() << '\n';
    for (Mask e : h.edges()) {
        out << 'e';
        for (int v : mask_to_vertices(e)) out << ' ' << v;
        out << '\n';
    }
}

std::string to_text_string(const Hypergraph& h) {
    std::ostringstream os;
    write_hypergraph_text(os, h);
    return os.str();
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("edges")) {
        throw ParseError("hypergraph JSON must be an object with keys n, r, edges");
    }
    try {
        int n = j.at("n").get<int>();
        int r = j.at("r").get<int>();
        auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
        return Hypergraph::from_vertex_lists(n, r, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("hypergraph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.n();
    j["r"] = h.r();
    auto edges = nlohmann::json::array();
    for (Mask e : h.edges()) edges.push_back(mask_to_vertices(e));
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph read_hypergraph_any(std::istream& in) {
    // peek past whitespace
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        return hypergraph_from_json(j);
    }
    return read_hypergraph_text(in);
}

}
