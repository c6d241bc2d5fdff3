#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "clutterkit/clutter.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/generators.hpp"

namespace clutterkit {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// .clt text format: first non-comment line lists the ground labels; each further
// non-empty, non-# line is one hyperedge.
inline std::string emit_clt(const Clutter& c) {
    std::ostringstream out;
    for (std::size_t i = 0; i < c.ground().size(); ++i) {
        if (i) out << ' ';
        out << c.ground()[i];
    }
    out << '\n';
    for (Mask e : c.edges()) {
        bool first = true;
        for_each_element(e, [&](int id) {
            if (!first) out << ' ';
            out << c.ground()[static_cast<std::size_t>(id)];
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

inline Json clutter_to_json(const Clutter& c) {
    Json j;
    j["ground"] = c.ground();
    Json edges = Json::array();
    for (Mask e : c.edges()) edges.push_back(c.labels_of(e));
    j["edges"] = std::move(edges);
    return j;
}

inline Clutter clutter_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("edges"))
        throw ParseError("clutter JSON needs \"ground\" and \"edges\"");
    std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> families =
        j.at("edges").get<std::vector<std::vector<std::string>>>();
    return make_clutter(std::move(ground), families);
}

inline Clutter parse_clutter_text(const std::string& text) {
    // JSON mirror accepted when the payload starts with '{'
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') {
            Json j;
            try {
                j = Json::parse(text);
            } catch (const std::exception& e) {
                throw ParseError(std::string("invalid JSON clutter: ") + e.what());
            }
            return clutter_from_json(j);
        }
        break;
    }
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> ground;
    std::vector<std::vector<std::string>> families;
    bool have_ground = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (!have_ground) {
            ground = std::move(tokens);
            have_ground = true;
        } else {
            families.push_back(std::move(tokens));
        }
    }
    if (!have_ground) throw ParseError("clutter file has no ground-set line");
    return make_clutter(std::move(ground), families);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Clutter load_clutter(const std::string& path) { return parse_clutter_text(read_file(path)); }

// Graph file: one edge per line as "u v"; # starts a comment line.
inline Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    auto intern = [&](const std::string& v) {
        for (const auto& known : vertices)
            if (known == v) return;
        vertices.push_back(v);
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) throw ParseError("graph line needs exactly two vertex labels: " + line);
        intern(tokens[0]);
        intern(tokens[1]);
        edges.emplace_back(tokens[0], tokens[1]);
    }
    if (edges.empty()) throw ParseError("graph file has no edges");
    return make_graph(std::move(vertices), edges);
}

inline Graph load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

}  // namespace clutterkit
