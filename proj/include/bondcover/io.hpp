#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bondcover/driver.hpp"
#include "bondcover/graph.hpp"

namespace bondc {

// Instance text format, a DIMACS flavor with weights and multiplicities:
//   c <comment>
//   p bond <n> <m>
//   v <id> <weight>        weight as integer, decimal or p/q fraction
//   e <u> <v> [mult]       mult defaults to 1; duplicate lines sum up
// Vertex identifiers are 1..n; every vertex carries exactly one v line and
// m counts the e lines.
inline WeightedMultigraph parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1, seen_v = 0, seen_e = 0;
    std::vector<bool> declared;
    WeightedMultigraph g;

    const auto column_of = [&](const std::string& l, std::size_t token_index) {
        std::istringstream probe(l);
        std::string tok;
        std::size_t idx = 0, pos = 0;
        while (probe >> tok) {
            pos = l.find(tok, pos);
            if (idx == token_index) return static_cast<int>(pos) + 1;
            pos += tok.size();
            ++idx;
        }
        return static_cast<int>(l.size()) + 1;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno, 1);
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "bond" || n < 0 || m < 0)
                throw ParseError("expected 'p bond <n> <m>'", lineno, 1);
            declared.assign(static_cast<std::size_t>(n) + 1, false);
            continue;
        }
        if (n < 0) throw ParseError("data before the problem line", lineno, 1);
        if (tag == "v") {
            long long id;
            std::string wtext;
            if (!(ls >> id >> wtext)) throw ParseError("expected 'v <id> <weight>'", lineno, 1);
            if (id < 1 || id > n) throw ParseError("vertex id out of range", lineno, column_of(line, 1));
            if (declared[static_cast<std::size_t>(id)])
                throw ParseError("duplicate vertex " + std::to_string(id), lineno, column_of(line, 1));
            declared[static_cast<std::size_t>(id)] = true;
            g.add_vertex(static_cast<Vertex>(id), parse_weight(wtext, lineno, column_of(line, 2)));
            ++seen_v;
            continue;
        }
        if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError("expected 'e <u> <v> [mult]'", lineno, 1);
            long long mult = 1;
            if (ls >> mult && mult < 1) throw ParseError("multiplicity must be positive", lineno, column_of(line, 3));
            if (u < 1 || u > n) throw ParseError("endpoint out of range", lineno, column_of(line, 1));
            if (v < 1 || v > n) throw ParseError("endpoint out of range", lineno, column_of(line, 2));
            if (u == v) throw ParseError("self-loop", lineno, column_of(line, 1));
            if (!declared[static_cast<std::size_t>(u)] || !declared[static_cast<std::size_t>(v)])
                throw ParseError("edge references an undeclared vertex", lineno, column_of(line, 1));
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(mult));
            ++seen_e;
            continue;
        }
        throw ParseError("unknown line tag '" + tag + "'", lineno, 1);
    }
    if (n < 0) throw ParseError("missing problem line", lineno + 1, 1);
    if (seen_v != n) throw ParseError("expected " + std::to_string(n) + " vertex lines, found " + std::to_string(seen_v),
                                      lineno + 1, 1);
    if (seen_e != m) throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen_e),
                                      lineno + 1, 1);
    return g;
}

// Canonical form: ascending v lines, ascending (u, v) edge lines with summed
// multiplicities; parse(serialize(g)) == g.
inline std::string serialize_instance(const WeightedMultigraph& g) {
    const auto verts = g.vertices();
    const long long n = static_cast<long long>(verts.size());
    for (long long i = 0; i < n; ++i)
        if (verts[static_cast<std::size_t>(i)] != i + 1)
            throw ValidationError("serialization requires vertex identifiers 1..n");
    std::ostringstream out;
    out << "p bond " << n << " " << g.distinct_edge_count() << "\n";
    for (Vertex v : verts) out << "v " << v << " " << format_weight(g.weight(v)) << "\n";
    for (const auto& [u, v, m] : g.edges()) out << "e " << u << " " << v << " " << m << "\n";
    return out.str();
}

inline nlohmann::json weight_json(const Weight& w) {
    return {{"fraction", format_weight(w)}, {"decimal", weight_to_double(w)}};
}

inline const char* event_kind_name(TraceEvent::Kind k) {
    switch (k) {
        case TraceEvent::Kind::ZeroLayer: return "zero_layer";
        case TraceEvent::Kind::ModelLayer: return "model_layer";
        case TraceEvent::Kind::ClusterLayer: return "cluster_layer";
        case TraceEvent::Kind::Replacement: return "replacement";
    }
    return "?";
}

// JSON report for a solve run: solution, exact weight, realized alpha, event
// summary, and the certified optimum with the ratio when available.
inline nlohmann::json solve_report(const WeightedMultigraph& g, const SolveResult& res,
                                   const std::optional<Weight>& opt = std::nullopt) {
    nlohmann::json events = nlohmann::json::array();
    for (const TraceEvent& ev : res.trace.events) {
        nlohmann::json e;
        e["type"] = event_kind_name(ev.kind);
        e["vertices"] = ev.vertices_before.size();
        if (ev.is_layer()) {
            e["alpha"] = weight_json(ev.layer.alpha);
            e["deleted"] = std::vector<Vertex>(ev.deleted.begin(), ev.deleted.end());
        } else {
            e["anchors"] = {ev.replacement.u, ev.replacement.v};
            e["removed"] = std::vector<Vertex>(ev.replacement.removed.begin(), ev.replacement.removed.end());
            e["gadget"] = ev.replacement.gadget;
        }
        events.push_back(std::move(e));
    }
    nlohmann::json report;
    report["solution"] = std::vector<Vertex>(res.cover.begin(), res.cover.end());
    report["weight"] = weight_json(res.weight);
    report["realized_alpha"] = weight_json(res.realized_alpha);
    report["iterations"] = res.trace.events.size();
    report["events"] = std::move(events);
    if (opt) {
        report["opt"] = weight_json(*opt);
        if (*opt > 0)
            report["ratio"] = weight_json(res.weight / *opt);
        else
            report["ratio"] = weight_json(res.weight == 0 ? Weight(1) : Weight(0));
    }
    return report;
}

}  // namespace bondc
