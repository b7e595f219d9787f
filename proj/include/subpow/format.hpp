#ifndef SUBPOW_FORMAT_HPP
#define SUBPOW_FORMAT_HPP

// Text encodings of subset power graphs (DOT, JSON) and cycle spectra
// (JSON, CSV, table). JSON and CSV layouts are stable; the table is not.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycle_structure.hpp"
#include "error.hpp"
#include "subset_power.hpp"

namespace subpow {

using ordered_json = nlohmann::ordered_json;

/// The serialisable view of a SubsetPowerGraph. The base graph's edges are
/// not part of the exported form, only its vertex count.
struct SubsetPowerRecord {
    std::uint64_t base_vertex_count = 0;
    std::uint64_t d = 0;
    std::vector<SubsetVertex> vertices;
    std::vector<Edge> edges;

    friend bool operator==(const SubsetPowerRecord&, const SubsetPowerRecord&) = default;
};

inline SubsetPowerRecord record_of(const SubsetPowerGraph& power) {
    return {power.base.vertex_count(), power.d, power.vertices, power.graph.edges()};
}

inline void write_dot(std::ostream& out, const SubsetPowerRecord& record) {
    out << "digraph subset_power {\n";
    for (std::size_t i = 0; i < record.vertices.size(); ++i) {
        out << "  " << i << " [label=\"" << record.vertices[i].label() << "\"];\n";
    }
    for (const auto& e : record.edges) out << "  " << e.from << " -> " << e.to << ";\n";
    out << "}\n";
}

inline ordered_json to_json(const SubsetPowerRecord& record) {
    ordered_json doc;
    doc["base_l"] = record.base_vertex_count;
    doc["d"] = record.d;
    doc["vertices"] = ordered_json::array();
    for (const auto& v : record.vertices) doc["vertices"].push_back(v.members);
    doc["edges"] = ordered_json::array();
    for (const auto& e : record.edges) doc["edges"].push_back({e.from, e.to});
    return doc;
}

inline void write_json(std::ostream& out, const SubsetPowerRecord& record) { out << to_json(record).dump() << '\n'; }

/// Inverse of to_json. Throws parse_error on malformed or inconsistent input.
inline SubsetPowerRecord subset_power_from_json(const std::string& text) {
    SubsetPowerRecord record;
    try {
        const auto doc = ordered_json::parse(text);
        record.base_vertex_count = doc.at("base_l").get<std::uint64_t>();
        record.d = doc.at("d").get<std::uint64_t>();
        for (const auto& v : doc.at("vertices")) {
            auto members = v.get<std::vector<Vertex>>();
            if (members.size() != record.d) throw parse_error("vertex size differs from d", 0);
            if (!std::is_sorted(members.begin(), members.end()) ||
                std::adjacent_find(members.begin(), members.end()) != members.end()) {
                throw parse_error("vertex members are not strictly increasing", 0);
            }
            if (!members.empty() && members.back() >= record.base_vertex_count) {
                throw parse_error("vertex member out of range", 0);
            }
            SubsetVertex s;
            s.members = std::move(members);
            record.vertices.push_back(std::move(s));
        }
        for (const auto& e : doc.at("edges")) {
            const auto pair = e.get<std::vector<Vertex>>();
            if (pair.size() != 2) throw parse_error("edge is not a pair", 0);
            if (pair[0] >= record.vertices.size() || pair[1] >= record.vertices.size()) {
                throw parse_error("edge index out of range", 0);
            }
            record.edges.push_back({pair[0], pair[1]});
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid subset power JSON: ") + e.what(), 0);
    }
    return record;
}

inline ordered_json to_json(const CycleSpectrum& s) {
    ordered_json doc;
    doc["l"] = s.l;
    doc["d"] = s.d;
    doc["cycles"] = ordered_json::array();
    for (const auto& [k, count] : s.counts) {
        ordered_json entry;
        entry["k"] = k;
        entry["count"] = count.str();
        doc["cycles"].push_back(std::move(entry));
    }
    return doc;
}

inline void write_json(std::ostream& out, const CycleSpectrum& s) { out << to_json(s).dump() << '\n'; }

inline CycleSpectrum spectrum_from_json(const std::string& text) {
    CycleSpectrum s;
    try {
        const auto doc = ordered_json::parse(text);
        s.l = doc.at("l").get<std::uint64_t>();
        s.d = doc.at("d").get<std::uint64_t>();
        for (const auto& entry : doc.at("cycles")) {
            const auto k = entry.at("k").get<std::uint64_t>();
            const auto digits = entry.at("count").get<std::string>();
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw parse_error("count is not a decimal string", 0);
            }
            if (!s.counts.emplace(k, Natural(digits)).second) throw parse_error("repeated cycle length", 0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid spectrum JSON: ") + e.what(), 0);
    }
    return s;
}

inline void write_csv(std::ostream& out, const CycleSpectrum& s) {
    out << "k,count\n";
    for (const auto& [k, count] : s.counts) out << k << ',' << count << '\n';
}

inline void write_table(std::ostream& out, const CycleSpectrum& s) {
    std::vector<std::pair<std::string, std::string>> rows{{"k", "count"}};
    for (const auto& [k, count] : s.counts) rows.emplace_back(std::to_string(k), count.str());
    std::size_t kw = 0;
    std::size_t cw = 0;
    for (const auto& [k, c] : rows) {
        kw = std::max(kw, k.size());
        cw = std::max(cw, c.size());
    }
    for (const auto& [k, c] : rows) {
        out << std::string(kw - k.size(), ' ') << k << "  " << std::string(cw - c.size(), ' ') << c << '\n';
    }
}

} // namespace subpow

#endif // SUBPOW_FORMAT_HPP
