#pragma once

#include <toruskit/manifest.hpp>
#include <toruskit/pipeline.hpp>

#include <string>
#include <vector>

namespace toruskit {

// Deterministic renderings of the family table: term maps are ordered and
// the formats below add nothing run-dependent, so reports are byte-stable.

inline std::vector<std::vector<std::string>> family_cells(const FamilyTable& table) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "e", "sign", "b1", "H1", "SW", "distinct?"});
    for (const auto& r : table.rows)
        cells.push_back({std::to_string(r.n), std::to_string(r.manifold.euler),
                         std::to_string(r.manifold.signature), std::to_string(r.manifold.b1),
                         h1_string(r.manifold), r.sw.str(), r.distinct ? "yes" : "no"});
    return cells;
}

inline std::string render_tsv(const FamilyTable& table) {
    std::string out;
    for (const auto& row : family_cells(table)) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

inline std::string render_aligned(const FamilyTable& table) {
    const auto cells = family_cells(table);
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out += std::string(width[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

inline json render_json(const FamilyTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows)
        rows.push_back(json{{"n", r.n},
                            {"e", r.manifold.euler},
                            {"sign", r.manifold.signature},
                            {"b1", r.manifold.b1},
                            {"H1", h1_string(r.manifold)},
                            {"SW", r.sw.str()},
                            {"distinct", r.distinct}});
    return json{{"rows", rows}, {"pairwise_distinct", table.pairwise}};
}

}  // namespace toruskit
