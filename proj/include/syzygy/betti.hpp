#pragma once
/**
 * @file betti.hpp
 * @brief Graded Betti tables: extraction from resolutions, the
 *        quotient/ideal index shift, vanishing-strip indices, and the grid
 *        and line output formats.
 *
 * Tables are stored Macaulay2-style: entry (i, j) holds
 * beta_{i, i+j} = dim Tor_i(M, k)_{i+j}, so row j collects the degree-j+1
 * syzygy steps of a (j+1)-linear strand.
 */

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/resolution.hpp"

namespace syzygy {

struct BettiTable {
    /// (homological index i, internal row j) -> beta_{i, i+j}; zeros absent.
    std::map<std::pair<int, int>, long long> entries;
    /// "quotient" for R/I, "ideal" for I; subring tables say which ring.
    std::string module_tag = "quotient";

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    void set(int i, int j, long long v) {
        if (v < 0) throw invariant_error("BettiTable: negative entry");
        if (v == 0) entries.erase({i, j});
        else entries[{i, j}] = v;
    }

    void add(int i, int j, long long v) { set(i, j, at(i, j) + v); }

    /// Projective dimension: largest homological index with a nonzero entry.
    int pd() const {
        int p = 0;
        for (const auto& [ij, v] : entries)
            if (v != 0 && ij.first > p) p = ij.first;
        return p;
    }

    /// Castelnuovo-Mumford regularity: largest nonzero row.
    int reg() const {
        int r = 0;
        for (const auto& [ij, v] : entries)
            if (v != 0 && ij.second > r) r = ij.second;
        return r;
    }

    int max_row() const { return reg(); }

    long long total_rank() const {
        long long s = 0;
        for (const auto& [ij, v] : entries) { (void)ij; s += v; }
        return s;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    bool operator!=(const BettiTable& o) const { return entries != o.entries; }
};

template <class K>
BettiTable betti_table(const FreeResolution<K>& res, std::string tag = "quotient") {
    if (!res.minimal) throw invariant_error("betti_table: resolution not minimal");
    BettiTable t;
    t.module_tag = std::move(tag);
    t.set(0, 0, 1);
    for (int k = 0; k < res.length(); ++k) {
        int i = k + 1;
        for (int D : res.d[std::size_t(k)].src_deg) t.add(i, D - i, 1);
    }
    return t;
}

/// beta_{i,j}(I) = beta_{i+1,j-1}(R/I) in row coordinates: the quotient
/// table's column i+1 row j-1 is the ideal table's column i row j.
inline BettiTable quotient_to_ideal(const BettiTable& q) {
    if (q.module_tag == "ideal") throw invariant_error("quotient_to_ideal: already an ideal table");
    BettiTable t;
    t.module_tag = "ideal";
    for (const auto& [ij, v] : q.entries) {
        if (ij.first == 0) continue; // the rank-one F_0 = R of the quotient
        t.set(ij.first - 1, ij.second + 1, v);
    }
    return t;
}

inline BettiTable ideal_to_quotient(const BettiTable& id) {
    if (id.module_tag != "ideal") throw invariant_error("ideal_to_quotient: not an ideal table");
    BettiTable t;
    t.module_tag = "quotient";
    t.set(0, 0, 1);
    for (const auto& [ij, v] : id.entries) t.set(ij.first + 1, ij.second - 1, v);
    return t;
}

/**
 * Largest p such that beta_{i,j} = 0 for all 1 <= i <= p and every row
 * j >= d (the quotient-table reading of property N_{d,p}); p = 0 always
 * holds.  The projective dimension caps the answer.
 */
inline int ndp_index(const BettiTable& q, int d) {
    if (q.module_tag == "ideal") throw invariant_error("ndp_index: expects a quotient table");
    if (d < 2) throw invariant_error("ndp_index: d must be at least 2");
    int pd = q.pd();
    int p = 0;
    for (int i = 1; i <= pd; ++i) {
        bool clean = true;
        for (const auto& [ij, v] : q.entries)
            if (v != 0 && ij.first == i && ij.second >= d) clean = false;
        if (!clean) break;
        p = i;
    }
    return p;
}

/// Index of the quadratic strand: ndp with d = 2.
inline int green_lazarsfeld_index(const BettiTable& q) { return ndp_index(q, 2); }

/// Whether beta_{i,j} = 0 for all 1 <= i <= p, j >= d.
inline bool has_ndp(const BettiTable& q, int d, int p) { return ndp_index(q, d) >= p; }

/**
 * Numerator of the Hilbert series from a quotient table:
 * sum (-1)^i beta_{i,i+j} t^{i+j}.  Cross-checks resolutions against the
 * combinatorial Hilbert computation.
 */
inline ZPoly betti_to_hilbert_numerator(const BettiTable& q) {
    if (q.module_tag == "ideal") throw invariant_error("betti_to_hilbert_numerator: expects a quotient table");
    ZPoly num;
    for (const auto& [ij, v] : q.entries) {
        int deg = ij.first + ij.second;
        if (int(num.size()) <= deg) num.resize(std::size_t(deg) + 1, 0);
        num[std::size_t(deg)] += (ij.first % 2 == 0 ? v : -v);
    }
    zpoly_trim(num);
    return num;
}

/// Macaulay2-style grid: rows are internal degrees, columns homological
/// indices, dots for zeros, a total row on top.
inline std::string betti_grid(const BettiTable& t) {
    int pd = t.pd();
    int rmax = t.reg();
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;

    std::vector<long long> totals(std::size_t(pd) + 1, 0);
    for (const auto& [ij, v] : t.entries) totals[std::size_t(ij.first)] += v;

    auto cell = [&](long long v) { return v == 0 ? std::string(".") : std::to_string(v); };

    labels.push_back("total:");
    {
        std::vector<std::string> row;
        for (int i = 0; i <= pd; ++i) row.push_back(std::to_string(totals[std::size_t(i)]));
        cells.push_back(std::move(row));
    }
    for (int j = 0; j <= rmax; ++j) {
        labels.push_back(std::to_string(j) + ":");
        std::vector<std::string> row;
        for (int i = 0; i <= pd; ++i) row.push_back(cell(t.at(i, j)));
        cells.push_back(std::move(row));
    }

    std::vector<std::size_t> width(std::size_t(pd) + 1, 1);
    for (int i = 0; i <= pd; ++i) {
        width[std::size_t(i)] = std::to_string(i).size();
        for (const auto& row : cells)
            width[std::size_t(i)] = std::max(width[std::size_t(i)], row[std::size_t(i)].size());
    }
    std::size_t lw = 0;
    for (const auto& l : labels) lw = std::max(lw, l.size());

    std::ostringstream out;
    out << std::string(lw, ' ');
    for (int i = 0; i <= pd; ++i) {
        std::string h = std::to_string(i);
        out << ' ' << std::string(width[std::size_t(i)] - h.size(), ' ') << h;
    }
    out << '\n';
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << std::string(lw - labels[r].size(), ' ') << labels[r];
        for (int i = 0; i <= pd; ++i) {
            const std::string& s = cells[r][std::size_t(i)];
            out << ' ' << std::string(width[std::size_t(i)] - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

/// One sorted "beta i j v" line per nonzero entry; the diffable format.
inline std::string betti_lines(const BettiTable& t) {
    std::ostringstream out;
    for (const auto& [ij, v] : t.entries)
        out << "beta " << ij.first << ' ' << ij.second << ' ' << v << '\n';
    return out.str();
}

/// Parse the line format back into a table (for golden comparisons).
inline BettiTable parse_betti_lines(const std::string& text, const std::string& tag = "quotient") {
    BettiTable t;
    t.module_tag = tag;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        long long i, j, v;
        if (word != "beta" || !(ls >> i >> j >> v))
            throw parse_error("expected 'beta <i> <j> <value>'", lineno);
        if (ls >> word) throw parse_error("trailing tokens after beta entry", lineno);
        t.add(int(i), int(j), v);
    }
    return t;
}

} // namespace syzygy
