#pragma once
/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over the coefficient field: rank,
 *        kernel bases, and an incremental row-space accumulator.
 */

#include <cstdint>
#include <vector>

#include "syzygy/errors.hpp"

namespace syzygy {

template <class K>
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<typename K::Elem> a; // row-major

    DenseMat() = default;
    DenseMat(const K& f, int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c), f.zero()) {}

    typename K::Elem& at(int r, int c) { return a[std::size_t(r) * std::size_t(cols) + std::size_t(c)]; }
    const typename K::Elem& at(int r, int c) const {
        return a[std::size_t(r) * std::size_t(cols) + std::size_t(c)];
    }
};

/// Incremental row-echelon accumulator; add() reduces a vector against the
/// current span and absorbs it when independent.
template <class K>
class Echelon {
public:
    explicit Echelon(const K& f, int width) : f_(f), width_(width) {}

    int rank() const { return int(rows_.size()); }
    int width() const { return width_; }

    /// Returns true when v was independent of the current span.
    bool add(std::vector<typename K::Elem> v) {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        auto inv = f_.inv(v[std::size_t(p)]);
        for (auto& x : v) x = f_.mul(x, inv);
        rows_.push_back({p, std::move(v)});
        return true;
    }

    bool contains(std::vector<typename K::Elem> v) const {
        reduce(v);
        return pivot_of(v) < 0;
    }

private:
    void reduce(std::vector<typename K::Elem>& v) const {
        for (const auto& [p, row] : rows_) {
            if (f_.is_zero(v[std::size_t(p)])) continue;
            auto c = v[std::size_t(p)];
            for (int j = 0; j < width_; ++j)
                v[std::size_t(j)] = f_.sub(v[std::size_t(j)], f_.mul(c, row[std::size_t(j)]));
        }
    }
    int pivot_of(const std::vector<typename K::Elem>& v) const {
        for (int j = 0; j < width_; ++j)
            if (!f_.is_zero(v[std::size_t(j)])) return j;
        return -1;
    }

    const K& f_;
    int width_;
    std::vector<std::pair<int, std::vector<typename K::Elem>>> rows_;
};

/// Row-reduce in place to reduced echelon form; returns pivot columns.
template <class K>
std::vector<int> row_reduce(const K& f, DenseMat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        auto inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto mult = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(mult, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(const K& f, DenseMat<K> m) {
    return int(row_reduce(f, m).size());
}

/// Basis of {x : Mx = 0}, one vector per free column.
template <class K>
std::vector<std::vector<typename K::Elem>> kernel_basis(const K& f, DenseMat<K> m) {
    auto pivots = row_reduce(f, m);
    std::vector<bool> is_pivot(std::size_t(m.cols), false);
    for (int c : pivots) is_pivot[std::size_t(c)] = true;

    std::vector<std::vector<typename K::Elem>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[std::size_t(c)]) continue;
        std::vector<typename K::Elem> v(std::size_t(m.cols), f.zero());
        v[std::size_t(c)] = f.one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[std::size_t(pivots[pr])] = f.neg(m.at(int(pr), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// x with Mx = b, if any.
template <class K>
bool solve(const K& f, DenseMat<K> m, std::vector<typename K::Elem> b,
           std::vector<typename K::Elem>& out) {
    DenseMat<K> aug(f, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[std::size_t(i)];
    }
    auto pivots = row_reduce(f, aug);
    out.assign(std::size_t(m.cols), f.zero());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == m.cols) return false; // inconsistent
        out[std::size_t(pivots[pr])] = aug.at(int(pr), m.cols);
    }
    return true;
}

} // namespace syzygy
