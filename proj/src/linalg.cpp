#include "coh1/linalg.hpp"

namespace coh1 {

std::vector<size_t> rref(RatMat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) /= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(RatMat m) { return rref(m).size(); }

std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b) {
    RatMat aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref(aug);
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == m.cols) return std::nullopt;
    std::vector<Rat> x(m.cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols);
    return x;
}

RatMat nullspace(const RatMat& m) {
    RatMat e = m;
    auto pivots = rref(e);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat ns(free_cols.size(), m.cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        ns.at(k, fc) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) ns.at(k, pivots[r]) = -e.at(r, fc);
    }
    return ns;
}

RatMat inverse(const RatMat& m) {
    assert(m.rows == m.cols);
    size_t n = m.rows;
    RatMat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n) throw std::runtime_error("singular matrix");
    RatMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Rat> RowSpan::residue(std::vector<Rat> v) const {
    for (size_t r = 0; r < basis.rows; ++r) {
        const Rat& c = v[pivots[r]];
        if (c == 0) continue;
        Rat f = c;
        for (size_t j = 0; j < basis.cols; ++j) v[j] -= f * basis.at(r, j);
    }
    return v;
}

bool RowSpan::contains(const std::vector<Rat>& v) const {
    auto r = residue(v);
    for (const Rat& x : r)
        if (x != 0) return false;
    return true;
}

bool RowSpan::add(std::vector<Rat> v) {
    v = residue(std::move(v));
    size_t lead = basis.cols;
    for (size_t j = 0; j < basis.cols; ++j)
        if (v[j] != 0) {
            lead = j;
            break;
        }
    if (lead == basis.cols) return false;
    Rat inv = v[lead];
    for (auto& x : v) x /= inv;
    // back-substitute into existing rows to keep rref shape
    for (size_t r = 0; r < basis.rows; ++r) {
        Rat f = basis.at(r, lead);
        if (f == 0) continue;
        for (size_t j = 0; j < basis.cols; ++j) basis.at(r, j) -= f * v[j];
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < lead) ++pos;
    RatMat nb(basis.rows + 1, basis.cols);
    for (size_t r = 0; r < pos; ++r)
        for (size_t j = 0; j < basis.cols; ++j) nb.at(r, j) = basis.at(r, j);
    for (size_t j = 0; j < basis.cols; ++j) nb.at(pos, j) = v[j];
    for (size_t r = pos; r < basis.rows; ++r)
        for (size_t j = 0; j < basis.cols; ++j) nb.at(r + 1, j) = basis.at(r, j);
    basis = std::move(nb);
    pivots.insert(pivots.begin() + pos, lead);
    return true;
}

RowSpan make_span(size_t ambient) {
    RowSpan s;
    s.basis = RatMat(0, ambient);
    return s;
}

RowSpan make_span(const std::vector<std::vector<Rat>>& vecs, size_t ambient) {
    RowSpan s = make_span(ambient);
    for (const auto& v : vecs) s.add(v);
    return s;
}

}  // namespace coh1
