#pragma once

#include "coh1/rat.hpp"

#include <cassert>
#include <optional>

namespace coh1 {

// Dense exact-rational matrices. Sizes in this project stay below ~300x300,
// so plain Gaussian elimination over mpq is plenty.
struct RatMat {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    RatMat() = default;
    RatMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static RatMat identity(size_t n) {
        RatMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    RatMat operator*(const RatMat& o) const {
        assert(cols == o.rows);
        RatMat r(rows, o.cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t k = 0; k < cols; ++k) {
                const Rat& x = at(i, k);
                if (x == 0) continue;
                for (size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        assert(v.size() == cols);
        std::vector<Rat> r(rows, Rat(0));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    std::vector<Rat> apply(const IVec& v) const {
        std::vector<Rat> q(v.begin(), v.end());
        return apply(q);
    }

    RatMat transposed() const {
        RatMat r(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

// Solve m x = b; empty optional if inconsistent. Free variables are set to 0.
std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b);

// Basis of the right null space (as rows of the returned matrix).
RatMat nullspace(const RatMat& m);

RatMat inverse(const RatMat& m);

// Row space membership test helper: a subspace kept in echelon form.
struct RowSpan {
    RatMat basis;  // rref rows, no zero rows
    std::vector<size_t> pivots;

    size_t dim() const { return basis.rows; }
    size_t ambient() const { return basis.cols; }

    // Reduce v against the span; returns the residue (zero iff v in span).
    std::vector<Rat> residue(std::vector<Rat> v) const;
    bool contains(const std::vector<Rat>& v) const;
    // Add v if independent; returns true if the span grew.
    bool add(std::vector<Rat> v);
};

RowSpan make_span(size_t ambient);
RowSpan make_span(const std::vector<std::vector<Rat>>& vecs, size_t ambient);

}  // namespace coh1
