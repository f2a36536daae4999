#pragma once

// Exact dense linear algebra over prime fields F_p: rank, kernel bases and
// direct-sum tests. Plain row reduction on residues; matrix sizes stay at
// desk scale (a few thousand columns), so no sparse or blocked variants.

#include <cstddef>
#include <vector>

#include "tgl/common.hpp"

namespace tgl {

inline bool is_prime(long n) {
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Arithmetic in F_p. Residues are ints in [0, p).
class PrimeField {
public:
    explicit PrimeField(int p) : p_(p) {
        require(is_prime(p), "PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    int p() const { return p_; }

    int reduce(long long a) const {
        long long r = a % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const { return static_cast<int>((static_cast<long long>(a) * b) % p_); }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

    int inv(int a) const {
        require(a % p_ != 0, "PrimeField: inverse of zero");
        // Fermat: a^(p-2) mod p.
        int e = p_ - 2, base = a % p_, r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

private:
    int p_;
};

/// Dense matrix over F_p, row-major, entries in [0, p). Values are set up
/// front and treated as immutable afterwards; all operations below are pure.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(int p, std::size_t rows, std::size_t cols)
        : field_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static PrimeFieldMatrix identity(int p, std::size_t n) {
        PrimeFieldMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    int p() const { return field_.p(); }
    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v) { a_[r * cols_ + c] = field_.reduce(v); }

    bool operator==(const PrimeFieldMatrix& o) const {
        return p() == o.p() && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    PrimeFieldMatrix transpose() const {
        PrimeFieldMatrix t(p(), cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.set(c, r, at(r, c));
        return t;
    }

    PrimeFieldMatrix operator*(const PrimeFieldMatrix& o) const {
        require(p() == o.p(), "matrix product: field mismatch");
        require(cols_ == o.rows_, "matrix product: shape mismatch");
        PrimeFieldMatrix r(p(), rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                int aik = at(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.set(i, j, r.at(i, j) + static_cast<long long>(aik) * o.at(k, j));
            }
        return r;
    }

    PrimeFieldMatrix scaled(int c) const {
        PrimeFieldMatrix r(p(), rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = field_.mul(a_[i], field_.reduce(c));
        return r;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<int> a_;
};

namespace detail {

// Reduced row echelon form; returns pivot column per pivot row.
inline std::vector<std::size_t> rref_in_place(std::vector<std::vector<int>>& m, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[row]);
        const int inv = f.inv(m[row][col]);
        for (std::size_t c = col; c < cols; ++c)
            m[row][c] = f.mul(m[row][c], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const int factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::vector<std::vector<int>> to_rows(const PrimeFieldMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m.at(r, c);
    return rows;
}

}  // namespace detail

inline std::size_t rank(const PrimeFieldMatrix& m) {
    auto rows = detail::to_rows(m);
    return detail::rref_in_place(rows, m.field()).size();
}

/// Basis of {v : m v = 0}, one vector per free column of the RREF, in
/// ascending free-column order. Deterministic, suitable for golden tests.
inline std::vector<std::vector<int>> kernel_basis(const PrimeFieldMatrix& m) {
    auto rows = detail::to_rows(m);
    const auto pivots = detail::rref_in_place(rows, m.field());
    const PrimeField& f = m.field();
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<int>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<int> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(rows[r][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank of a list of vectors seen as rows.
inline std::size_t span_rank(const std::vector<std::vector<int>>& vectors, std::size_t ambient_dim, int p) {
    PrimeField f(p);
    auto rows = vectors;
    for (const auto& v : rows)
        require(v.size() == ambient_dim, "span_rank: vector length != ambient dimension");
    for (auto& v : rows)
        for (auto& e : v)
            e = f.reduce(e);
    return detail::rref_in_place(rows, f).size();
}

/// True iff the sum of the spans is direct: rank of the concatenation equals
/// the sum of the individual ranks.
inline bool is_direct_sum(const std::vector<std::vector<std::vector<int>>>& subspaces,
                          std::size_t ambient_dim, int p) {
    std::size_t total_rank = 0;
    std::vector<std::vector<int>> all;
    for (const auto& sub : subspaces) {
        total_rank += span_rank(sub, ambient_dim, p);
        all.insert(all.end(), sub.begin(), sub.end());
    }
    return span_rank(all, ambient_dim, p) == total_rank;
}

}  // namespace tgl
