#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "tgl/field_linalg.hpp"

using namespace tgl;

namespace {

PrimeFieldMatrix from_rows(int p, const std::vector<std::vector<int>>& rows) {
    PrimeFieldMatrix m(p, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.set(r, c, rows[r][c]);
    return m;
}

// Independent rank oracle: largest k such that some k x k minor has nonzero
// determinant, with determinants by Laplace expansion.
int det_of_submatrix(const PrimeFieldMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    // plain Laplace along the first row, no memo sharing across calls
    const PrimeField& f = m.field();
    if (rows.empty())
        return 1;
    if (rows.size() == 1)
        return m.at(rows[0], cols[0]);
    int acc = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const int entry = m.at(rows[0], cols[j]);
        if (entry == 0)
            continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j)
                sub_cols.push_back(cols[t]);
        const int term = f.mul(entry, det_of_submatrix(m, sub_rows, sub_cols));
        acc = j % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

void subsets_of_size(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (visit(idx))
            return;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
            --pos;
        if (pos == 0)
            return;
        ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

std::size_t minor_rank_oracle(const PrimeFieldMatrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k >= 1; --k) {
        bool found = false;
        subsets_of_size(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            bool stop = false;
            subsets_of_size(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (det_of_submatrix(m, rows, cols) != 0) {
                    found = true;
                    stop = true;
                }
                return stop;
            });
            return stop;
        });
        if (found)
            return k;
    }
    return 0;
}

}  // namespace

TEST_CASE("prime field validates and computes inverses") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    PrimeField f7(7);
    for (int a = 1; a < 7; ++a)
        CHECK(f7.mul(a, f7.inv(a)) == 1);
    CHECK(f7.reduce(-3) == 4);
}

TEST_CASE("rank on stated examples") {
    CHECK(rank(PrimeFieldMatrix(5, 3, 3)) == 0);
    CHECK(rank(PrimeFieldMatrix::identity(2, 4)) == 4);
    // second row is twice the first over F_5
    CHECK(rank(from_rows(5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis on stated examples") {
    CHECK(kernel_basis(PrimeFieldMatrix::identity(3, 3)).empty());
    CHECK(kernel_basis(PrimeFieldMatrix(2, 2, 3)).size() == 3);
    const auto basis = kernel_basis(from_rows(2, {{1, 1}, {1, 1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<int>{1, 1});
}

TEST_CASE("kernel vectors are annihilated and complement the rank") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const int primes[] = {2, 3, 5, 7};
        const int p = primes[rng() % 4];
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        PrimeFieldMatrix m(p, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, static_cast<long long>(rng() % p));
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        PrimeField f(p);
        for (const auto& v : basis)
            for (std::size_t r = 0; r < rows; ++r) {
                int acc = 0;
                for (std::size_t c = 0; c < cols; ++c)
                    acc = f.add(acc, f.mul(m.at(r, c), v[c]));
                REQUIRE(acc == 0);
            }
        // kernel vectors are independent: stacking them has full rank
        if (!basis.empty())
            CHECK(span_rank(basis, cols, p) == basis.size());
    }
}

TEST_CASE("rank equals transpose rank and the minor oracle") {
    std::mt19937_64 rng(911);
    for (int trial = 0; trial < 40; ++trial) {
        const int primes[] = {2, 3, 5, 7};
        const int p = primes[rng() % 4];
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        PrimeFieldMatrix m(p, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, static_cast<long long>(rng() % p));
        CHECK(rank(m) == rank(m.transpose()));
        if (rows <= 6 && cols <= 6)
            CHECK(rank(m) == minor_rank_oracle(m));
    }
}

TEST_CASE("direct sum detection") {
    // coordinate axes in F_2^3
    CHECK(is_direct_sum({{{1, 0, 0}}, {{0, 1, 0}}}, 3, 2));
    // three lines in F_3^2 cannot be independent
    CHECK_FALSE(is_direct_sum({{{1, 1}}, {{1, 0}}, {{0, 1}}}, 2, 3));
    CHECK_THROWS_AS(is_direct_sum({{{1, 0}}, {{1, 0, 0}}}, 2, 2), std::invalid_argument);
}

TEST_CASE("matrix product and scaling") {
    const auto a = from_rows(5, {{1, 2}, {3, 4}});
    const auto i = PrimeFieldMatrix::identity(5, 2);
    CHECK(a * i == a);
    CHECK(i.scaled(3) * a == a.scaled(3));
}
