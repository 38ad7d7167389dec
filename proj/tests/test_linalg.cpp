#include <numeric>
#include <random>

#include "doctest.h"
#include "monty/linalg.hpp"

using namespace monty;

namespace {

long rnd(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long mag) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rnd(rng, -mag, mag);
    return m;
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// test-side determinant oracle, plain Laplace expansion
Int det_oracle(const IntMatrix& a) {
    std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Int acc = 0;
    std::vector<std::size_t> rs(n - 1);
    std::iota(rs.begin(), rs.end(), 1);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> cs;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cs.push_back(k);
        Int term = a.at(0, j) * det_oracle(a.submatrix(rs, cs));
        acc += (j % 2 == 0) ? term : Int(-term);
    }
    return acc;
}

// all maximal minors, enumerated straightforwardly
std::vector<Int> maximal_minors(const IntMatrix& a) {
    std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> all_rows(m);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    std::vector<Int> out;
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(det_oracle(a.submatrix(all_rows, idx)));
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - m) {
                done = false;
                break;
            }
        }
        if (done) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// structure of the declared column normal form: leading zero columns, then a
// staircase of positive pivots (each the topmost nonzero of its column) on
// strictly increasing rows, pivot-row entries to the left reduced into
// [0, pivot)
void check_normal_form(const IntMatrix& h) {
    std::size_t m = h.rows(), n = h.cols();
    std::size_t j = 0;
    for (; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m; ++i)
            if (h.at(i, j) != 0) zero = false;
        if (!zero) break;
    }
    long prev_pivot_row = -1;
    for (; j < n; ++j) {
        std::size_t p = 0;
        while (p < m && h.at(p, j) == 0) ++p;
        REQUIRE(p < m);  // no zero column may follow the zero block
        CHECK(h.at(p, j) > 0);
        CHECK(static_cast<long>(p) > prev_pivot_row);
        prev_pivot_row = static_cast<long>(p);
        for (std::size_t jj = 0; jj < j; ++jj) {
            CHECK(h.at(p, jj) >= 0);
            CHECK(h.at(p, jj) < h.at(p, j));
        }
    }
}

}  // namespace

TEST_CASE("det worked examples") {
    CHECK(det(from_rows({{9, 10}, {10, 1}})) == -91);
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(from_rows({{0}})) == 0);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det matches Laplace expansion on random matrices") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
        IntMatrix a = random_matrix(rng, n, n, 9);
        CHECK(det(a) == det_oracle(a));
    }
}

TEST_CASE("adjugate worked examples and defining identity") {
    CHECK(adjugate(from_rows({{1, -10}, {-10, 9}})) == from_rows({{9, 10}, {10, 1}}));
    CHECK(adjugate(IntMatrix::identity(4)) == IntMatrix::identity(4));

    IntMatrix singular = from_rows({{1, 2}, {2, 4}});
    IntMatrix adj = adjugate(singular);
    CHECK(adj == from_rows({{4, -2}, {-2, 1}}));
    CHECK(singular * adj == IntMatrix(2, 2));

    std::mt19937_64 rng(2);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix a = random_matrix(rng, n, n, 8);
        IntMatrix prod = a * adjugate(a);
        Int d = det(a);
        IntMatrix want(n, n);
        for (std::size_t i = 0; i < n; ++i) want.at(i, i) = d;
        CHECK(prod == want);
    }
}

TEST_CASE("hnf worked examples") {
    auto [h, u] = hnf_with_transform(from_rows({{9, 10, 1}}));
    CHECK(h == from_rows({{0, 0, 1}}));
    CHECK(from_rows({{9, 10, 1}}) * u == h);
    CHECK(abs(det(u)) == 1);

    auto [hi, ui] = hnf_with_transform(IntMatrix::identity(3));
    CHECK(hi == IntMatrix::identity(3));
    CHECK(ui == IntMatrix::identity(3));

    auto [hz, uz] = hnf_with_transform(IntMatrix(2, 3));
    CHECK(hz == IntMatrix(2, 3));
    CHECK(uz == IntMatrix::identity(3));
}

TEST_CASE("hnf properties on random matrices") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 60; ++it) {
        std::size_t m = 1 + static_cast<std::size_t>(rng() % 4);
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix a = random_matrix(rng, m, n, 12);
        auto [h, u] = hnf_with_transform(a);
        CHECK(a * u == h);
        CHECK(abs(det(u)) == 1);
        check_normal_form(h);
    }
}

TEST_CASE("delta is invariant under unimodular column operations") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 30; ++it) {
        std::size_t m = 1 + static_cast<std::size_t>(rng() % 3);
        std::size_t n = m + static_cast<std::size_t>(rng() % 3);
        IntMatrix a = random_matrix(rng, m, n, 10);
        IntMatrix b = a;
        for (int op = 0; op < 6; ++op) {
            std::size_t x = rng() % n, y = rng() % n;
            if (x == y) continue;
            long q = rnd(rng, -3, 3);
            for (std::size_t i = 0; i < m; ++i) b.at(i, x) += q * b.at(i, y);
        }
        CHECK(delta(a) == delta(b));
    }
}

TEST_CASE("integer_kernel worked examples") {
    IntMatrix a = from_rows({{9, 10, 1}});
    IntMatrix basis = integer_kernel(a);
    REQUIRE(basis.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
        Int acc = 9 * basis.at(0, j) + 10 * basis.at(1, j) + basis.at(2, j);
        CHECK(acc == 0);
    }
    CHECK(delta(basis.transpose()) == 1);

    CHECK(integer_kernel(IntMatrix::identity(4)).cols() == 0);

    IntMatrix b = integer_kernel(from_rows({{2, 4}}));
    REQUIRE(b.cols() == 1);
    // integer kernel, not rational: +-(2,-1), never (1,-1/2)
    CHECK(abs(b.at(0, 0)) == 2);
    CHECK(abs(b.at(1, 0)) == 1);
    CHECK(2 * b.at(0, 0) + 4 * b.at(1, 0) == 0);
}

TEST_CASE("integer_kernel spans the full kernel on random matrices") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        std::size_t m = 1 + static_cast<std::size_t>(rng() % 3);
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix a = random_matrix(rng, m, n, 9);
        IntMatrix basis = integer_kernel(a);
        CHECK(a * basis == IntMatrix(m, basis.cols()));
        if (basis.cols() > 0) CHECK(delta(basis.transpose()) == 1);
    }
}

TEST_CASE("delta worked examples") {
    CHECK(delta(from_rows({{9, 10, 1}})) == 1);
    CHECK(delta(from_rows({{2, 4}, {6, 8}})) == 8);
    CHECK(delta(IntMatrix(1, 3)) == 0);
    CHECK_THROWS_AS(delta(IntMatrix(3, 2)), std::invalid_argument);
}

TEST_CASE("vol2 worked examples") {
    CHECK(vol2(IntMatrix(0, 5)) == 1);
    CHECK(vol2(from_rows({{9, 10, 1}})) == 182);
    CHECK(vol2(from_rows({{-1, 1, -1}, {4, -3, -6}})) == 182);
    CHECK_THROWS_AS(vol2(IntMatrix(3, 2)), std::invalid_argument);
}

TEST_CASE("vol2 equals the sum of squared maximal minors") {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 40; ++it) {
        std::size_t m = 1 + static_cast<std::size_t>(rng() % 4);
        std::size_t n = m + static_cast<std::size_t>(rng() % (8 - m));
        if (n > 7) n = 7;
        IntMatrix a = random_matrix(rng, m, n, 7);
        Int sum = 0;
        for (const Int& minor : maximal_minors(a)) sum += minor * minor;
        CHECK(vol2(a) == sum);
    }
}

TEST_CASE("vol2_weighted agrees with rational vol2") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        std::size_t m = 1 + static_cast<std::size_t>(rng() % 3);
        std::size_t n = m + static_cast<std::size_t>(rng() % 3);
        IntMatrix a = random_matrix(rng, m, n, 6);
        std::vector<Rat> w(n);
        RatMatrix scaled(m, n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat root = make_rat(rnd(rng, 1, 5), rnd(rng, 1, 5));
            w[j] = root * root;
            for (std::size_t i = 0; i < m; ++i) scaled.at(i, j) = Rat(a.at(i, j)) * root;
        }
        CHECK(vol2_weighted(a, w) == vol2(scaled));
    }
}

TEST_CASE("jacobi identity on 2x2 cofactor cases") {
    CHECK(jacobi_identity_check(from_rows({{9, 10}, {10, 1}}), {0}, {0}));
    std::mt19937_64 rng(8);
    for (int it = 0; it < 10; ++it) {
        IntMatrix a = random_matrix(rng, 2, 2, 9);
        CHECK(jacobi_identity_check(a, {static_cast<std::size_t>(rng() % 2)},
                                    {static_cast<std::size_t>(rng() % 2)}));
    }
}

TEST_CASE("jacobi identity on 200 random matrices up to 5x5") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(rng() % 4);
        IntMatrix a = random_matrix(rng, n, n, 6);
        std::size_t k = 1 + static_cast<std::size_t>(rng() % n);
        auto pick = [&](std::size_t count) {
            std::vector<std::size_t> all(n);
            std::iota(all.begin(), all.end(), 0);
            for (std::size_t i = 0; i < n; ++i) std::swap(all[i], all[rng() % n]);
            all.resize(count);
            std::sort(all.begin(), all.end());
            return all;
        };
        CHECK(jacobi_identity_check(a, pick(k), pick(k)));
    }
    CHECK_THROWS_AS(jacobi_identity_check(IntMatrix::identity(3), {0, 1}, {0}),
                    std::invalid_argument);
}
