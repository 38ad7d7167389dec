#include <random>

#include "doctest.h"
#include "monty/intpoly.hpp"

using namespace monty;

namespace {

// the running pair: f1 = -x^2 + x - 1, f2 = 4x^2 - 3x - 6, common root 10 mod 91
const IntPoly kF1({-1, 1, -1});
const IntPoly kF2({-6, -3, 4});

long rnd(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

IntPoly random_poly(std::mt19937_64& rng, std::size_t deg, long mag) {
    std::vector<Int> c(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) c[i] = rnd(rng, -mag, mag);
    while (c[deg] == 0) c[deg] = rnd(rng, -mag, mag);
    return IntPoly(std::move(c));
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("coeff_rows layout and the empty-list convention") {
    IntMatrix r1 = coeff_rows({IntPoly({-9, 0, 1})}, 2);
    CHECK(r1 == from_rows({{1, 0, -9}}));
    IntMatrix r2 = coeff_rows({IntPoly({-10, 1})}, 2);
    CHECK(r2 == from_rows({{0, 1, -10}}));

    IntMatrix empty = coeff_rows(std::span<const IntPoly>{}, 3);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 3);  // the 0 x n (not 0 x n+1) empty matrix

    CHECK_THROWS_AS(coeff_rows({IntPoly({1, 2, 3})}, 1), std::invalid_argument);
}

TEST_CASE("sylvester layout") {
    CHECK(sylvester(IntPoly({1, 1}), IntPoly({-1, 1})) == from_rows({{1, 1}, {1, -1}}));
    CHECK(sylvester(kF1, kF2) ==
          from_rows({{-1, 1, -1, 0}, {0, -1, 1, -1}, {4, -3, -6, 0}, {0, 4, -3, -6}}));
    CHECK(sylvester(IntPoly({0, 0, 1}), IntPoly({0, 1})) ==
          from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(sylvester(IntPoly({3}), IntPoly({0, 1})), std::invalid_argument);
}

TEST_CASE("resultant worked examples") {
    CHECK(resultant(IntPoly({1, 1}), IntPoly({-1, 1})) == -2);
    CHECK(resultant(kF1, kF2) == 91);
    IntPoly f({3, -2, 0, 5});
    CHECK(resultant(f, f) == 0);
}

TEST_CASE("resultant equals the product of f2 over integer roots of f1") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        long lc = rnd(rng, 1, 4);
        long r1 = rnd(rng, -6, 6), r2 = rnd(rng, -6, 6);
        IntPoly f1 = IntPoly({Int(lc)}) * IntPoly({-r1, 1}) * IntPoly({-r2, 1});
        IntPoly f2 = random_poly(rng, 1 + rng() % 3, 8);
        Int want = int_pow(Int(lc), f2.degree()) * f2.eval(r1) * f2.eval(r2);
        CHECK(resultant(f1, f2) == want);
    }
}

TEST_CASE("bezout worked examples") {
    CHECK(bezout(kF1, kF2) == from_rows({{1, -10}, {-10, 9}}));
    CHECK(bezout(IntPoly({0, 0, 1}), IntPoly({0, 0, 1})) == IntMatrix(2, 2));
}

TEST_CASE("bezout is symmetric and satisfies the determinant identity") {
    std::mt19937_64 rng(12);
    CHECK(det_bezout_identity(kF1, kF2));
    CHECK(det_bezout_identity(IntPoly({1, 1}), IntPoly({-1, 1})));
    for (int it = 0; it < 50; ++it) {
        IntPoly f1 = random_poly(rng, 1 + rng() % 4, 9);
        IntPoly f2 = random_poly(rng, 1 + rng() % 4, 9);
        IntMatrix b = bezout(f1, f2);
        CHECK(b == b.transpose());
        CHECK(det_bezout_identity(f1, f2));
    }
}

TEST_CASE("first subresultant of the running pair") {
    // M_{2,2} = -10 and M_{2,3} = -1, so sres1 = (-1)^3 (M_{2,2} x - M_{2,3}) = 10x - 1
    CHECK(first_subresultant(kF1, kF2) == IntPoly({-1, 10}));
    CHECK_THROWS_AS(first_subresultant(IntPoly({1, 1}), IntPoly({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("delta(S_d2) divides the resultant and the subresultant coefficients") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 30) {
        std::size_t d1 = 2 + rng() % 3;
        std::size_t d2 = 2 + rng() % (d1 - 1);
        IntPoly f1 = random_poly(rng, d1, 9), f2 = random_poly(rng, d2, 9);
        if (resultant(f1, f2) == 0) continue;
        Int d_s = delta(s_t_matrix(f1, f2, d2));
        REQUIRE(d_s != 0);
        Int res = resultant(f1, f2);
        IntPoly sres = first_subresultant(f1, f2);
        CHECK(mpz_divisible_p(res.get_mpz_t(), d_s.get_mpz_t()));
        Int c0 = sres.coeff(0), c1 = sres.coeff(1);
        CHECK(mpz_divisible_p(c0.get_mpz_t(), d_s.get_mpz_t()));
        CHECK(mpz_divisible_p(c1.get_mpz_t(), d_s.get_mpz_t()));
        ++done;
    }
}

TEST_CASE("sres1 detects exactly the degree-1 common factors") {
    // common factor of degree 1: res = 0 but sres1 != 0
    IntPoly g({-3, 1});  // x - 3
    IntPoly f1 = g * IntPoly({1, 2, 1});
    IntPoly f2 = g * IntPoly({5, 0, 1});
    CHECK(resultant(f1, f2) == 0);
    CHECK_FALSE(first_subresultant(f1, f2).is_zero());

    // common factor of degree 2: both vanish
    IntPoly h({1, 1, 1});
    IntPoly g1 = h * IntPoly({0, 1});
    CHECK(resultant(g1, h) == 0);
    CHECK(first_subresultant(g1, h).is_zero());
}

TEST_CASE("s_t_matrix layout, range checks, and recursions") {
    CHECK(s_t_matrix(kF1, kF2, 2) == from_rows({{-1, 1, -1}, {4, -3, -6}}));
    CHECK_THROWS_AS(s_t_matrix(kF1, kF2, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_t_matrix(kF1, kF2, 1), std::invalid_argument);

    std::mt19937_64 rng(14);
    for (int it = 0; it < 20; ++it) {
        IntPoly f1 = random_poly(rng, 3, 9), f2 = random_poly(rng, 2, 9);

        // S_t(f1,f2) stacks a row of f1 on top of S_{t-1} shifted one column right
        IntMatrix s3 = s_t_matrix(f1, f2, 3);
        IntMatrix s2 = s_t_matrix(f1, f2, 2);
        for (std::size_t j = 0; j < s3.cols(); ++j)
            CHECK(s3.at(0, j) == f1.coeff(s3.cols() - 1 - j));
        for (std::size_t i = 0; i < s2.rows(); ++i) {
            CHECK(s3.at(i + 1, 0) == 0);
            for (std::size_t j = 0; j < s2.cols(); ++j) CHECK(s3.at(i + 1, j + 1) == s2.at(i, j));
        }

        // S_{d2} is Syl with rows 1 and d2+1 and the first column removed
        IntMatrix syl = sylvester(f1, f2);
        std::size_t d2 = f2.degree();
        std::vector<std::size_t> keep_rows;
        for (std::size_t i = 0; i < syl.rows(); ++i)
            if (i != 0 && i != d2) keep_rows.push_back(i);
        std::vector<std::size_t> keep_cols;
        for (std::size_t j = 1; j < syl.cols(); ++j) keep_cols.push_back(j);
        CHECK(s_t_matrix(f1, f2, d2) == syl.submatrix(keep_rows, keep_cols));
    }
}

TEST_CASE("ct_vector worked example and kernel property") {
    std::vector<Int> c2 = ct_vector(kF1, kF2, 2);
    CHECK(c2 == std::vector<Int>{-9, -10, -1});

    std::mt19937_64 rng(15);
    for (int it = 0; it < 25; ++it) {
        std::size_t d1 = 2 + rng() % 3;
        std::size_t d2 = 2 + rng() % (d1 - 1 ? d1 - 1 : 1);
        if (d2 > d1) continue;
        IntPoly f1 = random_poly(rng, d1, 9), f2 = random_poly(rng, d2, 9);
        for (std::size_t t = d2; t <= d1; ++t) {
            IntMatrix st = s_t_matrix(f1, f2, t);
            std::vector<Int> ct = ct_vector(f1, f2, t);
            for (std::size_t i = 0; i < st.rows(); ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < st.cols(); ++j) acc += st.at(i, j) * ct[j];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("ct_vector satisfies the minor recursion across t") {
    std::mt19937_64 rng(16);
    for (int it = 0; it < 20; ++it) {
        IntPoly f1 = random_poly(rng, 3, 9), f2 = random_poly(rng, 2, 9);
        std::vector<Int> c2 = ct_vector(f1, f2, 2);
        std::vector<Int> c3 = ct_vector(f1, f2, 3);
        const Int& lc = f1.lc();
        for (std::size_t i = 1; i < c3.size(); ++i) CHECK(c3[i] == -lc * c2[i - 1]);
        Int first = 0;  // M_{t,1} = sum a_{1,d-i} M_{t-1,i}
        for (std::size_t i = 1; i <= 3; ++i) first += f1.coeff(3 - i) * c2[i - 1];
        CHECK(c3[0] == first);
    }
}

TEST_CASE("ct_vector vanishes when S_d2 is rank-deficient") {
    IntPoly f1({0, 0, 0, 1});  // x^3
    IntPoly f2({0, 0, 1});     // x^2
    std::vector<Int> c = ct_vector(f1, f2, 2);
    for (const Int& x : c) CHECK(x == 0);
}

TEST_CASE("skewed norms") {
    CHECK(skewed_norm_sq(IntPoly({-9, 0, 1}), Rat(1)) == 82);
    CHECK(skewed_norm_sq(IntPoly({-9, 0, 1}), Rat(4)) == make_rat(337, 16));
    CHECK(skewed_norm_sq(IntPoly({1}), make_rat(7, 3)) == 1);
    CHECK_THROWS_AS(skewed_norm_sq(IntPoly(), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(skewed_norm_sq(IntPoly({1, 1}), Rat(0)), std::invalid_argument);

    std::vector<Int> c = {9, 10, 1};
    CHECK(skewed_vec_norm_sq(c, Rat(1)) == 182);
}

TEST_CASE("sin2_theta worked examples") {
    CHECK(sin2_theta(kF1, kF2, Rat(1)) == make_rat(182, 183));
    IntPoly f1({1, 2, 3});
    IntPoly scaled = f1 * IntPoly({5});
    CHECK(sin2_theta(f1, scaled, make_rat(7, 5)) == 0);
    CHECK(sin2_theta(IntPoly({0, 0, 1}), IntPoly({1}), Rat(2)) == 1);
    CHECK_THROWS_AS(sin2_theta(IntPoly(), kF2, Rat(1)), std::invalid_argument);
}

TEST_CASE("eval_mod worked examples") {
    CHECK(eval_mod(kF1, 10, 91) == 0);
    CHECK(eval_mod(kF2, 10, 91) == 0);
    IntPoly f({-17, 3, 5});
    CHECK(eval_mod(f, 0, 7) == mod_floor(-17, 7));
    CHECK_THROWS_AS(eval_mod(f, 3, 1), std::invalid_argument);
}

TEST_CASE("squared volume of the skewed S_t equals the skewed norm of c_t") {
    std::mt19937_64 rng(17);
    std::vector<Rat> skews = {Rat(1), Rat(2), make_rat(5, 3)};
    for (int it = 0; it < 15; ++it) {
        std::size_t d1 = 2 + rng() % 3;
        std::size_t d2 = 2 + (d1 > 2 ? rng() % (d1 - 1) : 0);
        IntPoly f1 = random_poly(rng, d1, 8), f2 = random_poly(rng, d2, 8);
        for (std::size_t t = d2; t <= d1; ++t) {
            IntMatrix st = s_t_matrix(f1, f2, t);
            std::vector<Int> ct = ct_vector(f1, f2, t);
            for (const Rat& s : skews) {
                std::vector<Rat> w(st.cols());
                long n = static_cast<long>(d1 + t) - 2;
                for (std::size_t j = 0; j < st.cols(); ++j)
                    w[j] = rat_pow(s, n - 2 * static_cast<long>(j));
                CHECK(vol2_weighted(st, w) == skewed_vec_norm_sq(ct, 1 / s));
            }
        }
    }
}

TEST_CASE("squared upper and lower bounds on the c_t norm") {
    std::mt19937_64 rng(18);
    std::vector<Rat> skews = {Rat(1), Rat(2), make_rat(7, 5)};
    int done = 0;
    while (done < 15) {
        std::size_t d1 = 2 + rng() % 3;
        std::size_t d2 = 2 + (d1 > 2 ? rng() % (d1 - 1) : 0);
        IntPoly f1 = random_poly(rng, d1, 8), f2 = random_poly(rng, d2, 8);
        Int res = resultant(f1, f2);
        if (res == 0) continue;
        ++done;
        for (std::size_t t = d2; t <= d1; ++t) {
            std::vector<Int> ct = ct_vector(f1, f2, t);
            Int dst = delta(s_t_matrix(f1, f2, t));
            for (const Rat& s : skews) {
                Rat nct = skewed_vec_norm_sq(ct, 1 / s);
                Rat upper = rat_pow(sin2_theta(f1, f2, s) * skewed_norm_sq(f1, s), t - 1) *
                            rat_pow(rat_pow(s, static_cast<long>(d2) - static_cast<long>(t)) *
                                        skewed_norm_sq(f2, s),
                                    d1 - 1);
                CHECK(nct <= upper);
                CHECK(nct >= Rat(dst * dst));  // remark-level lower bound

                // corollary with k = 0, raised to the t-th power
                Rat lower = rat_pow(s, static_cast<long>(t) *
                                           (static_cast<long>(t) - static_cast<long>(d1))) *
                            rat_pow(rat_pow(s, static_cast<long>(d2)) * Rat(f2.lc()),
                                    2 * (d1 - t)) *
                            Rat(int_pow(int_pow(f1.lc(), t - d2) * res, 2 * (t - 1)));
                CHECK(rat_pow(nct, static_cast<long>(t)) >= lower);
            }
        }

        // corollary with t = d, k = 1, raised to the power 2(d-1)
        std::vector<Int> cd = ct_vector(f1, f2, d1);
        for (const Rat& s : skews) {
            Rat lhs = rat_pow(skewed_vec_norm_sq(cd, 1 / s), d1 - 1);
            Rat rhs = rat_pow(s, static_cast<long>(d2) - static_cast<long>(d1)) *
                      Rat(int_pow(int_pow(f1.lc(), d1 - d2) * res, 2 * (d1 - 2))) *
                      sin2_theta(f1, f2, s) * skewed_norm_sq(f1, s) * skewed_norm_sq(f2, s);
            CHECK(lhs >= rhs);
        }
    }
}

TEST_CASE("d = t = 2 norm equality") {
    std::mt19937_64 rng(19);
    std::vector<Rat> skews = {Rat(1), Rat(2), make_rat(7, 5)};
    for (int it = 0; it < 20; ++it) {
        IntPoly f1 = random_poly(rng, 2, 9), f2 = random_poly(rng, 2, 9);
        std::vector<Int> c2 = ct_vector(f1, f2, 2);
        for (const Rat& s : skews)
            CHECK(skewed_vec_norm_sq(c2, 1 / s) ==
                  sin2_theta(f1, f2, s) * skewed_norm_sq(f1, s) * skewed_norm_sq(f2, s));
    }
    // witnessed by the running example: 182 = (182/183) * 3 * 61
    CHECK(skewed_vec_norm_sq(ct_vector(kF1, kF2, 2), Rat(1)) == 182);
}

TEST_CASE("zero polynomial has no degree or lc") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.degree(), std::invalid_argument);
    CHECK_THROWS_AS(z.lc(), std::invalid_argument);
    CHECK(IntPoly({0, 0, 0}).is_zero());
}
