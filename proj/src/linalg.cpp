#include "monty/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace monty {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rs,
                               const std::vector<std::size_t>& cs) const {
    IntMatrix r(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (rs[i] >= rows_ || cs[j] >= cols_)
                throw std::invalid_argument("submatrix: index out of range");
            r.at(i, j) = at(rs[i], cs[j]);
        }
    return r;
}

IntMatrix IntMatrix::without_column(std::size_t j) const {
    if (j >= cols_) throw std::invalid_argument("without_column: index out of range");
    IntMatrix r(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t c = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            if (k == j) continue;
            r.at(i, c++) = at(i, k);
        }
    }
    return r;
}

namespace {

Int det_cofactor(const IntMatrix& a) {
    std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    if (n == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    Int acc = 0;
    std::vector<std::size_t> rs(n - 1);
    std::iota(rs.begin(), rs.end(), 1);
    std::vector<std::size_t> cs;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        cs.clear();
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cs.push_back(k);
        Int minor = det_cofactor(a.submatrix(rs, cs));
        if (j % 2 == 0)
            acc += a.at(0, j) * minor;
        else
            acc -= a.at(0, j) * minor;
    }
    return acc;
}

// Bareiss fraction-free elimination; intermediate entries stay polynomial.
Int det_bareiss(IntMatrix a) {
    std::size_t n = a.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

}  // namespace

Int det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square matrix");
    return a.rows() <= 4 ? det_cofactor(a) : det_bareiss(a);
}

Rat det(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return Rat(1);
    RatMatrix m = a;
    Rat d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m.at(p, k) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            d = -d;
        }
        d *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

IntMatrix adjugate(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjugate: non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) throw std::invalid_argument("adjugate: empty matrix");
    IntMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rs.clear();
            cs.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) rs.push_back(k);
                if (k != j) cs.push_back(k);
            }
            Int cof = det(a.submatrix(rs, cs));
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    return adj;
}

HnfResult hnf_with_transform(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(n);

    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(h.at(i, x), h.at(i, y));
        for (std::size_t i = 0; i < n; ++i) std::swap(u.at(i, x), u.at(i, y));
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t i = 0; i < m; ++i) h.at(i, x) = -h.at(i, x);
        for (std::size_t i = 0; i < n; ++i) u.at(i, x) = -u.at(i, x);
    };
    // col x -= q * col y
    auto col_submul = [&](std::size_t x, std::size_t y, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) h.at(i, x) -= q * h.at(i, y);
        for (std::size_t i = 0; i < n; ++i) u.at(i, x) -= q * u.at(i, y);
    };

    std::size_t npc = 0;  // next pivot column
    for (std::size_t i = 0; i < m && npc < n; ++i) {
        // gcd-eliminate row i across columns npc..n-1
        while (true) {
            std::size_t best = n;
            for (std::size_t j = npc; j < n; ++j) {
                if (h.at(i, j) == 0) continue;
                if (best == n || mpz_cmpabs(h.at(i, j).get_mpz_t(), h.at(i, best).get_mpz_t()) < 0)
                    best = j;
            }
            if (best == n) break;  // row zero on the working columns
            col_swap(npc, best);
            if (h.at(i, npc) < 0) col_negate(npc);
            bool clean = true;
            for (std::size_t j = npc + 1; j < n; ++j) {
                if (h.at(i, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, npc).get_mpz_t());
                col_submul(j, npc, q);
                if (h.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(i, npc) == 0) continue;  // no pivot in this row
        // entries left of the pivot, same row, reduced into [0, pivot)
        for (std::size_t j = 0; j < npc; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, npc).get_mpz_t());
            col_submul(j, npc, q);
        }
        ++npc;
    }

    // rotate the zero columns to the front, pivot columns keep their order
    const std::size_t r = npc;
    if (r > 0 && r < n) {
        IntMatrix h2(m, n), u2(n, n);
        const std::size_t z = n - r;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t dst = j < r ? z + j : j - r;
            for (std::size_t i = 0; i < m; ++i) h2.at(i, dst) = h.at(i, j);
            for (std::size_t i = 0; i < n; ++i) u2.at(i, dst) = u.at(i, j);
        }
        h = std::move(h2);
        u = std::move(u2);
    }
    return {std::move(h), std::move(u)};
}

IntMatrix integer_kernel(const IntMatrix& a) {
    auto [h, u] = hnf_with_transform(a);
    std::size_t n = a.cols();
    std::size_t z = 0;
    for (; z < n; ++z) {
        bool zero = true;
        for (std::size_t i = 0; i < a.rows() && zero; ++i) zero = h.at(i, z) == 0;
        if (!zero) break;
    }
    IntMatrix basis(n, z);
    for (std::size_t j = 0; j < z; ++j)
        for (std::size_t i = 0; i < n; ++i) basis.at(i, j) = u.at(i, j);
    return basis;
}

namespace {

// Visit all size-k subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    if (k == 0) {
        std::vector<std::size_t> empty;
        visit(empty);
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!visit(idx)) return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Int delta(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m > n) throw std::invalid_argument("delta: more rows than columns");
    if (m == 0) return 1;
    std::vector<std::size_t> all_rows(m);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    Int g = 0;
    for_each_subset(n, m, [&](const std::vector<std::size_t>& cols) {
        g = int_gcd(g, det(a.submatrix(all_rows, cols)));
        return g != 1;
    });
    return abs(g);
}

Int vol2(const IntMatrix& a) {
    if (a.rows() > a.cols()) throw std::invalid_argument("vol2: more rows than columns");
    return det(a * a.transpose());
}

Rat vol2(const RatMatrix& a) {
    if (a.rows() > a.cols()) throw std::invalid_argument("vol2: more rows than columns");
    RatMatrix g(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            Rat s(0);
            for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * a.at(j, k);
            g.at(i, j) = s;
        }
    return det(g);
}

Rat vol2_weighted(const IntMatrix& a, const std::vector<Rat>& w) {
    if (a.rows() > a.cols()) throw std::invalid_argument("vol2_weighted: more rows than columns");
    if (w.size() != a.cols()) throw std::invalid_argument("vol2_weighted: weight count");
    RatMatrix g(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            Rat s(0);
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k) == 0 || a.at(j, k) == 0) continue;
                s += Rat(a.at(i, k) * a.at(j, k)) * w[k];
            }
            g.at(i, j) = s;
        }
    return det(g);
}

bool jacobi_identity_check(const IntMatrix& a,
                           const std::vector<std::size_t>& rows_i,
                           const std::vector<std::size_t>& cols_j) {
    if (a.rows() != a.cols()) throw std::invalid_argument("jacobi: non-square matrix");
    const std::size_t n = a.rows();
    if (rows_i.size() != cols_j.size() || rows_i.empty())
        throw std::invalid_argument("jacobi: |I| != |J| or empty");
    auto complement = [n](const std::vector<std::size_t>& s) {
        std::vector<bool> in(n, false);
        for (auto i : s) {
            if (i >= n) throw std::invalid_argument("jacobi: index out of range");
            if (in[i]) throw std::invalid_argument("jacobi: repeated index");
            in[i] = true;
        }
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (!in[i]) c.push_back(i);
        return c;
    };
    std::vector<std::size_t> ic = complement(rows_i), jc = complement(cols_j);

    Int lhs = det(adjugate(a).submatrix(rows_i, cols_j));

    unsigned long esum = 0;  // 1-based index sums fix the sign
    for (auto i : ic) esum += i + 1;
    for (auto j : jc) esum += j + 1;
    Int d = det(a);
    Int dpow = rows_i.size() >= 1 ? int_pow(d, rows_i.size() - 1) : Int(1);
    Int rhs = dpow * det(a.transpose().submatrix(ic, jc));
    if (esum % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace monty
