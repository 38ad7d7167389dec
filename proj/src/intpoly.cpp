#include "monty/intpoly.hpp"

#include <algorithm>

namespace monty {

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw std::invalid_argument("degree of zero polynomial");
    return c_.size() - 1;
}

const Int& IntPoly::lc() const {
    if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r = c_;
    for (Int& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * x + c_[i - 1];
    return acc;
}

IntMatrix coeff_rows(std::span<const IntPoly> polys, std::size_t n) {
    if (polys.empty()) return IntMatrix(0, n);  // the 0 x n empty matrix
    for (const IntPoly& f : polys)
        if (!f.is_zero() && f.degree() > n)
            throw std::invalid_argument("coeff_rows: formal degree below actual degree");
    IntMatrix m(polys.size(), n + 1);
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = polys[i].coeff(n - j);
    return m;
}

IntMatrix coeff_rows(std::initializer_list<IntPoly> polys, std::size_t n) {
    return coeff_rows(std::span<const IntPoly>(polys.begin(), polys.size()), n);
}

namespace {

void require_non_constant(const IntPoly& f, const char* who) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument(std::string(who) + ": constant polynomial");
}

// rows x^{k-1} f, ..., f appended to out
void push_shift_block(std::vector<IntPoly>& out, const IntPoly& f, std::size_t k) {
    for (std::size_t i = k; i > 0; --i) out.push_back(f.shifted(i - 1));
}

}  // namespace

IntMatrix sylvester(const IntPoly& f1, const IntPoly& f2) {
    require_non_constant(f1, "sylvester");
    require_non_constant(f2, "sylvester");
    std::size_t d1 = f1.degree(), d2 = f2.degree();
    std::vector<IntPoly> rows;
    push_shift_block(rows, f1, d2);
    push_shift_block(rows, f2, d1);
    return coeff_rows(rows, d1 + d2 - 1);
}

Int resultant(const IntPoly& f1, const IntPoly& f2) { return det(sylvester(f1, f2)); }

IntMatrix bezout(const IntPoly& f1, const IntPoly& f2) {
    require_non_constant(f1, "bezout");
    require_non_constant(f2, "bezout");
    std::size_t d = std::max(f1.degree(), f2.degree());
    std::vector<IntPoly> ps;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Int> u(i + 1), v(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            u[j] = f1.coeff(d - i + j);
            v[j] = f2.coeff(d - i + j);
        }
        IntPoly p = IntPoly(std::move(v)) * f1 - IntPoly(std::move(u)) * f2;
        if (!p.is_zero() && p.degree() > d - 1)
            throw std::logic_error("bezout: cancellation failed");
        ps.push_back(std::move(p));
    }
    return coeff_rows(ps, d - 1);
}

bool det_bezout_identity(const IntPoly& f1, const IntPoly& f2) {
    std::size_t d1 = f1.degree(), d2 = f2.degree();
    std::size_t d = std::max(d1, d2);
    Int lhs = det(bezout(f1, f2));
    Int rhs = int_pow(f1.lc(), d - d2) * int_pow(d % 2 == 0 ? f2.lc() : Int(-f2.lc()), d - d1) *
              resultant(f1, f2);
    if ((d * (d + 1) / 2) % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

IntPoly first_subresultant(const IntPoly& f1, const IntPoly& f2) {
    std::size_t d1 = f1.degree(), d2 = f2.degree();
    if (d2 < 2 || d2 > d1)
        throw std::invalid_argument("first_subresultant: need 2 <= deg f2 <= deg f1");
    std::vector<Int> m = ct_vector(f1, f2, d2);  // (M_{d2,1}, ..., M_{d2,d1+d2-1})
    Int a = m[d1 + d2 - 3], b = m[d1 + d2 - 2];
    if ((d1 + d2 - 1) % 2 == 1) return IntPoly({b, -a});
    return IntPoly({-b, a});
}

IntMatrix s_t_matrix(const IntPoly& f1, const IntPoly& f2, std::size_t t) {
    require_non_constant(f1, "s_t_matrix");
    require_non_constant(f2, "s_t_matrix");
    std::size_t d1 = f1.degree(), d2 = f2.degree();
    if (d2 < 2 || d2 > d1) throw std::invalid_argument("s_t_matrix: need 2 <= deg f2 <= deg f1");
    if (t < d2 || t > d1) throw std::invalid_argument("s_t_matrix: t out of range");
    std::vector<IntPoly> rows;
    push_shift_block(rows, f1, t - 1);
    push_shift_block(rows, f2, d1 - 1);
    return coeff_rows(rows, d1 + t - 2);
}

std::vector<Int> ct_vector(const IntPoly& f1, const IntPoly& f2, std::size_t t) {
    IntMatrix st = s_t_matrix(f1, f2, t);
    std::vector<Int> c(st.cols());
    for (std::size_t i = 0; i < st.cols(); ++i) {
        Int m = det(st.without_column(i));
        c[i] = (i % 2 == 0) ? m : Int(-m);  // (-1)^(1+i) with 1-based i
    }
    return c;
}

Rat skewed_norm_sq(const IntPoly& f, const Rat& s) {
    if (f.is_zero()) throw std::invalid_argument("skewed_norm_sq: zero polynomial");
    if (s <= 0) throw std::invalid_argument("skewed_norm_sq: skew must be positive");
    long d = static_cast<long>(f.degree());
    Rat acc(0);
    for (long i = 0; i <= d; ++i) {
        Int a = f.coeff(i);
        if (a == 0) continue;
        acc += Rat(a * a) * rat_pow(s, 2 * i - d);
    }
    return acc;
}

Rat skewed_vec_norm_sq(std::span<const Int> v, const Rat& s) {
    if (v.empty()) throw std::invalid_argument("skewed_vec_norm_sq: empty vector");
    if (s <= 0) throw std::invalid_argument("skewed_vec_norm_sq: skew must be positive");
    long n = static_cast<long>(v.size()) - 1;
    Rat acc(0);
    for (long j = 0; j <= n; ++j) {
        const Int& a = v[j];  // v[0] carries exponent n
        if (a == 0) continue;
        acc += Rat(a * a) * rat_pow(s, 2 * (n - j) - n);
    }
    return acc;
}

Rat sin2_theta(const IntPoly& f1, const IntPoly& f2, const Rat& s) {
    if (f1.is_zero() || f2.is_zero()) throw std::invalid_argument("sin2_theta: zero row");
    if (s <= 0) throw std::invalid_argument("sin2_theta: skew must be positive");
    std::size_t n = std::max(f1.degree(), f2.degree());
    // rows of (f1(sx), f2(sx)) at formal degree n
    std::vector<Rat> u(n + 1), v(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Rat p = rat_pow(s, static_cast<long>(n - j));
        u[j] = Rat(f1.coeff(n - j)) * p;
        v[j] = Rat(f2.coeff(n - j)) * p;
    }
    Rat uu(0), vv(0), uv(0);
    for (std::size_t j = 0; j <= n; ++j) {
        uu += u[j] * u[j];
        vv += v[j] * v[j];
        uv += u[j] * v[j];
    }
    if (uu == 0 || vv == 0) throw std::invalid_argument("sin2_theta: zero row");
    return 1 - uv * uv / (uu * vv);
}

Int eval_mod(const IntPoly& f, const Int& r, const Int& n) {
    if (n < 2) throw std::invalid_argument("eval_mod: modulus must be >= 2");
    Int acc = 0;
    for (std::size_t i = f.coeffs().size(); i > 0; --i)
        acc = mod_floor(acc * r + f.coeff(i - 1), n);
    return acc;
}

}  // namespace monty
