// Integer polynomials and the polynomial-matrix constructions driving the
// selection method: coefficient-row matrices, Sylvester matrix and
// resultant, Bezout matrix, first subresultant, the S_t minors vector c_t,
// skewed norms and angles. Everything is exact; squared quantities are used
// wherever the underlying norm would involve s^(1/2).

#ifndef MONTY_INTPOLY_HPP
#define MONTY_INTPOLY_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "monty/linalg.hpp"
#include "monty/numeric.hpp"

namespace monty {

// Dense integer polynomial, coefficients stored ascending (a_0..a_d).
// The zero polynomial has no coefficients; its degree is not a number.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending);
    IntPoly(std::initializer_list<Int> ascending)
        : IntPoly(std::vector<Int>(ascending)) {}

    bool is_zero() const { return c_.empty(); }
    // Degree of a nonzero polynomial; throws for the zero polynomial rather
    // than handing out a sentinel that could be compared numerically.
    std::size_t degree() const;
    const Int& lc() const;
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const = default;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly shifted(std::size_t k) const;  // multiply by x^k

    Int eval(const Int& x) const;

private:
    std::vector<Int> c_;
};

// m x (n+1) matrix whose row i holds the coefficients of polys[i] at formal
// degree n, descending powers left to right. The empty list gives the 0 x n
// empty matrix. Requires n >= deg of every input polynomial.
IntMatrix coeff_rows(std::span<const IntPoly> polys, std::size_t n);
IntMatrix coeff_rows(std::initializer_list<IntPoly> polys, std::size_t n);

// Classical elimination matrix of two non-constant polynomials.
IntMatrix sylvester(const IntPoly& f1, const IntPoly& f2);
Int resultant(const IntPoly& f1, const IntPoly& f2);

// d x d symmetric Bezout matrix, d = max(deg f1, deg f2).
IntMatrix bezout(const IntPoly& f1, const IntPoly& f2);

// det Bez(f1,f2) == sign * lc(f1)^(d-deg f2) * ((-1)^d lc(f2))^(d-deg f1) * res.
bool det_bezout_identity(const IntPoly& f1, const IntPoly& f2);

// Degree <= 1 polynomial from the two rightmost signed minors of S_{deg f2};
// nonzero exactly when res == 0 came from a degree-1 common factor.
IntPoly first_subresultant(const IntPoly& f1, const IntPoly& f2);

// (deg f1 + t - 2) x (deg f1 + t - 1) stack of shifted copies of f1, f2;
// requires 2 <= deg f2 <= t <= deg f1.
IntMatrix s_t_matrix(const IntPoly& f1, const IntPoly& f2, std::size_t t);

// Signed maximal minors of S_t, descending GP order (M_{t,1},...); satisfies
// S_t * c_t^T == 0. Zero vector when S_{deg f2} is rank-deficient.
std::vector<Int> ct_vector(const IntPoly& f1, const IntPoly& f2, std::size_t t);

// ||f||^2_{2,s} = sum a_i^2 s^(2i-d); requires f nonzero and s > 0.
Rat skewed_norm_sq(const IntPoly& f, const Rat& s);

// Same weighting for a descending (n+1)-vector: sum v_i^2 s^(2i-n).
Rat skewed_vec_norm_sq(std::span<const Int> descending, const Rat& s);

// sin^2 of the angle between the rows of (f1(sx), f2(sx)); exact in [0,1].
Rat sin2_theta(const IntPoly& f1, const IntPoly& f2, const Rat& s);

// f(r) mod N in [0, N); requires N >= 2.
Int eval_mod(const IntPoly& f, const Int& r, const Int& n);

}  // namespace monty

#endif
