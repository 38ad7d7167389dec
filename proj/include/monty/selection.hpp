// The selection pipeline: Hankel stack of a geometric progression, the
// 2-dimensional integer kernel of its sub-Hankel, skewed Lagrange reduction
// of that kernel, and the resulting polynomial pair with exact metadata.

#ifndef MONTY_SELECTION_HPP
#define MONTY_SELECTION_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monty/gp.hpp"
#include "monty/intpoly.hpp"
#include "monty/linalg.hpp"

namespace monty {

// Hankel-structured matrix from a defining sequence, top-left entry first:
// out(i,j) = seq[i+j], so seq.size() must equal rows + cols - 1.
IntMatrix hankel_from_seq(std::span<const Int> seq, std::size_t rows, std::size_t cols);

// The matrices the method reads off a length 2d-1 progression.
struct HankelStack {
    GeometricProgression gp;
    std::size_t d = 0;

    IntMatrix c_matrix() const;              // d x d
    IntMatrix partial(std::size_t k) const;  // (d-k) x (d+k), k in [0, d-1]
    IntMatrix partial_hat() const;           // (d-1) x d, first column of partial(1) dropped
};

HankelStack hankel_stack(GeometricProgression gp);

struct PolyPair {
    IntPoly f1, f2;  // deg f1 >= deg f2, lc > 0 for both
    Int modulus;
    Int root;
    Rat skew;
    Int resultant;
    Int delta_partial, delta_hat, delta_c;
    Rat norm1_sq, norm2_sq, sin2;
};

struct DegeneratePair {
    IntPoly f1, f2;
    Int modulus;
    Int root;
    Rat skew;
    std::string reason;
};

struct DegenerateGP {
    Int modulus;
    std::string reason;
};

class DegenerateGPError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using SelectOutcome = std::variant<PolyPair, DegeneratePair, FactorFound, DegenerateGP>;

// Basis of the 2-dimensional integer kernel of partial(1); descending
// coefficient vectors of length d+1. Requires C nonsingular and
// gcd(c_0..c_{d-2}, N) = 1.
std::pair<std::vector<Int>, std::vector<Int>> kernel_pair(const HankelStack& stack);

// Gauss reduction of the rank-2 lattice under the skewed inner product
// (coordinate of exponent i weighted by s^i); unimodular, exact.
std::pair<std::vector<Int>, std::vector<Int>> lagrange_reduce_skewed(
    std::vector<Int> v1, std::vector<Int> v2, const Rat& s);

// Full pipeline for one GP at one skew.
SelectOutcome polys_from_gp(const GeometricProgression& gp, const Rat& s);

// |res| * delta(dC)^deg f2 * delta(dC-hat)^(d-deg f2) == |det C|^(d-1) and
// delta(S_d) * delta(dC)^(d-1) == delta(c) * |det C|^(d-2), both exactly.
bool resultant_formula(const PolyPair& pair, const HankelStack& stack);

// |lc(f1)| * delta(dC) == delta(dC-hat) when deg f2 < deg f1; the quotient
// divides lc(f1) when the degrees tie.
bool leading_coeff_identity(const PolyPair& pair, const HankelStack& stack);

struct SkewSearchResult {
    Rat skew;
    SelectOutcome outcome;
};

// Best grid point under s^(deg f1 + deg f2 - 2d) ||f1||^2 ||f2||^2, ties
// toward smaller s; FactorFound short-circuits.
SkewSearchResult skew_search(const GeometricProgression& gp, std::vector<Rat> grid);

// Descending coefficient vector (length d+1) <-> polynomial helpers.
IntPoly poly_from_descending(std::span<const Int> v);
std::vector<Int> poly_to_descending(const IntPoly& f, std::size_t formal_degree);

}  // namespace monty

#endif
