// Geometric progressions modulo N: validation and ratio recovery, the
// minors-based construction from a polynomial pair, and the parametric
// length-3 / length-5 families with a small-parameter search.

#ifndef MONTY_GP_HPP
#define MONTY_GP_HPP

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "monty/intpoly.hpp"
#include "monty/numeric.hpp"

namespace monty {

// c stored descending: c[0] = c_{len-1}, ..., c.back() = c_0.
struct GeometricProgression {
    std::vector<Int> c;
    Int modulus;
    std::optional<Int> ratio;  // in [0, modulus)

    std::size_t length() const { return c.size(); }
    const Int& entry(std::size_t i) const { return c[c.size() - 1 - i]; }  // c_i
};

// A nontrivial factor of the modulus surfaced by a gcd; success, not failure.
struct FactorFound {
    Int modulus;
    Int factor;
};

class NotAGPError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using GpOutcome = std::variant<GeometricProgression, FactorFound>;

// Checks the defining congruences c_i == c_0 r^i (mod N); recovers the ratio
// from the lowest index with a unit gcd when r is absent. A nontrivial
// proper gcd along the way becomes FactorFound; a failed congruence throws
// NotAGPError.
GpOutcome validate_gp(std::vector<Int> c_descending, const Int& modulus,
                      std::optional<Int> ratio = std::nullopt);

// c_t(f1, f2) as a validated GP; requires coprime polynomials with
// 2 <= deg f2 <= t <= deg f1 and a common root mod N, and that
// lc(f1) * delta(S_{deg f2}) is prime to N (anything in between factors N).
GpOutcome gp_from_polys(const IntPoly& f1, const IntPoly& f2, std::size_t t, const Int& modulus);

struct GPParamsD2 {
    Int a, k, p, m;
};
struct GPParamsD3 {
    Int a, k, p, m;
};

// [(a m^2 - k N)/p, a m, a p]; needs gcd(m,p) = 1, gcd(a,N) = 1, p | am^2-kN.
GpOutcome build_gp_d2(const GPParamsD2& params, const Int& modulus);

// [m(am^3-kN)/p^2, (am^3-kN)/p, am^2, amp, ap^2]; p^2 | am^3-kN.
GpOutcome build_gp_d3(const GPParamsD3& params, const Int& modulus);

struct GpSearchOptions {
    std::size_t count = 10;
    Int size_target = 0;  // 0 = no cap on max |c_i|
    unsigned long seed = 0;
    std::vector<Rat> skews = {Rat(1), Rat(2), make_rat(7, 5), make_rat(1, 3)};
    unsigned long k_max = 8;
    unsigned long p_max = 50;
};

// Parameter tuples for the length-3 family, ranked by the best squared
// optimality ratio ||c||^2_{2,1/s} / N over the skew grid. Deterministic for
// a fixed (N, options) including the seed.
std::vector<GPParamsD2> search_gp_d2(const Int& modulus, const GpSearchOptions& opts);

// Length-5 analogue via cube-root lifts mod p^2; valid tuples, small norms,
// no record-hunting.
std::vector<GPParamsD3> search_gp_d3(const Int& modulus, const GpSearchOptions& opts);

}  // namespace monty

#endif
