// Named, reportable check batteries for every identity and bound the
// library is built around. All comparisons are exact: inequalities with
// fractional exponents are raised to a common integer power first, so no
// floating point appears anywhere on the verification path.

#ifndef MONTY_VERIFY_HPP
#define MONTY_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "monty/selection.hpp"

namespace monty {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    // exact witness values (decimal / "num/den" strings), plus skip reasons
    std::vector<std::pair<std::string, std::string>> witnesses;
};

struct VerifyReport {
    std::string instance;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t count(CheckStatus s) const;
};

struct VerifyConfig {
    std::vector<Rat> skews = {Rat(1), Rat(2), make_rat(7, 5), make_rat(1, 3)};
    // empty = all batteries; names: theorem1 theorem2 bounds gpvol reduction
    // divisibility structural
    std::vector<std::string> batteries;
    unsigned long seed = 0;
};

// GP-construction properties 1-5 for one t: GP-ness with the given ratio,
// gcd(c_t0, N) = 1, full-rank C_t, kernel membership of both coefficient
// vectors, and the two size bounds in squared form at each skew. Hypothesis
// failures mark the report and skip the property checks.
VerifyReport check_theorem1(const IntPoly& f1, const IntPoly& f2, const Int& modulus,
                            const Int& root, std::size_t t, const std::vector<Rat>& skews);

// Pair-from-GP properties 1-4: degree, common root, coprimality plus both
// resultant/delta formulas, and the squared norm sandwich at each skew.
VerifyReport check_theorem2(const GeometricProgression& gp, const PolyPair& pair,
                            const std::vector<Rat>& skews);

// N <= |res| and the squared sine upper bound at each skew.
VerifyReport check_resultant_bounds(const PolyPair& pair, const std::vector<Rat>& skews);

// Volume factorisation of the k-th sub-Hankel of C_t at S = identity.
VerifyReport check_gp_vol_identity(const IntPoly& f1, const IntPoly& f2, std::size_t t,
                                   std::size_t k);

// Degree of gcd(f1 mod p, f2 mod p) over F_p; requires p prime and both
// reductions nonzero.
std::size_t gcd_degree_mod_p(const IntPoly& f1, const IntPoly& f2, const Int& p);

// For p prime with p not dividing lc(f1) lc(f2): p | delta(S_{deg f2}) holds
// exactly when the reductions share a factor of degree > 1.
bool modular_common_factor_criterion(const IntPoly& f1, const IntPoly& f2, const Int& p);

struct VerifyInstance {
    std::string id;
    std::optional<GeometricProgression> gp;
    std::optional<PolyPair> pair;
    std::optional<DegeneratePair> degenerate;
    // caller-supplied results folded into this instance's report (e.g. the
    // CLI's record-consistency check); filtered and sorted like the rest
    std::vector<CheckResult> extra_checks;
};

struct VerifyBatch {
    std::vector<VerifyReport> reports;
    std::size_t passed = 0, failed = 0, skipped = 0;
    bool ok() const { return failed == 0; }
};

// Runs every enabled battery applicable to each instance; reports ordered by
// instance id then check name; deterministic given (instances, config).
VerifyBatch batch_verify(const std::vector<VerifyInstance>& instances, const VerifyConfig& config);

// Deterministic seeded generators for battery instances.
class InstanceGen {
public:
    explicit InstanceGen(unsigned long seed);

    struct PlantedPair {
        IntPoly f1, f2;
        Int modulus;
        Int root;
    };

    // coprime pair, degrees exactly (d1, d2), upper coefficients in
    // [-30, 30], constant terms adjusted so a planted r is a common root
    // mod a random odd 40-64 bit N; theorem hypotheses verified.
    PlantedPair planted_pair(std::size_t d1, std::size_t d2);

    GeometricProgression family_d2(GPParamsD2* out_params = nullptr);
    GeometricProgression family_d3(GPParamsD3* out_params = nullptr);

    Int random_odd_modulus(unsigned min_bits = 40, unsigned max_bits = 64);
    Int below(const Int& bound);          // uniform in [0, bound)
    long small_signed(long lo, long hi);  // uniform in [lo, hi]

private:
    gmp_randclass rng_;
    unsigned long mix_ = 0;
};

// The suite's own battery: `count` mixed instances (both parametric
// families, pipeline pairs attached), deterministic per seed.
std::vector<VerifyInstance> default_battery(unsigned long seed, std::size_t count);

}  // namespace monty

#endif
