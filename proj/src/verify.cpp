#include "monty/verify.hpp"

#include <algorithm>
#include <map>

namespace monty {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status != CheckStatus::fail; });
}

std::size_t VerifyReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [&](const CheckResult& c) { return c.status == s; }));
}

namespace {

using Witnesses = std::vector<std::pair<std::string, std::string>>;

CheckResult make_check(std::string name, bool ok, Witnesses w = {}) {
    return CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(w)};
}

CheckResult make_skip(std::string name, std::string reason) {
    return CheckResult{std::move(name), CheckStatus::skipped, {{"reason", std::move(reason)}}};
}

// quantity `lhs` against bound `rhs`; upper: lhs <= rhs, lower: lhs >= rhs.
// Slack ratio rhs/lhs is >= 1 for passing upper bounds, <= 1 for lower.
CheckResult bound_check(std::string name, const Rat& lhs, const Rat& rhs, bool upper) {
    bool ok = upper ? lhs <= rhs : lhs >= rhs;
    Witnesses w = {{"lhs_sq", to_string(lhs)}, {"rhs_sq", to_string(rhs)}};
    if (lhs != 0) w.emplace_back("slack", to_string(Rat(rhs / lhs)));
    return make_check(std::move(name), ok, std::move(w));
}

Int delta_of_vector(const std::vector<Int>& v) {
    return abs(int_gcd(std::span<const Int>(v)));
}

std::string skew_tag(const Rat& s) { return to_string(s); }

}  // namespace

VerifyReport check_theorem1(const IntPoly& f1, const IntPoly& f2, const Int& modulus,
                            const Int& root, std::size_t t, const std::vector<Rat>& skews) {
    VerifyReport rep;
    rep.instance = "theorem1";
    const std::string tag = "t1.t" + std::to_string(t) + ".";

    auto skip_all = [&](const std::string& reason) {
        rep.checks.push_back(make_skip(tag + "p1-gp-ratio", reason));
        rep.checks.push_back(make_skip(tag + "p2-gcd-c0", reason));
        rep.checks.push_back(make_skip(tag + "p3-full-rank", reason));
        rep.checks.push_back(make_skip(tag + "p4-kernel", reason));
        for (const Rat& s : skews) {
            rep.checks.push_back(make_skip(tag + "p5-upper@" + skew_tag(s), reason));
            rep.checks.push_back(make_skip(tag + "p5-lower@" + skew_tag(s), reason));
        }
        rep.checks.push_back(make_skip(tag + "gcd-refinement", reason));
    };

    // hypotheses: degree ranges, coprimality, common root, gcd condition
    std::string bad;
    if (f1.is_zero() || f2.is_zero() || f1.degree() < 2 || f2.degree() < 2 ||
        f2.degree() > f1.degree())
        bad = "need 2 <= deg f2 <= deg f1";
    std::size_t d = bad.empty() ? f1.degree() : 0;
    std::size_t d2 = bad.empty() ? f2.degree() : 0;
    if (bad.empty() && (t < d2 || t > d)) bad = "t out of range";
    Int res;
    if (bad.empty()) {
        res = resultant(f1, f2);
        if (res == 0) bad = "res = 0";
    }
    if (bad.empty() && (eval_mod(f1, root, modulus) != 0 || eval_mod(f2, root, modulus) != 0))
        bad = "r is not a common root";
    Int hyp_gcd;
    if (bad.empty()) {
        hyp_gcd = int_gcd(mod_floor(f1.lc() * delta(s_t_matrix(f1, f2, d2)), modulus), modulus);
        if (hyp_gcd != 1) bad = "gcd(lc(f1) delta(S_d2), N) = " + to_string(hyp_gcd);
    }
    if (!bad.empty()) {
        rep.checks.push_back(make_check(tag + "hypotheses", false, {{"reason", bad}}));
        skip_all("hypotheses failed");
        return rep;
    }
    rep.checks.push_back(make_check(tag + "hypotheses", true));

    std::vector<Int> ct = ct_vector(f1, f2, t);
    const Int& ct0 = ct.back();

    bool gp_ok = true;
    try {
        validate_gp(ct, modulus, root);
    } catch (const NotAGPError&) {
        gp_ok = false;
    }
    rep.checks.push_back(make_check(tag + "p1-gp-ratio", gp_ok, {{"ratio", to_string(root)}}));

    rep.checks.push_back(make_check(tag + "p2-gcd-c0", int_gcd(ct0, modulus) == 1,
                                    {{"c_t0", to_string(ct0)}}));

    Int dct = delta(hankel_from_seq(ct, t, d));
    rep.checks.push_back(make_check(tag + "p3-full-rank", dct != 0, {{"delta_Ct", to_string(dct)}}));

    IntMatrix pct = hankel_from_seq(ct, t - 1, d + 1);
    bool kernel_ok = true;
    for (const IntPoly* f : {&f1, &f2}) {
        std::vector<Int> v = poly_to_descending(*f, d);
        for (std::size_t i = 0; i < pct.rows(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j <= d; ++j) acc += pct.at(i, j) * v[j];
            if (acc != 0) kernel_ok = false;
        }
    }
    rep.checks.push_back(make_check(tag + "p4-kernel", kernel_ok));

    for (const Rat& s : skews) {
        Rat nct = skewed_vec_norm_sq(ct, 1 / s);
        Rat upper = rat_pow(sin2_theta(f1, f2, s) * skewed_norm_sq(f1, s), t - 1) *
                    rat_pow(rat_pow(s, static_cast<long>(d2) - static_cast<long>(t)) *
                                skewed_norm_sq(f2, s),
                            d - 1);
        rep.checks.push_back(bound_check(tag + "p5-upper@" + skew_tag(s), nct, upper, true));

        // lower bound raised to the t-th power to clear the 1/t exponents
        Rat lower = rat_pow(s, static_cast<long>(t) * (static_cast<long>(t) - static_cast<long>(d))) *
                    rat_pow(rat_pow(s, static_cast<long>(d2)) * Rat(f2.lc()), 2 * (d - t)) *
                    Rat(int_pow(int_pow(f1.lc(), t - d2) * res, 2 * (t - 1)));
        rep.checks.push_back(
            bound_check(tag + "p5-lower@" + skew_tag(s), rat_pow(nct, static_cast<long>(t)), lower,
                        false));
    }

    rep.checks.push_back(make_check(
        tag + "gcd-refinement",
        int_gcd(ct0, modulus) == int_gcd(int_pow(f1.lc(), t - d2), modulus)));
    return rep;
}

VerifyReport check_theorem2(const GeometricProgression& gp, const PolyPair& pair,
                            const std::vector<Rat>& skews) {
    VerifyReport rep;
    rep.instance = "theorem2";
    HankelStack stack = hankel_stack(gp);
    const std::size_t d = stack.d, d2 = pair.f2.degree();
    const Int& n = gp.modulus;

    rep.checks.push_back(make_check("t2.p1-degree", pair.f1.degree() == d,
                                    {{"deg_f1", std::to_string(pair.f1.degree())}}));
    rep.checks.push_back(make_check(
        "t2.p2-common-root",
        eval_mod(pair.f1, pair.root, n) == 0 && eval_mod(pair.f2, pair.root, n) == 0,
        {{"root", to_string(pair.root)}}));
    rep.checks.push_back(
        make_check("t2.p3-coprime", pair.resultant != 0, {{"res", to_string(pair.resultant)}}));

    Int det_c = abs(det(stack.c_matrix()));
    bool res_ok = abs(pair.resultant) * int_pow(pair.delta_partial, d2) *
                      int_pow(pair.delta_hat, d - d2) ==
                  int_pow(det_c, d - 1);
    rep.checks.push_back(make_check("t2.p3-res-formula", res_ok,
                                    {{"res", to_string(pair.resultant)},
                                     {"det_C", to_string(det_c)},
                                     {"delta_partial", to_string(pair.delta_partial)},
                                     {"delta_hat", to_string(pair.delta_hat)}}));
    Int delta_sd = delta(s_t_matrix(pair.f1, pair.f2, d));
    bool sd_ok = delta_sd * int_pow(pair.delta_partial, d - 1) ==
                 pair.delta_c * int_pow(det_c, d - 2);
    rep.checks.push_back(make_check("t2.p3-delta-formula", sd_ok,
                                    {{"delta_Sd", to_string(delta_sd)},
                                     {"delta_c", to_string(pair.delta_c)}}));

    for (const Rat& s : skews) {
        Rat mid = rat_pow(s, static_cast<long>(d2) - static_cast<long>(d)) *
                  sin2_theta(pair.f1, pair.f2, s) * skewed_norm_sq(pair.f1, s) *
                  skewed_norm_sq(pair.f2, s);
        Rat nc = skewed_vec_norm_sq(gp.c, 1 / s) / Rat(pair.delta_c * pair.delta_c);
        rep.checks.push_back(
            bound_check("t2.p4-left@" + skew_tag(s), nc, rat_pow(mid, d - 1), true));
        Rat rhs = rat_pow(nc, d - 1) / Rat(int_pow(n, 2 * (d - 2)));
        rep.checks.push_back(bound_check("t2.p4-right@" + skew_tag(s), mid, rhs, true));
    }
    return rep;
}

VerifyReport check_resultant_bounds(const PolyPair& pair, const std::vector<Rat>& skews) {
    VerifyReport rep;
    rep.instance = "resultant-bounds";
    Int ares = abs(pair.resultant);
    rep.checks.push_back(bound_check("resbound.lower", Rat(ares), Rat(pair.modulus), false));
    std::size_t d1 = pair.f1.degree(), d2 = pair.f2.degree();
    for (const Rat& s : skews) {
        Rat rhs = rat_pow(sin2_theta(pair.f1, pair.f2, s), std::min(d1, d2)) *
                  rat_pow(skewed_norm_sq(pair.f1, s), d2) *
                  rat_pow(skewed_norm_sq(pair.f2, s), d1);
        rep.checks.push_back(
            bound_check("resbound.upper@" + skew_tag(s), Rat(ares * ares), rhs, true));
    }
    return rep;
}

VerifyReport check_gp_vol_identity(const IntPoly& f1, const IntPoly& f2, std::size_t t,
                                   std::size_t k) {
    std::size_t d = f1.degree(), d2 = f2.degree();
    if (t < d2 || t > d) throw std::invalid_argument("check_gp_vol_identity: t out of range");
    if (k >= t) throw std::invalid_argument("check_gp_vol_identity: k out of range");
    VerifyReport rep;
    rep.instance = "gp-vol";

    std::vector<Int> ct = ct_vector(f1, f2, t);
    Int lhs = vol2(hankel_from_seq(ct, t - k, d + k));

    Int factor = int_pow(int_pow(f1.lc(), t - d2) * resultant(f1, f2), 2 * (t - k - 1));
    std::vector<IntPoly> rows;
    for (std::size_t i = k; i > 0; --i) rows.push_back(f1.shifted(i - 1));
    for (std::size_t i = d - t + k; i > 0; --i) rows.push_back(f2.shifted(i - 1));
    Int rhs = factor * vol2(coeff_rows(rows, d + k - 1));

    rep.checks.push_back(make_check(
        "gpvol.t" + std::to_string(t) + "k" + std::to_string(k), lhs == rhs,
        {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}}));
    return rep;
}

namespace {

std::vector<Int> poly_mod_p(const IntPoly& f, const Int& p) {
    std::vector<Int> v;
    if (f.is_zero()) return v;
    v.resize(f.degree() + 1);
    for (std::size_t i = 0; i <= f.degree(); ++i) v[i] = mod_floor(f.coeff(i), p);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

std::size_t gcd_degree_mod_p(const IntPoly& f1, const IntPoly& f2, const Int& p) {
    if (p < 2) throw std::invalid_argument("gcd_degree_mod_p: p must be >= 2");
    std::vector<Int> a = poly_mod_p(f1, p), b = poly_mod_p(f2, p);
    if (a.empty() || b.empty())
        throw std::invalid_argument("gcd_degree_mod_p: zero reduction");
    while (!b.empty()) {
        // a mod b over F_p
        Int inv;
        if (!invert_mod(inv, b.back(), p))
            throw std::invalid_argument("gcd_degree_mod_p: p not prime");
        while (a.size() >= b.size() && !a.empty()) {
            Int q = mod_floor(a.back() * inv, p);
            std::size_t shift = a.size() - b.size();
            if (q != 0)
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = mod_floor(a[shift + i] - q * b[i], p);
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

bool modular_common_factor_criterion(const IntPoly& f1, const IntPoly& f2, const Int& p) {
    Int lc_prod = f1.lc() * f2.lc();
    if (mpz_divisible_p(lc_prod.get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("criterion requires p not dividing lc(f1) lc(f2)");
    Int d_s = delta(s_t_matrix(f1, f2, f2.degree()));
    bool divides = mpz_divisible_p(d_s.get_mpz_t(), p.get_mpz_t()) != 0;
    bool shares = gcd_degree_mod_p(f1, f2, p) > 1;
    return divides == shares;
}

namespace {

bool battery_enabled(const VerifyConfig& config, const std::string& check_name) {
    if (config.batteries.empty()) return true;
    static const std::map<std::string, std::string> prefix_to_battery = {
        {"t1", "theorem1"},     {"t2", "theorem2"},      {"resbound", "bounds"},
        {"gpvol", "gpvol"},     {"reduce", "reduction"}, {"div", "divisibility"},
        {"struct", "structural"}};
    auto dot = check_name.find('.');
    std::string prefix = check_name.substr(0, dot);
    auto it = prefix_to_battery.find(prefix);
    std::string battery = it == prefix_to_battery.end() ? prefix : it->second;
    return std::find(config.batteries.begin(), config.batteries.end(), battery) !=
           config.batteries.end();
}

void merge_checks(VerifyReport& into, VerifyReport from) {
    for (CheckResult& c : from.checks) into.checks.push_back(std::move(c));
}

// checks that need pair only
void pair_level_checks(VerifyReport& rep, const PolyPair& pair, const VerifyConfig& config) {
    const IntPoly &f1 = pair.f1, &f2 = pair.f2;
    std::size_t d = f1.degree(), d2 = f2.degree();

    for (std::size_t t = d2; t <= d; ++t)
        merge_checks(rep, check_theorem1(f1, f2, pair.modulus, pair.root, t, config.skews));
    merge_checks(rep, check_resultant_bounds(pair, config.skews));
    for (std::size_t t = d2; t <= d; ++t)
        for (std::size_t k = 0; k < t; ++k) merge_checks(rep, check_gp_vol_identity(f1, f2, t, k));

    rep.checks.push_back(make_check("struct.det-bezout", det_bezout_identity(f1, f2)));

    std::vector<Int> cd = ct_vector(f1, f2, d);
    IntMatrix expected = hankel_from_seq(cd, d, d);
    if ((d * (d - 1) / 2) % 2 == 1)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) expected.at(i, j) = -expected.at(i, j);
    rep.checks.push_back(make_check("struct.adj-bez", adjugate(bezout(f1, f2)) == expected));

    for (const Rat& s : config.skews) {
        bool vol_ok = true;
        for (std::size_t t = d2; t <= d; ++t) {
            std::vector<Int> ct = ct_vector(f1, f2, t);
            IntMatrix st = s_t_matrix(f1, f2, t);
            std::vector<Rat> w(st.cols());
            long n = static_cast<long>(d + t) - 2;
            for (std::size_t j = 0; j < st.cols(); ++j)
                w[j] = rat_pow(s, n - 2 * static_cast<long>(j));
            if (vol2_weighted(st, w) != skewed_vec_norm_sq(ct, 1 / s)) vol_ok = false;
        }
        rep.checks.push_back(make_check("struct.volStS@" + skew_tag(s), vol_ok));
    }

    Int d_s2 = delta(s_t_matrix(f1, f2, d2));
    rep.checks.push_back(make_check(
        "div.sres-res", mpz_divisible_p(pair.resultant.get_mpz_t(), d_s2.get_mpz_t()) != 0,
        {{"delta_S_d2", to_string(d_s2)}, {"res", to_string(pair.resultant)}}));
    IntPoly sres = first_subresultant(f1, f2);
    bool sres_ok = mpz_divisible_p(sres.coeff(0).get_mpz_t(), d_s2.get_mpz_t()) &&
                   mpz_divisible_p(sres.coeff(1).get_mpz_t(), d_s2.get_mpz_t());
    rep.checks.push_back(make_check("div.sres-coeffs", sres_ok));
}

// checks that need the source GP as well
void gp_level_checks(VerifyReport& rep, const GeometricProgression& gp, const PolyPair& pair,
                     const VerifyConfig& config) {
    HankelStack stack = hankel_stack(gp);
    const std::size_t d = stack.d;
    const Int& n = gp.modulus;

    merge_checks(rep, check_theorem2(gp, pair, config.skews));

    rep.checks.push_back(bound_check("reduce.sin2", pair.sin2, make_rat(3, 4), false));
    {
        const Rat& s = pair.skew;
        long e = static_cast<long>(pair.f1.degree() + pair.f2.degree()) - 2 * static_cast<long>(d);
        Rat lhs = rat_pow(s, e) * pair.norm1_sq * pair.norm2_sq;
        Rat rhs = make_rat(4, 3) * rat_pow(skewed_vec_norm_sq(gp.c, 1 / s), d - 1) /
                  Rat(int_pow(n, 2 * (d - 2)));
        rep.checks.push_back(bound_check("reduce.gp-bound", lhs, rhs, true));
    }

    if (int_gcd(pair.delta_c, n) == 1) {
        Int need = int_pow(pair.delta_c, d - 1) * int_pow(n, d - 2);
        rep.checks.push_back(make_check(
            "div.deltaN",
            mpz_divisible_p(pair.delta_partial.get_mpz_t(), need.get_mpz_t()) != 0,
            {{"delta_partial", to_string(pair.delta_partial)}, {"divisor", to_string(need)}}));
    } else {
        rep.checks.push_back(make_skip("div.deltaN", "gcd(delta(c), N) != 1"));
    }

    {
        IntMatrix adj_c = adjugate(stack.c_matrix());
        IntMatrix bez = bezout(pair.f1, pair.f2);
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < d && (plus || minus); ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Int want = pair.delta_partial * bez.at(i, j);
                if (adj_c.at(i, j) != want) plus = false;
                if (adj_c.at(i, j) != -want) minus = false;
            }
        rep.checks.push_back(make_check("struct.adjC", plus || minus));
    }

    {
        std::vector<Int> cd = ct_vector(pair.f1, pair.f2, d);
        Int dcd = delta_of_vector(cd);
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < cd.size(); ++i) {
            Int l = gp.c[i] * dcd;
            Int r = cd[i] * pair.delta_c;
            if (l != r) plus = false;
            if (l != -r) minus = false;
        }
        rep.checks.push_back(make_check("struct.gp-kernel", plus || minus));
    }

    rep.checks.push_back(make_check("struct.lc-identity", leading_coeff_identity(pair, stack)));

    Int det_c = abs(det(stack.c_matrix()));
    for (const Rat& s : config.skews) {
        Rat norm_c = skewed_vec_norm_sq(gp.c, 1 / s);
        Rat lhs = norm_c / Rat(pair.delta_c * pair.delta_c);
        Rat k2 = make_rat(int_pow(det_c, 2 * (d - 2)), int_pow(pair.delta_partial, 2 * (d - 1)));
        Rat mid = k2 * norm_c;
        Rat rhs = rat_pow(rat_pow(s, static_cast<long>(pair.f2.degree()) - static_cast<long>(d)) *
                              sin2_theta(pair.f1, pair.f2, s) * skewed_norm_sq(pair.f1, s) *
                              skewed_norm_sq(pair.f2, s),
                          d - 1);
        rep.checks.push_back(
            make_check("struct.poly-size@" + skew_tag(s), lhs <= mid && mid <= rhs,
                       {{"lhs_sq", to_string(lhs)},
                        {"mid_sq", to_string(mid)},
                        {"rhs_sq", to_string(rhs)}}));
    }
}

void degenerate_checks(VerifyReport& rep, const DegeneratePair& dp) {
    const std::string reason = dp.reason.empty() ? "deg f2 < 2" : dp.reason;
    for (const char* name :
         {"t2.p1-degree", "t2.p2-common-root", "t2.p3-coprime", "t2.p3-res-formula",
          "t2.p3-delta-formula", "reduce.sin2", "reduce.gp-bound", "div.deltaN"})
        rep.checks.push_back(make_skip(name, reason));
}

}  // namespace

VerifyBatch batch_verify(const std::vector<VerifyInstance>& instances,
                         const VerifyConfig& config) {
    VerifyBatch batch;
    for (const VerifyInstance& inst : instances) {
        VerifyReport rep;
        rep.instance = inst.id;

        std::optional<PolyPair> pair = inst.pair;
        std::optional<DegeneratePair> degenerate = inst.degenerate;
        if (!pair && !degenerate && inst.gp) {
            Rat s = config.skews.empty() ? Rat(1) : config.skews.front();
            SelectOutcome out = polys_from_gp(*inst.gp, s);
            if (auto* p = std::get_if<PolyPair>(&out))
                pair = std::move(*p);
            else if (auto* dp = std::get_if<DegeneratePair>(&out))
                degenerate = std::move(*dp);
            else if (auto* ff = std::get_if<FactorFound>(&out))
                rep.checks.push_back(
                    make_skip("pipeline", "factor found: " + to_string(ff->factor)));
            else
                rep.checks.push_back(
                    make_skip("pipeline", std::get<DegenerateGP>(out).reason));
        }

        if (pair) {
            pair_level_checks(rep, *pair, config);
            if (inst.gp) gp_level_checks(rep, *inst.gp, *pair, config);
        } else if (degenerate) {
            degenerate_checks(rep, *degenerate);
        }
        for (const CheckResult& c : inst.extra_checks) rep.checks.push_back(c);

        std::erase_if(rep.checks,
                      [&](const CheckResult& c) { return !battery_enabled(config, c.name); });
        std::sort(rep.checks.begin(), rep.checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        batch.passed += rep.count(CheckStatus::pass);
        batch.failed += rep.count(CheckStatus::fail);
        batch.skipped += rep.count(CheckStatus::skipped);
        batch.reports.push_back(std::move(rep));
    }
    std::stable_sort(batch.reports.begin(), batch.reports.end(),
                     [](const VerifyReport& a, const VerifyReport& b) {
                         return a.instance < b.instance;
                     });
    return batch;
}

InstanceGen::InstanceGen(unsigned long seed) : rng_(gmp_randinit_mt) {
    rng_.seed(seed);
    mix_ = seed * 0x9e3779b97f4a7c15ull + 1;
}

Int InstanceGen::below(const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("below: bound must be positive");
    return rng_.get_z_range(bound);
}

long InstanceGen::small_signed(long lo, long hi) {
    return lo + static_cast<long>(below(Int(hi - lo + 1)).get_si());
}

Int InstanceGen::random_odd_modulus(unsigned min_bits, unsigned max_bits) {
    unsigned bits = min_bits + static_cast<unsigned>(below(Int(max_bits - min_bits + 1)).get_ui());
    Int n = rng_.get_z_bits(bits);
    mpz_setbit(n.get_mpz_t(), bits - 1);
    mpz_setbit(n.get_mpz_t(), 0);
    return n;
}

InstanceGen::PlantedPair InstanceGen::planted_pair(std::size_t d1, std::size_t d2) {
    if (d2 < 2 || d2 > d1) throw std::invalid_argument("planted_pair: need 2 <= d2 <= d1");
    while (true) {
        Int n = random_odd_modulus();
        Int r = below(n - 1) + 1;
        auto draw = [&](std::size_t deg) {
            std::vector<Int> c(deg + 1);
            for (std::size_t i = 1; i <= deg; ++i) c[i] = small_signed(-30, 30);
            while (c[deg] == 0) c[deg] = small_signed(-30, 30);
            // constant term planted so that r becomes a root mod n
            std::vector<Int> head_coeffs = c;
            IntPoly head(std::move(head_coeffs));
            Int a0 = mod_floor(-head.eval(r), n);
            if (2 * a0 > n) a0 -= n;
            c[0] = a0;
            return IntPoly(std::move(c));
        };
        IntPoly f1 = draw(d1), f2 = draw(d2);
        if (resultant(f1, f2) == 0) continue;
        Int hyp = int_gcd(mod_floor(f1.lc() * delta(s_t_matrix(f1, f2, d2)), n), n);
        if (hyp != 1) continue;
        return {std::move(f1), std::move(f2), std::move(n), std::move(r)};
    }
}

GeometricProgression InstanceGen::family_d2(GPParamsD2* out_params) {
    static const long primes[] = {1, 2, 3, 5, 7, 11, 13};
    while (true) {
        Int n = random_odd_modulus();
        Int a(small_signed(1, 5));
        Int k(small_signed(1, 8));
        Int p(primes[small_signed(0, 6)]);
        if (int_gcd(a, n) != 1 || int_gcd(p, n) != 1) continue;
        Int kn = k * n;
        Int m;
        if (p == 1) {
            Int c;
            mpz_sqrt(c.get_mpz_t(), kn.get_mpz_t());
            m = c + small_signed(0, 4);
            if (m <= 0) m = 1;
        } else {
            std::vector<Int> roots;
            for (Int m0 = 1; m0 < p; ++m0)
                if (mod_floor(a * m0 * m0 - kn, p) == 0) roots.push_back(m0);
            if (roots.empty()) continue;
            Int m0 = roots[static_cast<std::size_t>(below(Int(roots.size())).get_ui())];
            Int c;
            mpz_sqrt(c.get_mpz_t(), kn.get_mpz_t());
            m = c - mod_floor(c - m0, p);
            while (m <= 0) m += p;
        }
        if (int_gcd(m, p) != 1) continue;
        GPParamsD2 params{a, k, p, m};
        try {
            GpOutcome out = build_gp_d2(params, n);
            if (auto* gp = std::get_if<GeometricProgression>(&out)) {
                if (out_params) *out_params = params;
                return std::move(*gp);
            }
        } catch (const std::exception&) {
        }
    }
}

GeometricProgression InstanceGen::family_d3(GPParamsD3* out_params) {
    static const long primes[] = {2, 3, 5};
    while (true) {
        Int n = random_odd_modulus();
        Int a(small_signed(1, 4));
        Int k(small_signed(1, 8));
        if (int_gcd(a, n) != 1) continue;
        bool trivial_p = small_signed(0, 9) < 7;
        Int p = trivial_p ? Int(1) : Int(primes[small_signed(0, 2)]);
        if (int_gcd(p, n) != 1) continue;
        Int kn = k * n;
        Int m;
        if (p == 1) {
            Int c;
            mpz_root(c.get_mpz_t(), kn.get_mpz_t(), 3);
            m = c + small_signed(0, 3);
            if (m <= 0) m = 1;
        } else {
            Int p2 = p * p;
            std::vector<Int> roots;
            for (Int m0 = 1; m0 < p2; ++m0) {
                if (int_gcd(m0, p) != 1) continue;
                if (mod_floor(a * m0 * m0 * m0 - kn, p2) == 0) roots.push_back(m0);
            }
            if (roots.empty()) continue;
            Int m0 = roots[static_cast<std::size_t>(below(Int(roots.size())).get_ui())];
            Int c;
            mpz_root(c.get_mpz_t(), kn.get_mpz_t(), 3);
            m = c - mod_floor(c - m0, p2);
            while (m <= 0) m += p2;
        }
        if (int_gcd(m, p) != 1) continue;
        GPParamsD3 params{a, k, p, m};
        try {
            GpOutcome out = build_gp_d3(params, n);
            if (auto* gp = std::get_if<GeometricProgression>(&out)) {
                if (out_params) *out_params = params;
                return std::move(*gp);
            }
        } catch (const std::exception&) {
        }
    }
}

std::vector<VerifyInstance> default_battery(unsigned long seed, std::size_t count) {
    InstanceGen gen(seed);
    VerifyConfig defaults;
    std::vector<VerifyInstance> out;
    std::size_t attempt = 0;
    while (out.size() < count) {
        ++attempt;
        GeometricProgression gp =
            (out.size() % 2 == 0) ? gen.family_d2() : gen.family_d3();
        const Rat& s = defaults.skews[attempt % defaults.skews.size()];
        SelectOutcome sel = polys_from_gp(gp, s);
        auto* pair = std::get_if<PolyPair>(&sel);
        if (!pair) continue;
        char id[32];
        std::snprintf(id, sizeof(id), "gen-%04zu", out.size());
        out.push_back(VerifyInstance{id, std::move(gp), std::move(*pair), std::nullopt});
    }
    return out;
}

}  // namespace monty
