#include "monty/gp.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace monty {

GpOutcome validate_gp(std::vector<Int> c, const Int& modulus, std::optional<Int> ratio) {
    if (c.size() < 2) throw std::invalid_argument("validate_gp: length must be >= 2");
    if (modulus < 2) throw std::invalid_argument("validate_gp: modulus must be >= 2");
    bool all_zero = std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
    if (all_zero) throw NotAGPError("zero vector");

    const std::size_t len = c.size();
    auto entry = [&](std::size_t i) -> const Int& { return c[len - 1 - i]; };

    Int r;
    if (ratio) {
        r = mod_floor(*ratio, modulus);
    } else {
        // lowest index with a unit gcd recovers the ratio; a proper gcd in
        // between is a factor of the modulus
        std::size_t idx = len;
        for (std::size_t i = 0; i + 1 < len; ++i) {
            Int g = int_gcd(mod_floor(entry(i), modulus), modulus);
            if (g == 1) {
                idx = i;
                break;
            }
            if (g != modulus) return FactorFound{modulus, g};
        }
        if (idx == len) throw NotAGPError("no entry invertible mod N; ratio unrecoverable");
        Int inv;
        invert_mod(inv, entry(idx), modulus);
        r = mod_floor(entry(idx + 1) * inv, modulus);
    }

    Int power = 1;  // r^i
    for (std::size_t i = 0; i < len; ++i) {
        if (mod_floor(entry(i) - entry(0) * power, modulus) != 0)
            throw NotAGPError("congruence c_i = c_0 r^i failed at i=" + std::to_string(i));
        power = mod_floor(power * r, modulus);
    }
    return GeometricProgression{std::move(c), modulus, r};
}

GpOutcome gp_from_polys(const IntPoly& f1, const IntPoly& f2, std::size_t t, const Int& modulus) {
    if (modulus < 2) throw std::invalid_argument("gp_from_polys: modulus must be >= 2");
    std::size_t d2 = f2.degree();
    IntMatrix s_d2 = s_t_matrix(f1, f2, d2);  // validates the degree ranges
    if (resultant(f1, f2) == 0) throw std::invalid_argument("gp_from_polys: polynomials share a factor");

    Int hyp = int_gcd(mod_floor(f1.lc() * delta(s_d2), modulus), modulus);
    if (hyp != 1) {
        if (hyp != modulus) return FactorFound{modulus, hyp};
        throw std::invalid_argument("gp_from_polys: lc(f1)*delta(S_d2) divisible by N");
    }

    GpOutcome out = validate_gp(ct_vector(f1, f2, t), modulus);
    if (auto* gp = std::get_if<GeometricProgression>(&out)) {
        std::size_t d = f1.degree();
        if (int_gcd(gp->entry(0), modulus) != 1)
            throw std::logic_error("gp_from_polys: gcd(c_t0, N) != 1 despite hypotheses");
        IntMatrix ct(t, d);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < d; ++j) ct.at(i, j) = gp->c[i + j];
        if (delta(ct) == 0) throw std::logic_error("gp_from_polys: C_t rank-deficient");
    }
    return out;
}

namespace {

void require_nonzero(const Int& x, const char* name) {
    if (x == 0) throw std::invalid_argument(std::string("gp params: ") + name + " must be nonzero");
}

void check_common_params(const Int& a, const Int& k, const Int& p, const Int& m, const Int& n) {
    require_nonzero(a, "a");
    require_nonzero(k, "k");
    require_nonzero(p, "p");
    require_nonzero(m, "m");
    if (int_gcd(m, p) != 1) throw std::invalid_argument("gp params: gcd(m,p) != 1");
    if (int_gcd(a, n) != 1) throw std::invalid_argument("gp params: gcd(a,N) != 1");
}

}  // namespace

GpOutcome build_gp_d2(const GPParamsD2& q, const Int& n) {
    if (n < 2) throw std::invalid_argument("build_gp_d2: modulus must be >= 2");
    check_common_params(q.a, q.k, q.p, q.m, n);
    Int top = q.a * q.m * q.m - q.k * n;
    if (!mpz_divisible_p(top.get_mpz_t(), q.p.get_mpz_t()))
        throw std::invalid_argument("build_gp_d2: p does not divide a m^2 - k N");
    std::vector<Int> c = {div_exact(top, q.p), q.a * q.m, q.a * q.p};
    return validate_gp(std::move(c), n);
}

GpOutcome build_gp_d3(const GPParamsD3& q, const Int& n) {
    if (n < 2) throw std::invalid_argument("build_gp_d3: modulus must be >= 2");
    check_common_params(q.a, q.k, q.p, q.m, n);
    Int top = q.a * q.m * q.m * q.m - q.k * n;
    Int p2 = q.p * q.p;
    if (!mpz_divisible_p(top.get_mpz_t(), p2.get_mpz_t()))
        throw std::invalid_argument("build_gp_d3: p^2 does not divide a m^3 - k N");
    std::vector<Int> c = {q.m * div_exact(top, p2), div_exact(top, q.p), q.a * q.m * q.m,
                          q.a * q.m * q.p, q.a * p2};
    return validate_gp(std::move(c), n);
}

namespace {

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (unsigned long j = 2 * i; j <= n; j += i) sieve[j] = false;
    }
    return ps;
}

Rat gp_norm_score(const std::vector<Int>& c, const std::vector<Rat>& skews, const Int& n) {
    Rat best(0);
    bool first = true;
    for (const Rat& s : skews) {
        Rat v = skewed_vec_norm_sq(c, 1 / s);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best / Rat(n);
}

Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

Int icbrt(const Int& x) {
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3);
    return r;
}

bool within_size(const std::vector<Int>& c, const Int& cap) {
    if (cap == 0) return true;
    for (const Int& x : c)
        if (abs(x) > cap) return false;
    return true;
}

std::vector<Int> candidate_k_values(const GpSearchOptions& opts) {
    std::vector<Int> ks;
    for (unsigned long k = 1; k <= opts.k_max; ++k) ks.emplace_back(k);
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < 8; ++i)
        ks.emplace_back(opts.k_max + 1 + static_cast<unsigned long>(rng() % (3 * opts.k_max + 1)));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

}  // namespace

std::vector<GPParamsD2> search_gp_d2(const Int& n, const GpSearchOptions& opts) {
    if (n < 2) throw std::invalid_argument("search_gp_d2: modulus must be >= 2");
    std::vector<unsigned long> ps = primes_up_to(opts.p_max);
    std::vector<std::tuple<Rat, Int, Int, Int, GPParamsD2>> scored;

    auto consider = [&](const Int& k, const Int& p, const Int& m) {
        if (m <= 0 || int_gcd(m, p) != 1) return;
        GPParamsD2 params{1, k, p, m};
        Int top = m * m - k * n;
        if (!mpz_divisible_p(top.get_mpz_t(), p.get_mpz_t())) return;
        std::vector<Int> c = {div_exact(top, p), m, p};
        if (!within_size(c, opts.size_target)) return;
        try {
            GpOutcome out = build_gp_d2(params, n);
            if (!std::holds_alternative<GeometricProgression>(out)) return;
        } catch (const std::exception&) {
            return;
        }
        scored.emplace_back(gp_norm_score(c, opts.skews, n), k, p, m, params);
    };

    for (const Int& k : candidate_k_values(opts)) {
        Int kn = k * n;
        Int center = isqrt(kn);
        // p = 1: any m works, take the integers around sqrt(kN)
        for (long j = -2; j <= 3; ++j) consider(k, 1, center + j);
        for (unsigned long pu : ps) {
            Int p(pu);
            if (int_gcd(p, n) != 1) continue;
            Int target = mod_floor(kn, p);
            for (unsigned long r = 0; r < pu; ++r) {
                if (mod_floor(Int(r) * Int(r) - target, p) != 0) continue;
                // lift the square root mod p to the integers nearest sqrt(kN)
                Int base = center - mod_floor(center - Int(r), p);
                for (long j = -2; j <= 3; ++j) consider(k, p, base + j * p);
            }
        }
    }

    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& x, const auto& y) {
                         return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x),
                                         std::get<3>(x)) <
                                std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y),
                                         std::get<3>(y));
                     });
    std::vector<GPParamsD2> out;
    for (const auto& entry : scored) {
        if (out.size() >= opts.count) break;
        const GPParamsD2& params = std::get<4>(entry);
        if (std::any_of(out.begin(), out.end(), [&](const GPParamsD2& q) {
                return q.k == params.k && q.p == params.p && q.m == params.m;
            }))
            continue;
        out.push_back(params);
    }
    return out;
}

std::vector<GPParamsD3> search_gp_d3(const Int& n, const GpSearchOptions& opts) {
    if (n < 2) throw std::invalid_argument("search_gp_d3: modulus must be >= 2");
    std::vector<std::tuple<Rat, Int, Int, Int, GPParamsD3>> scored;

    auto consider = [&](const Int& k, const Int& p, const Int& m) {
        if (m <= 0 || int_gcd(m, p) != 1) return;
        Int top = m * m * m - k * n;
        Int p2 = p * p;
        if (!mpz_divisible_p(top.get_mpz_t(), p2.get_mpz_t())) return;
        std::vector<Int> c = {m * div_exact(top, p2), div_exact(top, p), m * m, m * p, p2};
        if (!within_size(c, opts.size_target)) return;
        GPParamsD3 params{1, k, p, m};
        try {
            GpOutcome out = build_gp_d3(params, n);
            if (!std::holds_alternative<GeometricProgression>(out)) return;
        } catch (const std::exception&) {
            return;
        }
        scored.emplace_back(gp_norm_score(c, opts.skews, n), k, p, m, params);
    };

    std::vector<unsigned long> ps = primes_up_to(std::min<unsigned long>(opts.p_max, 13));
    for (const Int& k : candidate_k_values(opts)) {
        Int kn = k * n;
        Int center = icbrt(kn);
        for (long j = -1; j <= 2; ++j) consider(k, 1, center + j);
        for (unsigned long pu : ps) {
            Int p(pu);
            if (int_gcd(p, n) != 1) continue;
            Int p2 = p * p;
            Int target = mod_floor(kn, p2);
            for (unsigned long r = 1; r < pu * pu; ++r) {
                if (r % pu == 0) continue;
                if (mod_floor(Int(r) * Int(r) * Int(r) - target, p2) != 0) continue;
                Int base = center - mod_floor(center - Int(r), p2);
                for (long j = 0; j <= 1; ++j) consider(k, p, base + j * p2);
            }
        }
    }

    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& x, const auto& y) {
                         return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x),
                                         std::get<3>(x)) <
                                std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y),
                                         std::get<3>(y));
                     });
    std::vector<GPParamsD3> out;
    for (const auto& entry : scored) {
        if (out.size() >= opts.count) break;
        const GPParamsD3& params = std::get<4>(entry);
        if (std::any_of(out.begin(), out.end(), [&](const GPParamsD3& q) {
                return q.k == params.k && q.p == params.p && q.m == params.m;
            }))
            continue;
        out.push_back(params);
    }
    return out;
}

}  // namespace monty
