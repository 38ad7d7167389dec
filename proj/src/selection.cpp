#include "monty/selection.hpp"

#include <algorithm>

namespace monty {

IntMatrix hankel_from_seq(std::span<const Int> seq, std::size_t rows, std::size_t cols) {
    if (seq.size() != rows + cols - 1) throw std::invalid_argument("hankel_from_seq: length mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = seq[i + j];
    return m;
}

IntMatrix HankelStack::c_matrix() const { return hankel_from_seq(gp.c, d, d); }

IntMatrix HankelStack::partial(std::size_t k) const {
    if (k >= d) throw std::invalid_argument("partial: k out of range");
    return hankel_from_seq(gp.c, d - k, d + k);
}

IntMatrix HankelStack::partial_hat() const {
    return hankel_from_seq(std::span<const Int>(gp.c).subspan(1), d - 1, d);
}

HankelStack hankel_stack(GeometricProgression gp) {
    if (gp.length() < 3 || gp.length() % 2 == 0)
        throw std::invalid_argument("hankel_stack: length must be odd and >= 3");
    std::size_t d = (gp.length() + 1) / 2;
    return HankelStack{std::move(gp), d};
}

std::pair<std::vector<Int>, std::vector<Int>> kernel_pair(const HankelStack& stack) {
    if (det(stack.c_matrix()) == 0) throw DegenerateGPError("C singular");
    std::size_t d = stack.d;
    std::vector<Int> low(stack.gp.c.end() - static_cast<long>(d - 1), stack.gp.c.end());
    low.push_back(stack.gp.modulus);
    if (int_gcd(std::span<const Int>(low)) != 1)
        throw std::invalid_argument("kernel_pair: gcd(c_0..c_{d-2}, N) != 1");
    IntMatrix basis = integer_kernel(stack.partial(1));
    if (basis.cols() != 2) throw std::logic_error("kernel_pair: kernel dimension != 2");
    std::vector<Int> v1(d + 1), v2(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        v1[i] = basis.at(i, 0);
        v2[i] = basis.at(i, 1);
    }
    return {std::move(v1), std::move(v2)};
}

namespace {

Rat skew_dot(const std::vector<Int>& u, const std::vector<Int>& v, const std::vector<Rat>& w) {
    Rat acc(0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0 || v[j] == 0) continue;
        acc += Rat(u[j] * v[j]) * w[j];
    }
    return acc;
}

// nearest integer to a rational, half-ties rounded up (keeps the Gram cross
// term nonpositive at a tie)
Int nearest_int(const Rat& x) {
    Int q;
    Int num2 = 2 * x.get_num() + x.get_den();
    Int den2 = 2 * x.get_den();
    mpz_fdiv_q(q.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return q;
}

bool dependent(const std::vector<Int>& u, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

}  // namespace

std::pair<std::vector<Int>, std::vector<Int>> lagrange_reduce_skewed(
    std::vector<Int> v1, std::vector<Int> v2, const Rat& s) {
    if (v1.size() != v2.size() || v1.empty())
        throw std::invalid_argument("lagrange_reduce_skewed: size mismatch");
    if (s <= 0) throw std::invalid_argument("lagrange_reduce_skewed: skew must be positive");
    if (dependent(v1, v2)) throw std::invalid_argument("lagrange_reduce_skewed: dependent inputs");

    std::size_t len = v1.size();
    std::vector<Rat> w(len);  // coordinate j carries exponent len-1-j
    for (std::size_t j = 0; j < len; ++j) w[j] = rat_pow(s, 2 * static_cast<long>(len - 1 - j));

    Rat n1 = skew_dot(v1, v1, w), n2 = skew_dot(v2, v2, w);
    while (true) {
        if (n2 < n1) {
            std::swap(v1, v2);
            std::swap(n1, n2);
        }
        Int q = nearest_int(skew_dot(v1, v2, w) / n1);
        if (q == 0) break;
        for (std::size_t j = 0; j < len; ++j) v2[j] -= q * v1[j];
        n2 = skew_dot(v2, v2, w);
    }
    return {std::move(v1), std::move(v2)};
}

IntPoly poly_from_descending(std::span<const Int> v) {
    std::vector<Int> asc(v.rbegin(), v.rend());
    return IntPoly(std::move(asc));
}

std::vector<Int> poly_to_descending(const IntPoly& f, std::size_t formal_degree) {
    if (!f.is_zero() && f.degree() > formal_degree)
        throw std::invalid_argument("poly_to_descending: formal degree too small");
    std::vector<Int> v(formal_degree + 1);
    for (std::size_t j = 0; j <= formal_degree; ++j) v[j] = f.coeff(formal_degree - j);
    return v;
}

SelectOutcome polys_from_gp(const GeometricProgression& gp_in, const Rat& s) {
    GeometricProgression gp = gp_in;
    if (!gp.ratio) {
        GpOutcome v = validate_gp(gp.c, gp.modulus);
        if (auto* ff = std::get_if<FactorFound>(&v)) return *ff;
        gp = std::get<GeometricProgression>(std::move(v));
    }
    HankelStack stack = hankel_stack(gp);
    const std::size_t d = stack.d;
    const Int& n = stack.gp.modulus;

    std::vector<Int> low(stack.gp.c.end() - static_cast<long>(d - 1), stack.gp.c.end());
    low.push_back(n);
    Int g = int_gcd(std::span<const Int>(low));
    if (g != 1) {
        if (g != n) return FactorFound{n, g};
        return DegenerateGP{n, "c_0..c_{d-2} all divisible by N"};
    }
    IntMatrix c_mat = stack.c_matrix();
    Int det_c = det(c_mat);
    if (det_c == 0) return DegenerateGP{n, "C singular"};

    auto [v1, v2] = kernel_pair(stack);
    auto [w1, w2] = lagrange_reduce_skewed(std::move(v1), std::move(v2), s);

    IntPoly f1 = poly_from_descending(w1);
    IntPoly f2 = poly_from_descending(w2);
    if (f1.degree() < f2.degree()) std::swap(f1, f2);
    if (f1.degree() == f2.degree() && skewed_norm_sq(f2, s) < skewed_norm_sq(f1, s))
        std::swap(f1, f2);
    if (f1.lc() < 0) f1 = -f1;
    if (f2.lc() < 0) f2 = -f2;

    if (f1.degree() != d) throw std::logic_error("polys_from_gp: max degree != d");
    Int root = *stack.gp.ratio;
    if (eval_mod(f1, root, n) != 0 || eval_mod(f2, root, n) != 0)
        throw std::logic_error("polys_from_gp: common root lost");

    if (f2.degree() < 2)
        return DegeneratePair{f1, f2, n, root, s, "deg f2 < 2 after reduction"};

    PolyPair pair;
    pair.f1 = f1;
    pair.f2 = f2;
    pair.modulus = n;
    pair.root = root;
    pair.skew = s;
    pair.resultant = resultant(f1, f2);
    if (pair.resultant == 0) throw std::logic_error("polys_from_gp: resultant vanished");
    pair.delta_partial = delta(stack.partial(1));
    pair.delta_hat = delta(stack.partial_hat());
    pair.delta_c = delta(hankel_from_seq(stack.gp.c, 1, stack.gp.c.size()));
    pair.norm1_sq = skewed_norm_sq(f1, s);
    pair.norm2_sq = skewed_norm_sq(f2, s);
    pair.sin2 = sin2_theta(f1, f2, s);
    return pair;
}

bool resultant_formula(const PolyPair& pair, const HankelStack& stack) {
    std::size_t d = stack.d, d2 = pair.f2.degree();
    Int det_c = abs(det(stack.c_matrix()));
    Int dp = pair.delta_partial, dh = pair.delta_hat;
    bool res_ok = abs(pair.resultant) * int_pow(dp, d2) * int_pow(dh, d - d2) ==
                  int_pow(det_c, d - 1);
    Int delta_sd = delta(s_t_matrix(pair.f1, pair.f2, d));
    bool sd_ok = delta_sd * int_pow(dp, d - 1) == pair.delta_c * int_pow(det_c, d - 2);
    return res_ok && sd_ok;
}

bool leading_coeff_identity(const PolyPair& pair, const HankelStack& stack) {
    Int dp = pair.delta_partial, dh = pair.delta_hat;
    if (pair.f2.degree() < pair.f1.degree()) return abs(pair.f1.lc()) * dp == dh;
    if (!mpz_divisible_p(dh.get_mpz_t(), dp.get_mpz_t())) return false;
    Int q = div_exact(dh, dp);
    return mpz_divisible_p(pair.f1.lc().get_mpz_t(), q.get_mpz_t()) != 0;
}

SkewSearchResult skew_search(const GeometricProgression& gp, std::vector<Rat> grid) {
    if (grid.empty()) throw std::invalid_argument("skew_search: empty grid");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool have_best = false;
    Rat best_obj;
    SkewSearchResult best{grid.front(), DegenerateGP{gp.modulus, "no grid point evaluated"}};
    for (const Rat& s : grid) {
        SelectOutcome out = polys_from_gp(gp, s);
        if (std::holds_alternative<FactorFound>(out)) return {s, std::move(out)};
        if (auto* pair = std::get_if<PolyPair>(&out)) {
            long e = static_cast<long>(pair->f1.degree() + pair->f2.degree()) -
                     2 * static_cast<long>((gp.length() + 1) / 2);
            Rat obj = rat_pow(s, e) * pair->norm1_sq * pair->norm2_sq;
            if (!have_best || obj < best_obj) {
                have_best = true;
                best_obj = obj;
                best = {s, std::move(out)};
            }
        } else if (!have_best) {
            best = {s, std::move(out)};  // remember a degenerate outcome
        }
    }
    return best;
}

}  // namespace monty
