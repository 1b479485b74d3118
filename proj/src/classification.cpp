#include "homlie/classification.hpp"
#include "homlie/series.hpp"

#include <random>

namespace homlie {

namespace {

// ---- adapted basis discovery ------------------------------------------------

// In an adapted basis, span{x_1,...,x_n} is characterized (for n >= 4) as
// {v : [v, C^2] <= C^4}; x_0 must lie outside it. For n <= 3 the bracket is
// too short for that test and candidates are filtered by trial instead.
Subspace x1_eligible_space(const HomAlgebra& g, const SeriesReport& series) {
    int n = g.dim - 1;
    const Field& f = g.field();
    if (n < 4) return Subspace::full(g.dim, f);
    const Subspace& c2 = series.terms[2];
    const Subspace& c4 = series.terms.size() > 4 ? series.terms[4] : series.terms.back();
    std::vector<int> pivots;
    rref(c4.basis(), pivots);
    Subspace result = Subspace::full(g.dim, f);
    for (int wi = 0; wi < c2.dim(); ++wi) {
        Vec w = c2.basis().row(wi);
        // v -> [v, w] reduced modulo C^4; its kernel is the condition space.
        Matrix q(g.dim, g.dim, f);
        for (int j = 0; j < g.dim; ++j) {
            Vec e = vec_zero(f, g.dim);
            e[j] = Scalar::one(f);
            Vec col = bracket_eval(g, e, w);
            for (int r = 0; r < c4.dim(); ++r) {
                Scalar factor = col[pivots[r]];
                if (!factor.is_zero()) col = vec_sub(col, vec_scale(factor, c4.basis().row(r)));
            }
            q.set_col(j, col);
        }
        result = result.intersect(Subspace::span(kernel(q)));
    }
    return result;
}

std::vector<Vec> candidate_vectors(const HomAlgebra& g, unsigned seed, int budget) {
    const Field& f = g.field();
    int dim = g.dim;
    std::vector<Vec> out;
    for (int i = 0; i < dim; ++i) {
        Vec v = vec_zero(f, dim);
        v[i] = Scalar::one(f);
        out.push_back(v);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            Vec v = vec_zero(f, dim);
            v[i] = Scalar::one(f);
            v[j] = Scalar::one(f);
            out.push_back(v);
            v[j] = -Scalar::one(f);
            out.push_back(v);
        }
    std::mt19937 rng(seed);
    while (int(out.size()) < budget) {
        Vec v = vec_zero(f, dim);
        for (int i = 0; i < dim; ++i) v[i] = Scalar::from_int(f, long(rng() % 7) - 3);
        if (!vec_is_zero(v)) out.push_back(v);
    }
    return out;
}

int ad_rank(const HomAlgebra& g, const Vec& v) {
    Matrix m(g.dim, g.dim, g.field());
    for (int j = 0; j < g.dim; ++j) {
        Vec e = vec_zero(g.field(), g.dim);
        e[j] = Scalar::one(g.field());
        m.set_col(j, bracket_eval(g, v, e));
    }
    return rank(m);
}

bool extraction_ok(const HomAlgebra& h) {
    try {
        (void)extract_psi_coefficients(h);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

} // namespace

AdaptedBasis find_adapted_basis(const HomAlgebra& g, unsigned seed, int budget) {
    if (!is_filiform(g)) throw domain_error("find_adapted_basis requires a filiform input");
    int dim = g.dim;
    const Field& f = g.field();

    // Already adapted?
    if (g.alpha.is_lower_triangular() && extraction_ok(g))
        return {Matrix::identity(dim, f), g};

    SeriesReport series = central_series(g);
    Subspace eligible_x1 = x1_eligible_space(g, series);
    const Subspace& c1 = series.terms[1];

    auto x0_cands = candidate_vectors(g, seed, budget);
    std::vector<Vec> x1_cands;
    for (int i = 0; i < eligible_x1.dim(); ++i) x1_cands.push_back(eligible_x1.basis().row(i));
    {
        std::mt19937 rng(seed + 1);
        for (int extra = 0; extra < 40 && eligible_x1.dim() > 0; ++extra) {
            Vec v = vec_zero(f, dim);
            for (int i = 0; i < eligible_x1.dim(); ++i)
                v = vec_add(v, vec_scale(Scalar::from_int(f, long(rng() % 5) - 2),
                                         eligible_x1.basis().row(i)));
            if (!vec_is_zero(v)) x1_cands.push_back(v);
        }
    }

    int tried = 0;
    for (const Vec& x0 : x0_cands) {
        if (eligible_x1.contains(x0)) continue; // x_0 must carry the generator direction
        if (ad_rank(g, x0) != dim - 2) continue;
        for (const Vec& x1 : x1_cands) {
            if (c1.contains(x1)) continue;
            if (++tried > budget) break;
            Matrix m(dim, dim, f);
            m.set_col(0, x0);
            m.set_col(1, x1);
            Vec prev = x1;
            for (int i = 2; i < dim; ++i) {
                prev = bracket_eval(g, x0, prev);
                m.set_col(i, prev);
            }
            if (rank(m) < dim) continue;
            HomAlgebra h = conjugate(g, m);
            if (!h.alpha.is_lower_triangular()) continue;
            if (!extraction_ok(h)) continue;
            return {m, h};
        }
        if (tried > budget) break;
    }
    throw domain_error("find_adapted_basis: trial budget exhausted without an adapted basis "
                       "(alpha non-triangularizable over the tried candidates, or the bracket "
                       "does not reduce to deformed normal form)");
}

namespace {

// ---- elimination machinery ---------------------------------------------------

// New value of one coefficient slot after applying the parametrized change
// family, as an exact polynomial in the parameter (Lagrange interpolation,
// verified on extra sample points). Returns coefficients c_0..c_d or nullopt
// when the family exits normal form or the dependence is not polynomial.
std::optional<std::vector<Scalar>> slot_polynomial(
    const HomAlgebra& g, const std::function<AdaptedChange(const Scalar&)>& family,
    std::pair<int, int> slot, int max_degree = 4) {
    const Field& f = g.field();
    int points = max_degree + 3; // degree+1 to fit, 2 to verify
    std::vector<Scalar> xs, ys;
    for (int t = 0; t < points; ++t) {
        Scalar x = Scalar::from_int(f, t);
        try {
            HomAlgebra h = apply_change(family(x), g);
            PsiCoefficients c = extract_psi_coefficients(h);
            ys.push_back(c.get(slot.first, slot.second, f));
            xs.push_back(x);
        } catch (const domain_error&) {
            return std::nullopt;
        }
    }
    // Newton interpolation through the first max_degree+1 points.
    int m = max_degree + 1;
    std::vector<Scalar> coef(ys.begin(), ys.begin() + m); // divided differences
    for (int j = 1; j < m; ++j)
        for (int i = m - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    // expand to monomial basis
    std::vector<Scalar> poly(m, Scalar::zero(f));
    std::vector<Scalar> basis{Scalar::one(f)}; // prod (x - x_t), t < i
    for (int i = 0; i < m; ++i) {
        for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += coef[i] * basis[d];
        std::vector<Scalar> nb(basis.size() + 1, Scalar::zero(f));
        for (std::size_t d = 0; d < basis.size(); ++d) {
            nb[d + 1] += basis[d];
            nb[d] -= xs[i] * basis[d];
        }
        basis = std::move(nb);
    }
    auto eval = [&](const Scalar& x) {
        Scalar acc = Scalar::zero(f);
        for (int d = int(poly.size()) - 1; d >= 0; --d) acc = acc * x + poly[d];
        return acc;
    };
    for (int t = m; t < points; ++t)
        if (eval(xs[t]) != ys[t]) return std::nullopt; // not polynomial of this degree
    while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
    return poly;
}

// Exact rational roots of a polynomial of degree <= 2 (degree > 2 gives none).
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
    std::vector<Scalar> roots;
    if (poly.empty()) return roots;
    const Field& f = poly[0].field();
    int deg = int(poly.size()) - 1;
    while (deg > 0 && poly[deg].is_zero()) --deg;
    if (deg == 0) return roots; // constant: either no root or everything (caller treats 0 first)
    if (deg == 1) {
        roots.push_back(-poly[0] / poly[1]);
        return roots;
    }
    if (deg == 2 && f.is_rational()) {
        // discriminant square test over Q
        Scalar a = poly[2], b = poly[1], c = poly[0];
        Scalar disc = b * b - Scalar::from_int(f, 4) * a * c;
        mpq_class d = disc.rat();
        if (d < 0) return roots;
        mpz_class num = d.get_num(), den = d.get_den();
        mpz_class rn = sqrt(num), rd = sqrt(den);
        if (rn * rn != num || rd * rd != den) return roots;
        Scalar sq = Scalar::rational(mpq_class(rn, rd));
        Scalar two_a = Scalar::from_int(f, 2) * a;
        roots.push_back((-b + sq) / two_a);
        roots.push_back((-b - sq) / two_a);
    }
    return roots;
}

struct Reduction {
    HomAlgebra cur;
    std::vector<AdaptedChange> applied;

    void apply(const AdaptedChange& c) {
        cur = apply_change(c, cur);
        applied.push_back(c);
    }
};

// Tries each change family in turn to zero out `slot`, solving the exact
// slot polynomial for a rational root. Returns false when no family does it.
bool eliminate_slot(Reduction& red, std::pair<int, int> slot,
                    const std::vector<std::function<AdaptedChange(const Scalar&)>>& families) {
    const Field& f = red.cur.field();
    PsiCoefficients now = extract_psi_coefficients(red.cur);
    if (now.get(slot.first, slot.second, f).is_zero()) return true;
    for (const auto& fam : families) {
        auto poly = slot_polynomial(red.cur, fam, slot);
        if (!poly) continue;
        for (const Scalar& root : rational_roots(*poly)) {
            try {
                HomAlgebra h = apply_change(fam(root), red.cur);
                PsiCoefficients c = extract_psi_coefficients(h);
                if (c.get(slot.first, slot.second, f).is_zero()) {
                    red.apply(fam(root));
                    return true;
                }
            } catch (const domain_error&) {
            }
        }
    }
    return false;
}

std::function<AdaptedChange(const Scalar&)> sigma_family(int k) {
    return [k](const Scalar& b) { return AdaptedChange(Sigma{b, k}); };
}
std::function<AdaptedChange(const Scalar&)> tau_family(int k) {
    return [k](const Scalar& a) { return AdaptedChange(Tau{a, k}); };
}

Scalar coeff(const Reduction& red, int k, int r) {
    return extract_psi_coefficients(red.cur).get(k, r, red.cur.field());
}

// nu with given a, b
void rescale(Reduction& red, const Scalar& a, const Scalar& b) { red.apply(Nu{a, b}); }

ClassificationResult unclassified(const Reduction& red, const Matrix& initial,
                                  const std::string& why) {
    ClassificationResult res;
    res.matched = false;
    res.initial_change = initial;
    res.changes = red.applied;
    res.final_algebra = red.cur;
    res.terminal_coefficients = extract_psi_coefficients(red.cur);
    res.diagnostics = why;
    return res;
}

ClassificationResult matched(const Reduction& red, const Matrix& initial, const std::string& name,
                             std::map<std::string, Scalar> params = {}) {
    ClassificationResult res;
    res.matched = true;
    res.name = name;
    res.params = std::move(params);
    res.initial_change = initial;
    res.changes = red.applied;
    res.final_algebra = red.cur;
    res.terminal_coefficients = extract_psi_coefficients(red.cur);
    return res;
}

// Is q a square of a rational? Returns the square root if so.
std::optional<Scalar> rational_sqrt(const Scalar& s) {
    if (!s.field().is_rational()) return std::nullopt;
    mpq_class q = s.rat();
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Scalar::rational(mpq_class(rn, rd));
}

} // namespace

ClassificationResult classify(const HomAlgebra& g, unsigned seed) {
    if (g.dim < 3 || g.dim > 7) throw domain_error("classify covers dimensions 3..7");
    AdaptedBasis basis = find_adapted_basis(g, seed);
    int n = g.dim - 1;
    const Field& f = g.field();
    Scalar one = Scalar::one(f);

    Reduction red{basis.algebra, {}};

    auto finish = [&](const std::string& name, std::map<std::string, Scalar> params =
                                                   {}) -> ClassificationResult {
        ClassificationResult res = matched(red, basis.change, name, std::move(params));
        // The terminal coefficients must equal the claimed pattern exactly.
        const Representative* rep = registry_find(name);
        if (!rep) throw internal_error("classify: unknown representative " + name);
        PsiCoefficients expected(rep->n);
        for (const auto& term : rep->psi)
            expected.set(term.k, term.r,
                         term.is_param ? res.params.at(term.param)
                                       : Scalar::from_int(f, term.fixed));
        if (!(expected == res.terminal_coefficients))
            throw internal_error("classify: terminal coefficients do not match " + name);
        // Re-verify: replay the whole change sequence on the input.
        HomAlgebra replay = conjugate(g, basis.change);
        for (const auto& c : res.changes) replay = apply_change(c, replay);
        if (replay.bracket != res.final_algebra.bracket)
            throw internal_error("classify: change-sequence replay does not reproduce the "
                                 "final bracket");
        return res;
    };

    if (n == 2) return finish("mu_3^1");

    if (n == 3) {
        if (coeff(red, 1, 3).is_zero()) return finish("mu_4^1");
        return unclassified(red, basis.change,
                            "nonzero boundary coefficient a13: no adapted elimination and no "
                            "matching table entry");
    }

    if (n == 4) {
        Scalar a14 = coeff(red, 1, 4);
        if (a14.is_zero()) return finish("mu_5^1");
        rescale(red, one, one / a14);
        return finish("mu_5^2");
    }

    if (n == 5) {
        Scalar a14 = coeff(red, 1, 4), a25 = coeff(red, 2, 5);
        if (!a14.is_zero() && !a25.is_zero()) {
            if (!eliminate_slot(red, {1, 5}, {sigma_family(3), sigma_family(2), tau_family(2)}))
                return unclassified(red, basis.change, "a15 elimination root not rational");
            a14 = coeff(red, 1, 4);
            a25 = coeff(red, 2, 5);
            rescale(red, a14 / a25, a14 / (a25 * a25));
            return finish("mu_6^2");
        }
        if (!a14.is_zero()) { // a25 = 0
            if (!eliminate_slot(red, {1, 5}, {tau_family(1), sigma_family(2), sigma_family(3)}))
                return unclassified(red, basis.change, "a15 elimination root not rational");
            a14 = coeff(red, 1, 4);
            rescale(red, one, one / a14);
            return finish("mu_6^3");
        }
        if (!a25.is_zero()) // a14 = 0: no table entry carries a bare psi_{2,5}
            return unclassified(red, basis.change,
                                "coefficient vector (0, a15, a25) with a25 != 0 matches no "
                                "table entry");
        Scalar a15 = coeff(red, 1, 5);
        if (a15.is_zero()) return finish("mu_6^1");
        rescale(red, one, one / a15);
        return finish("mu_6^4");
    }

    // n == 6
    Scalar a14 = coeff(red, 1, 4), a26 = coeff(red, 2, 6);
    if (!a14.is_zero() && !a26.is_zero()) {
        if (!eliminate_slot(red, {1, 5}, {tau_family(1), sigma_family(2)}))
            return unclassified(red, basis.change, "a15 elimination root not rational");
        if (!eliminate_slot(red, {1, 6}, {sigma_family(3), tau_family(2), sigma_family(2)}))
            return unclassified(red, basis.change, "a16 elimination root not rational");
        a14 = coeff(red, 1, 4);
        rescale(red, one, one / a14);
        Scalar beta = coeff(red, 2, 6);
        return finish("mu_7^2", {{"beta", beta}});
    }
    if (a14.is_zero() && !a26.is_zero()) {
        if (!eliminate_slot(red, {1, 6}, {sigma_family(3), sigma_family(2), tau_family(2)}))
            return unclassified(red, basis.change, "a16 elimination root not rational");
        Scalar a15 = coeff(red, 1, 5);
        a26 = coeff(red, 2, 6);
        if (a15.is_zero()) {
            rescale(red, one, one / a26);
            return finish("mu_7^3");
        }
        rescale(red, a15 / a26, a15 * a15 / (a26 * a26 * a26));
        return finish("mu_7^4");
    }
    if (!a14.is_zero()) { // a26 = 0
        if (!eliminate_slot(red, {1, 5}, {tau_family(1), sigma_family(2)}))
            return unclassified(red, basis.change, "a15 elimination root not rational");
        if (eliminate_slot(red, {1, 6}, {tau_family(2), sigma_family(3), sigma_family(2)})) {
            a14 = coeff(red, 1, 4);
            rescale(red, one, one / a14);
            return finish("mu_7^8");
        }
        // a16 not eliminable: normalize toward psi14 + psi16
        a14 = coeff(red, 1, 4);
        rescale(red, one, one / a14); // a14 -> 1, a16 -> a16/a14
        Scalar a16 = coeff(red, 1, 6);
        if (auto s = rational_sqrt(a16)) { // residual nu(a, a^2) keeps a14 = 1
            rescale(red, *s, *s * *s);
            return finish("mu_7^7");
        }
        return unclassified(red, basis.change,
                            "a16 not eliminable and not a rational square; class mu_7^7 over "
                            "a closed field");
    }
    // a14 = 0, a26 = 0
    Scalar a15 = coeff(red, 1, 5);
    Scalar a16 = coeff(red, 1, 6);
    if (a15.is_zero() && a16.is_zero()) return finish("mu_7^1");
    if (a15.is_zero()) {
        rescale(red, one, one / a16);
        return finish("mu_7^6");
    }
    if (!eliminate_slot(red, {1, 6},
                        {sigma_family(2), sigma_family(3), tau_family(1), tau_family(2),
                         tau_family(3), sigma_family(4)})) {
        return unclassified(red, basis.change,
                            "coefficient vector (0, a15, a16, 0) with both nonzero: a16 not "
                            "eliminable by the printed changes; matches no table entry");
    }
    a15 = coeff(red, 1, 5);
    rescale(red, one, one / a15);
    return finish("mu_7^5");
}

// ---- finite-field brute force ------------------------------------------------

namespace {

struct FpAlgebra {
    int dim;
    long long p;
    // br[i][j] = coefficients of [x_i, x_j], full antisymmetric table
    std::vector<std::vector<std::vector<long long>>> br;
    std::vector<std::vector<long long>> al; // alpha, column j = alpha(x_j)
};

long long fp_norm(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

FpAlgebra to_fp(const HomAlgebra& g) {
    if (g.field().is_rational()) throw domain_error("iso_bruteforce requires a prime field");
    FpAlgebra a;
    a.dim = g.dim;
    a.p = g.field().characteristic();
    a.br.assign(g.dim, std::vector<std::vector<long long>>(g.dim,
                                                           std::vector<long long>(g.dim, 0)));
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            Vec v = g.bracket.pair(i, j);
            for (int k = 0; k < g.dim; ++k) a.br[i][j][k] = v[k].res();
        }
    a.al.assign(g.dim, std::vector<long long>(g.dim, 0));
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) a.al[i][j] = g.alpha.at(i, j).res();
    return a;
}

void fp_bracket(const FpAlgebra& g, const std::vector<long long>& u,
                const std::vector<long long>& v, std::vector<long long>& out) {
    int n = g.dim;
    for (int k = 0; k < n; ++k) out[k] = 0;
    for (int i = 0; i < n; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < n; ++j) {
            if (!v[j] || i == j) continue;
            long long c = u[i] * v[j] % g.p;
            const auto& b = g.br[i][j];
            for (int k = 0; k < n; ++k)
                if (b[k]) out[k] = (out[k] + c * b[k]) % g.p;
        }
    }
}

bool fp_invertible(std::vector<std::vector<long long>> m, long long p) {
    int n = int(m.size());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] % p) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(m[piv], m[c]);
        // eliminate below
        long long inv = 1, base = fp_norm(m[c][c], p), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int r = c + 1; r < n; ++r) {
            long long factor = fp_norm(m[r][c], p) * inv % p;
            if (!factor) continue;
            for (int cc = c; cc < n; ++cc) m[r][cc] = fp_norm(m[r][cc] - factor * m[c][cc], p);
        }
    }
    return true;
}

// Check conjugate(g1, F) == g2 without inverting: [F u, F v]_1 = F [u,v]_2
// on basis pairs, and alpha_1 F = F alpha_2.
bool fp_is_iso(const FpAlgebra& g1, const FpAlgebra& g2,
               const std::vector<std::vector<long long>>& fcols) {
    int n = g1.dim;
    long long p = g1.p;
    std::vector<long long> lhs(n), rhs(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            fp_bracket(g1, fcols[i], fcols[j], lhs);
            for (int k = 0; k < n; ++k) rhs[k] = 0;
            for (int m = 0; m < n; ++m) {
                long long c = g2.br[i][j][m];
                if (!c) continue;
                for (int k = 0; k < n; ++k)
                    rhs[k] = (rhs[k] + c * fcols[m][k]) % p;
            }
            for (int k = 0; k < n; ++k)
                if (fp_norm(lhs[k] - rhs[k], p)) return false;
        }
    // alpha_1 * F == F * alpha_2 columnwise: alpha_1(F e_j) = F(alpha_2 e_j)
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            long long l = 0, r = 0;
            for (int m = 0; m < n; ++m) {
                l = (l + g1.al[k][m] * fcols[j][m]) % p;
                r = (r + g2.al[m][j] * fcols[m][k]) % p;
            }
            if (fp_norm(l - r, p)) return false;
        }
    }
    return true;
}

Matrix fp_matrix(const std::vector<std::vector<long long>>& fcols, const Field& f) {
    int n = int(fcols.size());
    Matrix m(n, n, f);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = Scalar::residue(f, fcols[j][i]);
    return m;
}

} // namespace

IsoResult iso_bruteforce(const HomAlgebra& g1, const HomAlgebra& g2, bool adapted,
                         long long budget) {
    if (g1.dim != g2.dim) throw domain_error("iso_bruteforce requires equal dimensions");
    if (g1.field() != g2.field()) throw domain_error("iso_bruteforce requires one field");
    FpAlgebra a1 = to_fp(g1), a2 = to_fp(g2);
    int n = g1.dim;
    long long p = a1.p;
    IsoResult res;

    if (adapted) {
        // a-vector: a0 != 0; b-vector: b0 = 0, b1 != 0; higher columns by the
        // recursion against g1's bracket.
        long long a_count = 1, b_count = 1;
        for (int i = 0; i < n; ++i) a_count *= p;
        for (int i = 0; i < n - 1; ++i) b_count *= p;
        std::vector<std::vector<long long>> fcols(n, std::vector<long long>(n, 0));
        for (long long ai = 0; ai < a_count; ++ai) {
            long long t = ai;
            for (int i = 0; i < n; ++i) {
                fcols[0][i] = t % p;
                t /= p;
            }
            if (!fcols[0][0]) continue;
            for (long long bi = 0; bi < b_count; ++bi) {
                long long s = bi;
                fcols[1][0] = 0;
                for (int i = 1; i < n; ++i) {
                    fcols[1][i] = s % p;
                    s /= p;
                }
                if (!fcols[1][1]) continue;
                if (++res.candidates_tried > budget)
                    throw domain_error("iso_bruteforce budget exceeded");
                for (int i = 2; i < n; ++i) fp_bracket(a1, fcols[0], fcols[i - 1], fcols[i]);
                if (!fp_invertible(fcols, p)) continue; // columns-as-rows: rank is symmetric
                if (fp_is_iso(a1, a2, fcols)) {
                    res.isomorphic = true;
                    res.witness = fp_matrix(fcols, g1.field());
                    return res;
                }
            }
        }
        res.exhausted = true;
        return res;
    }

    if (n > 4) throw domain_error("full iso search supports dim <= 4");
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= p;
    std::vector<std::vector<long long>> fcols(n, std::vector<long long>(n, 0));
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                fcols[j][i] = t % p;
                t /= p;
            }
        if (++res.candidates_tried > budget) throw domain_error("iso_bruteforce budget exceeded");
        if (!fp_invertible(fcols, p)) continue;
        if (fp_is_iso(a1, a2, fcols)) {
            res.isomorphic = true;
            res.witness = fp_matrix(fcols, g1.field());
            return res;
        }
    }
    res.exhausted = true;
    return res;
}

std::vector<std::vector<int>> adapted_orbits(const std::vector<HomAlgebra>& algebras,
                                             long long budget) {
    int n = int(algebras.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (iso_bruteforce(algebras[i], algebras[j], true, budget).isomorphic)
                parent[find(j)] = find(i);
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    return out;
}

} // namespace homlie
