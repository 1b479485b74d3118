#include "homlie/filiform.hpp"

namespace homlie {

namespace {

long binom(int q, int p) {
    // C_q^p = 0 when q < p (in particular for negative q); C_0^0 = 1.
    if (p < 0 || q < p) return 0;
    long r = 1;
    for (int i = 1; i <= p; ++i) r = r * (q - p + i) / i;
    return r;
}

} // namespace

PsiCoefficients::PsiCoefficients(int n) : n_(n), delta_(delta_index_set(n)) {}

void PsiCoefficients::set(int k, int r, const Scalar& value) {
    if (!delta_.count({k, r}))
        throw domain_error("(" + std::to_string(k) + "," + std::to_string(r) +
                           ") is not in Delta(" + std::to_string(n_) + ")");
    if (value.is_zero())
        coeffs_.erase({k, r});
    else
        coeffs_[{k, r}] = value;
}

Scalar PsiCoefficients::get(int k, int r, const Field& f) const {
    auto it = coeffs_.find({k, r});
    return it == coeffs_.end() ? Scalar::zero(f) : it->second;
}

bool PsiCoefficients::empty() const { return coeffs_.empty(); }

bool PsiCoefficients::operator==(const PsiCoefficients& o) const {
    return n_ == o.n_ && coeffs_ == o.coeffs_;
}

HomAlgebra model_ln(int n, const Field& f) {
    if (n < 2) throw domain_error("model L_n requires n >= 2");
    HomAlgebra g = make_algebra(n + 1, f);
    for (int i = 1; i <= n - 1; ++i) {
        Vec v = vec_zero(f, n + 1);
        v[i + 1] = Scalar::one(f);
        g.bracket.set(0, i, v);
    }
    return g;
}

HomAlgebra model_ln(int n, const Matrix& alpha) {
    if (alpha.rows() != n + 1 || alpha.cols() != n + 1)
        throw domain_error("model L_n twist must be (n+1) x (n+1)");
    if (!alpha.is_lower_triangular())
        throw domain_error("model L_n twist must be lower triangular");
    return with_alpha(model_ln(n, alpha.field()), alpha);
}

std::set<std::pair<int, int>> delta_index_set(int n) {
    if (n < 2) throw domain_error("Delta(n) requires n >= 2");
    std::set<std::pair<int, int>> out;
    for (int k = 1; k <= n - 1; ++k)
        for (int r = 2 * k + 2; r <= n; ++r) out.insert({k, r});
    if (n % 2 == 1) out.insert({(n - 1) / 2, n});
    return out;
}

Cochain psi_cochain(int n, int k, int r, const Field& f) {
    if (!delta_index_set(n).count({k, r}))
        throw domain_error("(" + std::to_string(k) + "," + std::to_string(r) +
                           ") is not in Delta(" + std::to_string(n) + ")");
    Cochain c(2, n + 1, f);
    for (int i = 1; i <= k; ++i)
        for (int j = std::max(k, i + 1); j <= n; ++j) {
            long b = binom(j - k - 1, k - i);
            if (b == 0) continue;
            int target = i + j + r - 2 * k - 1;
            if (target > n) continue; // values past the top basis vector vanish
            Scalar val = Scalar::from_int(f, ((k - i) % 2 == 0) ? b : -b);
            Vec v = vec_zero(f, n + 1);
            v[target] = val;
            c.set({i, j}, v);
        }
    return c;
}

HomAlgebra assemble(int n, const PsiCoefficients& coeffs, const Matrix& alpha) {
    if (coeffs.model_parameter() != n && !coeffs.empty())
        throw domain_error("coefficient set built for a different model parameter");
    HomAlgebra g = model_ln(n, alpha);
    Cochain psi(2, n + 1, alpha.field());
    for (const auto& [kr, a] : coeffs.entries())
        psi = psi + psi_cochain(n, kr.first, kr.second, alpha.field()).scaled(a);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vec v = psi.eval_basis({i, j});
            if (!vec_is_zero(v)) g.bracket.set(i, j, v);
        }
    return g;
}

HomAlgebra assemble(int n, const PsiCoefficients& coeffs, const Field& f) {
    return assemble(n, coeffs, Matrix::identity(n + 1, f));
}

namespace {

bool vanishes_on(const Cochain& c, bool zero_triples) {
    for (const auto& t : c.support()) {
        bool has_zero = t.front() == 0;
        if (has_zero == zero_triples) return false;
    }
    return true;
}

} // namespace

DeformationReport deformation_check(const HomAlgebra& g) {
    int dim = g.dim;
    int n = dim - 1;
    HomAlgebra model = model_ln(n, g.field());
    Cochain psi = bracket_cochain(g) - bracket_cochain(model);
    // psi must avoid x_0 if g really came from assemble
    for (const auto& t : psi.support())
        if (t.front() == 0)
            throw domain_error("deformation_check input is not of the form mu_0 + psi");

    DeformationReport rep;
    Cochain mu0 = bracket_cochain(model);
    rep.cocycle_residual = circle(g.alpha, mu0, psi) + circle(g.alpha, psi, mu0);
    rep.jacobi_residual = circle(g.alpha, psi, psi);
    rep.combined = rep.cocycle_residual + rep.jacobi_residual;
    rep.cocycle_ok = rep.cocycle_residual.is_zero();
    rep.jacobi_ok = rep.jacobi_residual.is_zero();
    rep.verdict = rep.combined.is_zero();
    rep.cocycle_ok_zero_triples = vanishes_on(rep.cocycle_residual, true);
    rep.cocycle_ok_nonzero_triples = vanishes_on(rep.cocycle_residual, false);
    rep.jacobi_ok_zero_triples = vanishes_on(rep.jacobi_residual, true);
    rep.jacobi_ok_nonzero_triples = vanishes_on(rep.jacobi_residual, false);

    bool split_shape = g.alpha.is_lower_triangular();
    for (int i = 1; i < dim; ++i)
        if (!g.alpha.at(i, 0).is_zero()) split_shape = false;
    rep.alpha_matches_split_shape = split_shape;
    if (split_shape && rep.verdict != (rep.cocycle_ok && rep.jacobi_ok))
        throw internal_error("split-shape equivalence violated: combined residual and "
                             "its two parts disagree");
    return rep;
}

Scalar MultParams::get(const std::string& name, const Field& f) const {
    auto it = values.find(name);
    return it == values.end() ? Scalar::zero(f) : it->second;
}

namespace {

std::string rho(int i, int k) { return "rho" + std::to_string(i) + std::to_string(k); }

} // namespace

HomAlgebra multiplicative_ln_alpha(MultFamily family, int n, const MultParams& params,
                                   const Field& f) {
    Matrix a(n + 1, n + 1, f);
    switch (family) {
    case MultFamily::l2: {
        if (n != 2) throw domain_error("the L_2 family requires n = 2");
        a.at(0, 0) = params.get(rho(0, 0), f);
        a.at(1, 0) = params.get(rho(1, 0), f);
        a.at(2, 0) = params.get(rho(2, 0), f);
        a.at(1, 1) = params.get(rho(1, 1), f);
        a.at(2, 1) = params.get(rho(2, 1), f);
        a.at(2, 2) = a.at(0, 0) * a.at(1, 1);
        break;
    }
    case MultFamily::regular: {
        if (n < 3) throw domain_error("the regular family requires n >= 3");
        Scalar r00 = params.get(rho(0, 0), f);
        if (r00.is_zero()) throw domain_error("the regular family requires rho00 != 0");
        for (int i = 0; i <= n; ++i) a.at(i, 0) = params.get(rho(i, 0), f);
        a.at(0, 0) = r00;
        // alpha(x_1) = sum_{i=2}^{n-1} (rho_i2 / rho00) x_{i-1} + rho_{n-1,1} x_{n-1} + rho_{n,1} x_n
        for (int i = 2; i <= n - 1; ++i)
            a.at(i - 1, 1) = a.at(i - 1, 1) + params.get(rho(i, 2), f) / r00;
        a.at(n - 1, 1) = a.at(n - 1, 1) + params.get(rho(n - 1, 1), f);
        a.at(n, 1) = a.at(n, 1) + params.get(rho(n, 1), f);
        // alpha(x_2) = sum_{i=2}^{n-1} rho_i2 x_i + rho00 rho_{n-1,1} x_n
        for (int i = 2; i <= n - 1; ++i) a.at(i, 2) = params.get(rho(i, 2), f);
        a.at(n, 2) = r00 * params.get(rho(n - 1, 1), f);
        // alpha(x_k) = sum_{i=2}^{n-k+2} rho00^{k-2} rho_i2 x_{k+i-2}, k >= 3
        for (int k = 3; k <= n; ++k) {
            Scalar pw = r00.pow(k - 2);
            for (int i = 2; i <= n - k + 2; ++i)
                a.at(k + i - 2, k) = pw * params.get(rho(i, 2), f);
        }
        break;
    }
    case MultFamily::alpha_nilpotent: {
        if (n < 2) throw domain_error("the nilpotent-alpha family requires n >= 2");
        for (int i = 1; i <= n; ++i) {
            a.at(i, 0) = params.get(rho(i, 0), f);
            a.at(i, 1) = params.get(rho(i, 1), f);
        }
        break;
    }
    }
    HomAlgebra g = model_ln(n, a);
    if (!check_multiplicative(g))
        throw internal_error("multiplicative L_n family transcription failed multiplicativity");
    if (!check_hom_jacobi(g))
        throw internal_error("multiplicative L_n family transcription failed Hom-Jacobi");
    return g;
}

} // namespace homlie
