#pragma once

#include <map>
#include <set>

#include "homlie/cochain.hpp"

namespace homlie {

// Deformation coefficients a_{k,r} indexed over Delta(n); unknown keys are
// rejected at insertion.
class PsiCoefficients {
  public:
    PsiCoefficients() : n_(0) {}
    explicit PsiCoefficients(int n);

    int model_parameter() const { return n_; }
    void set(int k, int r, const Scalar& value);
    Scalar get(int k, int r, const Field& f) const; // zero when absent
    const std::map<std::pair<int, int>, Scalar>& entries() const { return coeffs_; }
    bool empty() const;

    bool operator==(const PsiCoefficients& o) const;

  private:
    int n_;
    std::set<std::pair<int, int>> delta_;
    std::map<std::pair<int, int>, Scalar> coeffs_; // nonzero entries only
};

// The (n+1)-dimensional model bracket [x_0, x_i] = x_{i+1}, i = 1..n-1,
// with the given twist matrix (identity when omitted). Any supplied twist
// must be lower triangular.
HomAlgebra model_ln(int n, const Field& f = Field::rationals());
HomAlgebra model_ln(int n, const Matrix& alpha);

// {(k, r) : 1 <= k <= n-1, 2k+1 < r <= n}, plus ((n-1)/2, n) for odd n.
std::set<std::pair<int, int>> delta_index_set(int n);

// The deformation 2-cochain on pairs 1 <= i <= k <= j <= n:
//   psi_{k,r}(x_i, x_j) = (-1)^{k-i} binom(j-k-1, k-i) x_{i+j+r-2k-1},
// zero outside that range and zero when the target index exceeds n.
Cochain psi_cochain(int n, int k, int r, const Field& f = Field::rationals());

// mu_0 + sum a_{k,r} psi_{k,r} with the given twist. No validity claim;
// pair with deformation_check.
HomAlgebra assemble(int n, const PsiCoefficients& coeffs, const Matrix& alpha);
HomAlgebra assemble(int n, const PsiCoefficients& coeffs, const Field& f = Field::rationals());

struct DeformationReport {
    Cochain cocycle_residual; // delta^2 psi in the circle form
    Cochain jacobi_residual;  // psi o psi
    Cochain combined;         // their sum (the full deformation equation)
    bool cocycle_ok = false;
    bool jacobi_ok = false;
    bool verdict = false; // combined residual vanishes
    // Sub-sums by triple type: triples containing x_0 vs not.
    bool cocycle_ok_zero_triples = false;
    bool cocycle_ok_nonzero_triples = false;
    bool jacobi_ok_zero_triples = false;
    bool jacobi_ok_nonzero_triples = false;
    bool alpha_matches_split_shape = false; // lower triangular, first column (r00,0,..,0)
};

// Residuals of the deformation equation for an assembled algebra. When alpha
// has the split shape, verdict true must coincide with both parts vanishing;
// a violation raises internal_error.
DeformationReport deformation_check(const HomAlgebra& g);

enum class MultFamily {
    l2,            // n = 2 family
    regular,       // n >= 3, rho_00 != 0
    alpha_nilpotent // rho_00 = 0, alpha(x_k) = 0 for k >= 2
};

struct MultParams {
    // regular family: rho_i0 (i = 0..n), rho_i2 (i = 2..n-1), rho_{n-1,1}, rho_{n,1}
    // l2 family: rho_00, rho_10, rho_20, rho_11, rho_21
    // alpha_nilpotent family: rho_i0, rho_i1 (i = 1..n)
    std::map<std::string, Scalar> values;
    Scalar get(const std::string& name, const Field& f) const;
};

// Constructs the multiplicative twist family on L_n; the result is verified
// to pass both check_multiplicative and check_hom_jacobi (internal_error
// otherwise, which would indicate a transcription fault).
HomAlgebra multiplicative_ln_alpha(MultFamily family, int n, const MultParams& params,
                                   const Field& f = Field::rationals());

} // namespace homlie
