#pragma once

#include <variant>

#include "homlie/filiform.hpp"

namespace homlie {

// Elementary adapted changes and the general adapted change of Prop. 35 form.
struct Sigma {
    Scalar b;
    int k; // 2 <= k <= n
};
struct Tau {
    Scalar a;
    int k; // 1 <= k <= n
};
struct Nu {
    Scalar a, b; // both nonzero
};
struct General {
    Vec a; // image of x_0
    Vec b; // image of x_1; b[0] = 0 and a[0]*b[1] != 0
};

using AdaptedChange = std::variant<Sigma, Tau, Nu, General>;

std::string change_str(const AdaptedChange& c);

// Full change matrix: columns f(x_0), f(x_1) from the change, then
// f(x_i) = [f(x_0), f(x_{i-1})] against g's bracket. Errors if singular.
Matrix realize(const AdaptedChange& change, const HomAlgebra& g);

// Conjugation of g by the realized matrix.
HomAlgebra apply_change(const AdaptedChange& change, const HomAlgebra& g);

// Inverse of assemble on its domain: bracket minus mu_0 must lie in the
// span of the psi_{k,r}; otherwise "not in deformed normal form".
PsiCoefficients extract_psi_coefficients(const HomAlgebra& g);

// Named C-parameters supplied by the caller (the source's C_j^i symbols).
struct CParams {
    Scalar c10, c11, c20;
    static CParams all(const Scalar& v) { return CParams{v, v, v}; }
};

// Closed-form coefficient transformation laws as printed for models n = 5
// (sigma(b,2), sigma(b,3), tau(a,1), tau(a,2), nu) and n = 6 (same changes).
// Changes without a printed law are rejected.
PsiCoefficients coefficient_law(const AdaptedChange& change, const PsiCoefficients& coeffs,
                                const CParams& c);

struct LawComparison {
    std::pair<int, int> slot;
    Scalar law_value;
    Scalar conjugation_value;
    bool match;
};

struct LawReport {
    bool conjugation_in_normal_form = true; // extraction after conjugation succeeded
    std::string note;
    std::vector<LawComparison> comparisons;
    bool all_match() const {
        if (!conjugation_in_normal_form) return false;
        for (const auto& c : comparisons)
            if (!c.match) return false;
        return true;
    }
};

// Cross-validation harness: the printed law vs actual conjugation through
// apply_change + extract. A mismatch is a finding, not a failure.
LawReport law_vs_conjugation(const AdaptedChange& change, const PsiCoefficients& coeffs,
                             const Matrix& alpha, const CParams& c);

// Elementary factor sequence for a General change, in application order
// (first factor applied first). Composing the realized factors against the
// successively transformed algebras reproduces the change's action.
std::vector<AdaptedChange> decompose(const General& change, const HomAlgebra& g);

// Applies changes left to right; returns the total matrix in the original
// coordinates together with the final algebra.
struct ComposedAction {
    Matrix total;
    HomAlgebra final_algebra;
};
ComposedAction compose_changes(const HomAlgebra& g, const std::vector<AdaptedChange>& changes);

} // namespace homlie
