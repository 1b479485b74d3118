#pragma once

#include <functional>

#include "homlie/basis_change.hpp"

namespace homlie {

// Parameter environment for registry entries.
class ParamEnv {
  public:
    ParamEnv(const std::map<std::string, Scalar>& vals, const Field& f) : vals_(&vals), field_(f) {}
    Scalar operator()(const std::string& name) const;
    const Field& field() const { return field_; }
    Scalar num(long v) const { return Scalar::from_int(field_, v); }

  private:
    const std::map<std::string, Scalar>* vals_;
    Field field_;
};

// One canonical bracket from the classification tables, together with the
// constraint pattern on its twist-map matrix.
struct Representative {
    struct PsiTerm {
        int k, r;
        bool is_param = false;
        long fixed = 1;
        std::string param; // used when is_param
    };
    struct Cell {
        enum class Kind { zero, free_param, expr };
        Kind kind = Kind::zero;
        std::string display;                         // parameter name or formula text
        std::function<Scalar(const ParamEnv&)> eval; // for expr cells
    };

    std::string name;
    int n = 2; // model parameter; the algebra has dimension n + 1
    bool multiplicative_table = false;
    std::string source;
    std::vector<PsiTerm> psi;
    std::vector<std::vector<Cell>> alpha_cells; // (n+1) x (n+1), lower triangular
    std::vector<std::string> params;            // every declared parameter
    std::vector<std::string> nonzero_params;    // side conditions: must be nonzero
    std::vector<std::string> sqrt5_params;      // side conditions: s*s = 5
};

// dim in 3..7; multiplicative=true serves the multiplicative tables
// (dims 3..6 only; dimension 7 is not provided by the source).
std::vector<Representative> registry(int dim, bool multiplicative);

// Look up one entry by exact name across both tables.
const Representative* registry_find(const std::string& name);

HomAlgebra instantiate(const Representative& rep, const std::map<std::string, Scalar>& params,
                       const Field& f = Field::rationals());

// Parameter assignment making alpha the identity, when the pattern admits it.
std::optional<std::map<std::string, Scalar>> identity_params(const Representative& rep,
                                                             const Field& f = Field::rationals());

struct VerifyReport {
    bool hom_jacobi = false;
    bool filiform = false;
    bool multiplicative_checked = false;
    bool multiplicative = false;
    bool pass() const {
        return hom_jacobi && filiform && (!multiplicative_checked || multiplicative);
    }
};

VerifyReport verify_representative(const Representative& rep,
                                   const std::map<std::string, Scalar>& params,
                                   const Field& f = Field::rationals());

struct AuditRow {
    std::string entry;
    std::string field;
    int samples = 0;
    int pass = 0;
    int hom_jacobi_fail = 0;
    int filiform_fail = 0;
    int multiplicative_fail = 0;
    int skipped = 0;       // side conditions unsatisfiable for a sample
    std::string finding;   // reproduction parameters of the first failure
};

// Samples each entry of the registry at random parameters (deterministic in
// the seed); failures are findings against the source tables, not errors.
// Entries needing sqrt(5) are audited over F_11 where 5 is a square.
std::vector<AuditRow> audit_registry(int dim, bool multiplicative, int samples, unsigned seed);

struct AdaptedBasis {
    Matrix change;       // columns = adapted basis vectors in input coordinates
    HomAlgebra algebra;  // the input rewritten in that basis
};

// Finds a basis in which the bracket is mu_0 + psi (extraction succeeds) and
// the twist matrix is lower triangular. Requires a filiform input.
AdaptedBasis find_adapted_basis(const HomAlgebra& g, unsigned seed = 1, int budget = 200);

struct ClassificationResult {
    bool matched = false;
    std::string name;                      // matched representative, or empty
    std::map<std::string, Scalar> params;  // pattern parameters (e.g. beta)
    Matrix initial_change;                 // adapted-basis matrix
    std::vector<AdaptedChange> changes;    // elementary reductions applied after it
    HomAlgebra final_algebra;
    PsiCoefficients terminal_coefficients; // coefficients at the end of reduction
    std::string diagnostics;               // set when unclassified
};

// Reduction to a canonical representative for dim 3..7, over Q. Coefficient
// vectors outside every branch, and eliminations whose polynomials have no
// rational root, are reported as unclassified rather than guessed.
ClassificationResult classify(const HomAlgebra& g, unsigned seed = 1);

struct IsoResult {
    bool isomorphic = false;
    bool exhausted = false; // candidate space fully searched
    Matrix witness;
    long long candidates_tried = 0;
};

// Exhaustive isomorphism search over a small prime field. adapted=true
// enumerates adapted changes (b_0 = 0, a_0 b_1 != 0); adapted=false
// enumerates all invertible matrices and requires dim <= 4.
IsoResult iso_bruteforce(const HomAlgebra& g1, const HomAlgebra& g2, bool adapted,
                         long long budget = 100000000LL);

// Partition into adapted-change orbits by pairwise exhaustive search.
std::vector<std::vector<int>> adapted_orbits(const std::vector<HomAlgebra>& algebras,
                                             long long budget = 100000000LL);

} // namespace homlie
