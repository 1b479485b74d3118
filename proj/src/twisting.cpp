#include "homlie/twisting.hpp"

namespace homlie {

namespace {

// Names a violating pair when f fails to intertwine the bracket.
void require_bracket_morphism(const Matrix& f, const HomAlgebra& g, const char* what) {
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec lhs = f.apply(g.bracket.pair(i, j));
            Vec rhs = bracket_eval(g, f.col(i), f.col(j));
            if (lhs != rhs)
                throw domain_error(std::string(what) + ": map is not a bracket morphism on pair (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

void require_hom_jacobi(const HomAlgebra& g, const char* what) {
    if (!check_hom_jacobi(g))
        throw internal_error(std::string(what) + " produced an algebra violating Hom-Jacobi");
}

} // namespace

HomAlgebra yau_twist(const HomAlgebra& g, const Matrix& alpha) {
    if (alpha.rows() != g.dim || alpha.cols() != g.dim)
        throw domain_error("yau twist: map shape mismatch");
    if (!is_lie(g)) throw domain_error("yau twist requires a Lie bracket");
    require_bracket_morphism(alpha, g, "yau twist");
    HomAlgebra h = make_algebra(g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            h.bracket.set(i, j, bracket_eval(g, alpha.col(i), alpha.col(j)));
    h.alpha = alpha;
    h.labels = g.labels;
    require_hom_jacobi(h, "yau twist");
    return h;
}

HomAlgebra beta_twist(const HomAlgebra& g, const Matrix& beta) {
    if (beta.rows() != g.dim || beta.cols() != g.dim)
        throw domain_error("beta twist: map shape mismatch");
    if (!check_hom_jacobi(g)) throw domain_error("beta twist requires a Hom-Lie algebra");
    require_bracket_morphism(beta, g, "beta twist");
    HomAlgebra h = make_algebra(g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            h.bracket.set(i, j, beta.apply(g.bracket.pair(i, j)));
    h.alpha = beta * g.alpha;
    h.labels = g.labels;
    require_hom_jacobi(h, "beta twist");
    return h;
}

HomAlgebra nth_derived(const HomAlgebra& g, int n) {
    if (n < 0) throw domain_error("derived algebra index must be nonnegative");
    if (!check_multiplicative(g)) throw domain_error("derived algebra requires a multiplicative input");
    if (!check_hom_jacobi(g)) throw domain_error("derived algebra requires a Hom-Lie algebra");
    Matrix an = g.alpha.pow(n);
    HomAlgebra h = make_algebra(g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            h.bracket.set(i, j, an.apply(g.bracket.pair(i, j)));
    h.alpha = g.alpha.pow(n + 1);
    h.labels = g.labels;
    require_hom_jacobi(h, "derived algebra");
    return h;
}

HomAlgebra untwist(const HomAlgebra& g) {
    if (!check_multiplicative(g)) throw domain_error("untwist requires a multiplicative input");
    if (!check_hom_jacobi(g)) throw domain_error("untwist requires a Hom-Lie algebra");
    Matrix ainv = inverse(g.alpha); // throws on singular alpha
    HomAlgebra h = make_algebra(g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            h.bracket.set(i, j, ainv.apply(g.bracket.pair(i, j)));
    h.alpha = Matrix::identity(g.dim, g.field());
    h.labels = g.labels;
    if (!is_lie(h)) throw internal_error("untwist produced a non-Lie bracket");
    return h;
}

} // namespace homlie
