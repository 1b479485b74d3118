#include "homlie/algebra.hpp"

namespace homlie {

BracketTable::BracketTable(int n, const Field& f)
    : n_(n), field_(f), table_(std::size_t(n) * n, Vec()) {}

void BracketTable::set(int i, int j, const Vec& coeffs) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw domain_error("bracket index out of range");
    if (i >= j) throw domain_error("bracket table entries require i < j");
    if (int(coeffs.size()) != n_) throw domain_error("bracket coefficient length mismatch");
    table_[idx(i, j)] = coeffs;
}

Vec BracketTable::pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw domain_error("bracket index out of range");
    if (i == j) return vec_zero(field_, n_);
    if (i < j) {
        const Vec& v = table_[idx(i, j)];
        return v.empty() ? vec_zero(field_, n_) : v;
    }
    const Vec& v = table_[idx(j, i)];
    return v.empty() ? vec_zero(field_, n_) : vec_scale(-Scalar::one(field_), v);
}

bool BracketTable::operator==(const BracketTable& o) const {
    if (n_ != o.n_ || field_ != o.field_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (pair(i, j) != o.pair(i, j)) return false;
    return true;
}

HomAlgebra make_algebra(int dim, const Field& f) {
    HomAlgebra g;
    g.dim = dim;
    g.bracket = BracketTable(dim, f);
    g.alpha = Matrix::identity(dim, f);
    return g;
}

HomAlgebra with_alpha(const HomAlgebra& g, const Matrix& alpha) {
    if (alpha.rows() != g.dim || alpha.cols() != g.dim)
        throw domain_error("twist map shape mismatch");
    HomAlgebra h = g;
    h.alpha = alpha;
    return h;
}

Vec bracket_eval(const HomAlgebra& g, const Vec& u, const Vec& v) {
    if (int(u.size()) != g.dim || int(v.size()) != g.dim)
        throw domain_error("bracket_eval vector length mismatch");
    Vec r = vec_zero(g.field(), g.dim);
    for (int i = 0; i < g.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < g.dim; ++j) {
            if (j == i || v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            Vec b = g.bracket.pair(i, j);
            if (!vec_is_zero(b)) r = vec_add(r, vec_scale(c, b));
        }
    }
    return r;
}

Vec hom_jacobi_defect(const HomAlgebra& g, int i, int j, int k) {
    Vec r = bracket_eval(g, g.alpha_of(i), g.bracket.pair(j, k));
    r = vec_add(r, bracket_eval(g, g.alpha_of(k), g.bracket.pair(i, j)));
    r = vec_add(r, bracket_eval(g, g.alpha_of(j), g.bracket.pair(k, i)));
    return r;
}

bool check_hom_jacobi(const HomAlgebra& g) {
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            for (int k = j + 1; k < g.dim; ++k)
                if (!vec_is_zero(hom_jacobi_defect(g, i, j, k))) return false;
    return true;
}

bool check_multiplicative(const HomAlgebra& g) {
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec lhs = g.alpha_apply(g.bracket.pair(i, j));
            Vec rhs = bracket_eval(g, g.alpha_of(i), g.alpha_of(j));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_lie(const HomAlgebra& g) {
    return check_hom_jacobi(with_alpha(g, Matrix::identity(g.dim, g.field())));
}

bool is_weak_morphism(const Matrix& f, const HomAlgebra& g, const HomAlgebra& h) {
    if (f.rows() != h.dim || f.cols() != g.dim)
        throw domain_error("morphism matrix shape mismatch");
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec lhs = f.apply(g.bracket.pair(i, j));
            Vec rhs = bracket_eval(h, f.col(i), f.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_morphism(const Matrix& f, const HomAlgebra& g, const HomAlgebra& h) {
    if (!is_weak_morphism(f, g, h)) return false;
    return f * g.alpha == h.alpha * f;
}

bool check_morphism_via_graph(const Matrix& f, const HomAlgebra& g, const HomAlgebra& h) {
    if (f.rows() != h.dim || f.cols() != g.dim)
        throw domain_error("morphism matrix shape mismatch");
    HomAlgebra s = direct_sum(g, h);
    std::vector<Vec> graph_vecs;
    for (int i = 0; i < g.dim; ++i) {
        Vec v = vec_zero(s.field(), s.dim);
        v[i] = Scalar::one(s.field());
        for (int r = 0; r < h.dim; ++r) v[g.dim + r] = f.at(r, i);
        graph_vecs.push_back(v);
    }
    Subspace graph = Subspace::span(graph_vecs, s.dim, s.field());
    for (const auto& u : graph_vecs) {
        if (!graph.contains(s.alpha_apply(u))) return false;
        for (const auto& v : graph_vecs)
            if (!graph.contains(bracket_eval(s, u, v))) return false;
    }
    return true;
}

HomAlgebra direct_sum(const HomAlgebra& g, const HomAlgebra& h) {
    if (g.field() != h.field()) throw domain_error("direct sum requires one field");
    int n = g.dim + h.dim;
    HomAlgebra s = make_algebra(n, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec c = g.bracket.pair(i, j);
            Vec v = vec_zero(g.field(), n);
            for (int k = 0; k < g.dim; ++k) v[k] = c[k];
            s.bracket.set(i, j, v);
        }
    for (int i = 0; i < h.dim; ++i)
        for (int j = i + 1; j < h.dim; ++j) {
            Vec c = h.bracket.pair(i, j);
            Vec v = vec_zero(g.field(), n);
            for (int k = 0; k < h.dim; ++k) v[g.dim + k] = c[k];
            s.bracket.set(g.dim + i, g.dim + j, v);
        }
    Matrix a(n, n, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) a.at(i, j) = g.alpha.at(i, j);
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) a.at(g.dim + i, g.dim + j) = h.alpha.at(i, j);
    s.alpha = a;
    return s;
}

Subspace center(const HomAlgebra& g) {
    // Stack the maps z -> [x_i, z]; the center is their common kernel.
    Matrix sys(g.dim * g.dim, g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            Vec b = g.bracket.pair(i, j); // [x_i, x_j]
            for (int k = 0; k < g.dim; ++k) sys.at(i * g.dim + k, j) = b[k];
        }
    return Subspace::span(kernel(sys));
}

HomAlgebra conjugate(const HomAlgebra& g, const Matrix& f) {
    if (f.rows() != g.dim || f.cols() != g.dim) throw domain_error("conjugation shape mismatch");
    Matrix finv = inverse(f);
    HomAlgebra h = make_algebra(g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            h.bracket.set(i, j, finv.apply(bracket_eval(g, f.col(i), f.col(j))));
    h.alpha = finv * g.alpha * f;
    h.labels = g.labels;
    return h;
}

} // namespace homlie
