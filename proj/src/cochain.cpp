#include "homlie/cochain.hpp"

#include <algorithm>

namespace homlie {

namespace {

// Sorts a tuple in place; returns the permutation sign, or 0 on repeats.
int sort_sign(std::vector<int>& t) {
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) return 0;
            if (t[i] > t[j]) {
                std::swap(t[i], t[j]);
                sign = -sign;
            }
        }
    return sign;
}

} // namespace

std::vector<std::vector<int>> increasing_tuples(int dim, int arity) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(arity);
    for (int i = 0; i < arity; ++i) t[i] = i;
    if (arity > dim) return out;
    while (true) {
        out.push_back(t);
        int i = arity - 1;
        while (i >= 0 && t[i] == dim - arity + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < arity; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

Cochain::Cochain(int arity, int dim, const Field& f, bool equivariance_required)
    : arity_(arity), dim_(dim), field_(f), equivariance_required_(equivariance_required) {
    if (arity < 1) throw domain_error("cochain arity must be >= 1");
}

void Cochain::set(const std::vector<int>& tuple, const Vec& value) {
    if (int(tuple.size()) != arity_) throw domain_error("cochain tuple arity mismatch");
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] >= tuple[i + 1]) throw domain_error("cochain tuple must be strictly increasing");
    if (!tuple.empty() && (tuple.front() < 0 || tuple.back() >= dim_))
        throw domain_error("cochain tuple index out of range");
    if (int(value.size()) != dim_) throw domain_error("cochain value length mismatch");
    if (vec_is_zero(value))
        values_.erase(tuple);
    else
        values_[tuple] = value;
}

Vec Cochain::eval_basis(const std::vector<int>& tuple) const {
    if (int(tuple.size()) != arity_) throw domain_error("cochain tuple arity mismatch");
    std::vector<int> t = tuple;
    int sign = sort_sign(t);
    if (sign == 0) return vec_zero(field_, dim_);
    auto it = values_.find(t);
    if (it == values_.end()) return vec_zero(field_, dim_);
    return sign > 0 ? it->second : vec_scale(-Scalar::one(field_), it->second);
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    if (int(args.size()) != arity_) throw domain_error("cochain argument count mismatch");
    for (const auto& a : args)
        if (int(a.size()) != dim_) throw domain_error("cochain argument length mismatch");
    Vec out = vec_zero(field_, dim_);
    // Expand over the (sparse) support: for each supported increasing tuple T
    // and permutation-free expansion, add det-like products. Since values are
    // alternating, sum over all increasing tuples of the minor determinant of
    // the argument coordinates.
    for (const auto& [tuple, value] : values_) {
        // minor: rows = args, cols = tuple indices
        Matrix m(arity_, arity_, field_);
        for (int r = 0; r < arity_; ++r)
            for (int c = 0; c < arity_; ++c) m.at(r, c) = args[r][tuple[c]];
        Scalar d = det(m);
        if (!d.is_zero()) out = vec_add(out, vec_scale(d, value));
    }
    return out;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (arity_ != o.arity_ || dim_ != o.dim_ || field_ != o.field_)
        throw domain_error("cochain shape mismatch");
    Cochain r = *this;
    for (const auto& [t, v] : o.values_) {
        auto it = r.values_.find(t);
        if (it == r.values_.end())
            r.values_[t] = v;
        else {
            it->second = vec_add(it->second, v);
            if (vec_is_zero(it->second)) r.values_.erase(it);
        }
    }
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    return *this + o.scaled(-Scalar::one(field_));
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain r(arity_, dim_, field_, equivariance_required_);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : values_) r.values_[t] = vec_scale(c, v);
    return r;
}

bool Cochain::is_zero() const { return values_.empty(); }

bool Cochain::operator==(const Cochain& o) const {
    return arity_ == o.arity_ && dim_ == o.dim_ && field_ == o.field_ && values_ == o.values_;
}

std::vector<std::vector<int>> Cochain::support() const {
    std::vector<std::vector<int>> out;
    for (const auto& [t, v] : values_) out.push_back(t);
    return out;
}

Cochain bracket_cochain(const HomAlgebra& g) {
    Cochain c(2, g.dim, g.field());
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) c.set({i, j}, g.bracket.pair(i, j));
    return c;
}

bool check_equivariance(const HomAlgebra& g, const Cochain& phi) {
    for (const auto& t : increasing_tuples(phi.dim(), phi.arity())) {
        std::vector<Vec> imgs;
        for (int i : t) imgs.push_back(g.alpha_of(i));
        Vec lhs = g.alpha_apply(phi.eval_basis(t));
        Vec rhs = phi.eval(imgs);
        if (lhs != rhs) return false;
    }
    return true;
}

Cochain coboundary(const HomAlgebra& g, const Cochain& phi) {
    if (phi.dim() != g.dim || phi.field() != g.field())
        throw domain_error("coboundary: cochain/algebra mismatch");
    int p = phi.arity();
    Matrix apow = g.alpha.pow(p - 1);
    Cochain out(p + 1, g.dim, g.field());
    for (const auto& t : increasing_tuples(g.dim, p + 1)) {
        Vec val = vec_zero(g.field(), g.dim);
        // first sum
        for (int k = 0; k <= p; ++k) {
            std::vector<int> rest;
            for (int m = 0; m <= p; ++m)
                if (m != k) rest.push_back(t[m]);
            Vec inner = phi.eval_basis(rest);
            if (vec_is_zero(inner)) continue;
            Vec term = bracket_eval(g, apow.col(t[k]), inner);
            if (k % 2) term = vec_scale(-Scalar::one(g.field()), term);
            val = vec_add(val, term);
        }
        // second sum
        for (int i = 0; i <= p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                Vec br = g.bracket.pair(t[i], t[j]);
                if (vec_is_zero(br)) continue;
                std::vector<Vec> args;
                args.push_back(br);
                for (int m = 0; m <= p; ++m)
                    if (m != i && m != j) args.push_back(g.alpha_of(t[m]));
                Vec term = phi.eval(args);
                if ((i + j) % 2) term = vec_scale(-Scalar::one(g.field()), term);
                val = vec_add(val, term);
            }
        out.set(t, val);
    }
    return out;
}

Cochain circle(const Matrix& alpha, const Cochain& phi1, const Cochain& phi2) {
    if (phi1.arity() != 2 || phi2.arity() != 2)
        throw domain_error("circle product requires two 2-cochains");
    if (phi1.dim() != phi2.dim() || phi1.field() != phi2.field())
        throw domain_error("circle product shape mismatch");
    int n = phi1.dim();
    Cochain out(3, n, phi1.field());
    for (const auto& t : increasing_tuples(n, 3)) {
        int x = t[0], y = t[1], z = t[2];
        Vec val = phi1.eval({phi2.eval_basis({x, y}), alpha.col(z)});
        val = vec_add(val, phi1.eval({phi2.eval_basis({z, x}), alpha.col(y)}));
        val = vec_add(val, phi1.eval({phi2.eval_basis({y, z}), alpha.col(x)}));
        out.set(t, val);
    }
    return out;
}

Cochain delta2_circle_form(const HomAlgebra& g, const Cochain& psi) {
    if (psi.arity() != 2) throw domain_error("delta2 circle form requires a 2-cochain");
    Cochain mu = bracket_cochain(g);
    return circle(g.alpha, mu, psi) + circle(g.alpha, psi, mu);
}

namespace {

// Coordinates of a cochain: (tuple index, vector coordinate), tuples lex.
Vec cochain_coords(const Cochain& c, const std::vector<std::vector<int>>& tuples) {
    Vec out = vec_zero(c.field(), int(tuples.size()) * c.dim());
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        Vec v = c.eval_basis(tuples[ti]);
        for (int k = 0; k < c.dim(); ++k) out[ti * c.dim() + k] = v[k];
    }
    return out;
}

Cochain cochain_from_coords(const Vec& coords, int arity, int dim, const Field& f,
                            const std::vector<std::vector<int>>& tuples) {
    Cochain c(arity, dim, f);
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        Vec v = vec_zero(f, dim);
        for (int k = 0; k < dim; ++k) v[k] = coords[ti * dim + k];
        c.set(tuples[ti], v);
    }
    return c;
}

Cochain apply_delta(const HomAlgebra& g, const Cochain& c, DeltaKind kind) {
    if (kind == DeltaKind::circle2) {
        if (c.arity() != 2) throw domain_error("circle delta only applies to 2-cochains");
        return delta2_circle_form(g, c);
    }
    return coboundary(g, c);
}

// Rows span the equivariance subspace of p-cochain coordinate space.
Matrix equivariance_space(const HomAlgebra& g, int p,
                          const std::vector<std::vector<int>>& tuples) {
    int n = g.dim;
    int space = int(tuples.size()) * n;
    // Constraint per tuple T and coordinate: alpha*phi(T) - phi(alpha T) = 0.
    // Build by columns: for each basis cochain e, its constraint vector.
    Matrix constraints(space, space, g.field());
    for (int col = 0; col < space; ++col) {
        Vec coords = vec_zero(g.field(), space);
        coords[col] = Scalar::one(g.field());
        Cochain e = cochain_from_coords(coords, p, n, g.field(), tuples);
        for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
            std::vector<Vec> imgs;
            for (int i : tuples[ti]) imgs.push_back(g.alpha_of(i));
            Vec defect = vec_sub(g.alpha_apply(e.eval_basis(tuples[ti])), e.eval(imgs));
            for (int k = 0; k < n; ++k) constraints.at(int(ti) * n + k, col) = defect[k];
        }
    }
    return kernel(constraints);
}

} // namespace

Matrix delta_matrix(const HomAlgebra& g, int p, DeltaKind kind) {
    auto tin = increasing_tuples(g.dim, p);
    auto tout = increasing_tuples(g.dim, p + 1);
    int cols = int(tin.size()) * g.dim;
    int rows = int(tout.size()) * g.dim;
    Matrix m(rows, cols, g.field());
    for (int col = 0; col < cols; ++col) {
        Vec coords = vec_zero(g.field(), cols);
        coords[col] = Scalar::one(g.field());
        Cochain e = cochain_from_coords(coords, p, g.dim, g.field(), tin);
        Vec img = cochain_coords(apply_delta(g, e, kind), tout);
        m.set_col(col, img);
    }
    return m;
}

CohomologyReport cohomology_report(const HomAlgebra& g, int p, bool equivariant, DeltaKind kind) {
    if (p < 1 || p > 3) throw domain_error("cohomology dimensions support p in {1,2,3}");
    if (kind == DeltaKind::circle2 && p != 2)
        throw domain_error("circle delta only applies to p = 2");
    CohomologyReport rep;
    rep.p = p;
    auto tin = increasing_tuples(g.dim, p);
    Matrix dp = delta_matrix(g, p, kind);
    Subspace zp = Subspace::span(kernel(dp));
    Matrix restrict_p(0, 0, g.field());
    if (equivariant) {
        restrict_p = equivariance_space(g, p, tin);
        Subspace ep = Subspace::span(restrict_p);
        rep.cochain_space_dim = ep.dim();
        zp = zp.intersect(ep);
    } else {
        rep.cochain_space_dim = int(tin.size()) * g.dim;
    }
    rep.cocycle_dim = zp.dim();

    if (p == 1) {
        rep.coboundary_dim = 0; // Eq. 3 defines no delta^0
        rep.dd_zero = true;
        rep.cohomology_dim = rep.cocycle_dim;
        return rep;
    }

    DeltaKind prev_kind = DeltaKind::literal; // delta^{p-1} is always the literal operator
    Matrix dprev = delta_matrix(g, p - 1, prev_kind);
    Subspace bp = Subspace::zero(int(increasing_tuples(g.dim, p).size()) * g.dim, g.field());
    if (equivariant) {
        auto tprev = increasing_tuples(g.dim, p - 1);
        Matrix eprev = equivariance_space(g, p - 1, tprev);
        std::vector<Vec> images;
        for (int i = 0; i < eprev.rows(); ++i) images.push_back(dprev.apply(eprev.row(i)));
        bp = Subspace::span(images, bp.ambient(), g.field());
        Subspace ep = Subspace::span(restrict_p);
        rep.image_in_restricted_space = ep.contains(bp);
    } else {
        bp = Subspace::span(dprev.transpose()); // row space of transpose = column space
    }
    rep.coboundary_dim = bp.dim();
    rep.dd_zero = (dp * dprev).is_zero();
    if (rep.dd_zero && (!equivariant || rep.image_in_restricted_space))
        rep.cohomology_dim = rep.cocycle_dim - rep.coboundary_dim;
    return rep;
}

int cocycle_space_dim(const HomAlgebra& g, int p, bool equivariant, DeltaKind kind) {
    return cohomology_report(g, p, equivariant, kind).cocycle_dim;
}

int coboundary_space_dim(const HomAlgebra& g, int p, bool equivariant, DeltaKind kind) {
    return cohomology_report(g, p, equivariant, kind).coboundary_dim;
}

int cohomology_dim(const HomAlgebra& g, int p, bool equivariant, DeltaKind kind) {
    CohomologyReport rep = cohomology_report(g, p, equivariant, kind);
    if (!rep.cohomology_dim)
        throw domain_error("cohomology_dim refused: delta o delta != 0 for this algebra "
                           "(dim Z = " + std::to_string(rep.cocycle_dim) +
                           ", dim B = " + std::to_string(rep.coboundary_dim) + ")");
    return *rep.cohomology_dim;
}

std::vector<Cochain> cocycle_basis(const HomAlgebra& g, int p, bool equivariant, DeltaKind kind) {
    auto tin = increasing_tuples(g.dim, p);
    Matrix dp = delta_matrix(g, p, kind);
    Subspace zp = Subspace::span(kernel(dp));
    if (equivariant) zp = zp.intersect(Subspace::span(equivariance_space(g, p, tin)));
    std::vector<Cochain> out;
    for (int i = 0; i < zp.dim(); ++i)
        out.push_back(cochain_from_coords(zp.basis().row(i), p, g.dim, g.field(), tin));
    return out;
}

} // namespace homlie
