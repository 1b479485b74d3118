#include "homlie/series.hpp"

namespace homlie {

namespace {

bool alpha_stable(const HomAlgebra& g, const Subspace& s) {
    for (int i = 0; i < s.dim(); ++i)
        if (!s.contains(g.alpha_apply(s.basis().row(i)))) return false;
    return true;
}

// Shared driver: term[0] = start, term[m+1] = step(term[m]), capped at
// dim(g) + 1 iterations (dimensions strictly decrease until stabilization).
template <typename Step>
SeriesReport iterate_series(const HomAlgebra& g, const Subspace& start, Step step) {
    SeriesReport rep;
    rep.terms.push_back(start);
    for (int m = 0; m <= g.dim + 1; ++m) {
        const Subspace& cur = rep.terms.back();
        if (cur.dim() == 0) break;
        Subspace next = step(cur);
        if (next == cur) {
            rep.stabilized_at = m;
            break;
        }
        rep.terms.push_back(next);
    }
    for (const auto& t : rep.terms) {
        rep.dims.push_back(t.dim());
        rep.alpha_stable.push_back(alpha_stable(g, t));
    }
    return rep;
}

} // namespace

Subspace bracket_span(const HomAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> vecs;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            vecs.push_back(bracket_eval(g, a.basis().row(i), b.basis().row(j)));
    return Subspace::span(vecs, g.dim, g.field());
}

SeriesReport central_series(const HomAlgebra& g) {
    Subspace whole = Subspace::full(g.dim, g.field());
    return iterate_series(g, whole, [&](const Subspace& cur) { return bracket_span(g, whole, cur); });
}

NilpotencyReport nilpotency(const HomAlgebra& g) {
    NilpotencyReport rep;
    rep.series = central_series(g);
    rep.all_terms_alpha_stable = true;
    for (bool s : rep.series.alpha_stable) rep.all_terms_alpha_stable &= s;
    bool reaches_zero = rep.series.terms.back().dim() == 0;
    if (!rep.all_terms_alpha_stable) {
        rep.reason = "a central-series term is not alpha-stable";
        return rep;
    }
    if (!reaches_zero) {
        rep.reason = "central series stabilizes at dimension " +
                     std::to_string(rep.series.terms.back().dim());
        return rep;
    }
    rep.nilpotent = true;
    rep.nilindex = int(rep.series.terms.size()) - 1;
    return rep;
}

bool is_nilpotent(const HomAlgebra& g) { return nilpotency(g).nilpotent; }

std::optional<int> nilindex(const HomAlgebra& g) { return nilpotency(g).nilindex; }

bool is_filiform(const HomAlgebra& g) {
    NilpotencyReport rep = nilpotency(g);
    if (!rep.nilpotent) return false;
    int n = g.dim;
    for (int k = 1; k <= n - 1; ++k) {
        int dim_k = k < int(rep.series.dims.size()) ? rep.series.dims[k] : 0;
        if (dim_k != n - k - 1) return false;
    }
    return true;
}

bool is_ideal(const HomAlgebra& g, const Subspace& I) {
    if (I.ambient() != g.dim) throw domain_error("ideal ambient mismatch");
    for (int i = 0; i < I.dim(); ++i) {
        if (!I.contains(g.alpha_apply(I.basis().row(i)))) return false;
        for (int x = 0; x < g.dim; ++x) {
            Vec e = vec_zero(g.field(), g.dim);
            e[x] = Scalar::one(g.field());
            if (!I.contains(bracket_eval(g, e, I.basis().row(i)))) return false;
        }
    }
    return true;
}

bool is_subalgebra(const HomAlgebra& g, const Subspace& I) {
    if (I.ambient() != g.dim) throw domain_error("subalgebra ambient mismatch");
    for (int i = 0; i < I.dim(); ++i) {
        if (!I.contains(g.alpha_apply(I.basis().row(i)))) return false;
        for (int j = i + 1; j < I.dim(); ++j)
            if (!I.contains(bracket_eval(g, I.basis().row(i), I.basis().row(j)))) return false;
    }
    return true;
}

SeriesReport derived_series(const HomAlgebra& g, const Subspace& I) {
    if (!is_ideal(g, I)) throw domain_error("derived series requires an ideal");
    return iterate_series(g, I, [&](const Subspace& cur) { return bracket_span(g, cur, cur); });
}

SeriesReport central_series_of_ideal(const HomAlgebra& g, const Subspace& I) {
    if (!is_ideal(g, I)) throw domain_error("ideal central series requires an ideal");
    return iterate_series(g, I, [&](const Subspace& cur) { return bracket_span(g, I, cur); });
}

bool is_solvable(const HomAlgebra& g) {
    SeriesReport rep = derived_series(g, Subspace::full(g.dim, g.field()));
    return rep.terms.back().dim() == 0;
}

} // namespace homlie
