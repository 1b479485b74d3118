#pragma once

#include <optional>

#include "homlie/algebra.hpp"

namespace homlie {

// Terms of a descending series with their dimensions and per-term
// alpha-stability flags. Terms weakly decrease and each contains the next.
struct SeriesReport {
    std::vector<Subspace> terms;
    std::vector<int> dims;
    std::vector<bool> alpha_stable;
    int stabilized_at = -1; // first index m with term[m+1] == term[m], or -1 if it hit zero
};

struct NilpotencyReport {
    bool nilpotent = false;
    std::optional<int> nilindex;
    bool all_terms_alpha_stable = false;
    std::string reason; // set when not nilpotent
    SeriesReport series;
};

// span{ [x, v] : x in g, v in V }.
Subspace bracket_span(const HomAlgebra& g, const Subspace& a, const Subspace& b);

// C^0 = g, C^{m+1} = [g, C^m]; iterated to stabilization or zero.
SeriesReport central_series(const HomAlgebra& g);

NilpotencyReport nilpotency(const HomAlgebra& g);
bool is_nilpotent(const HomAlgebra& g);
std::optional<int> nilindex(const HomAlgebra& g);

// Nilpotent with dim C^k = n - k - 1 for 1 <= k <= n-1.
bool is_filiform(const HomAlgebra& g);

// [g, I] in I and alpha(I) in I.
bool is_ideal(const HomAlgebra& g, const Subspace& I);
// [I, I] in I and alpha(I) in I (the closure reading; this is the notion
// under which the graph of a morphism is a subalgebra).
bool is_subalgebra(const HomAlgebra& g, const Subspace& I);

// D^0 = I, D^{r+1} = [D^r, D^r]. Requires I to be an ideal.
SeriesReport derived_series(const HomAlgebra& g, const Subspace& I);
// C^0(I) = I, C^{r+1}(I) = [I, C^r(I)]. Requires I to be an ideal.
SeriesReport central_series_of_ideal(const HomAlgebra& g, const Subspace& I);

bool is_solvable(const HomAlgebra& g);

} // namespace homlie
