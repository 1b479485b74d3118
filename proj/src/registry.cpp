#include "homlie/classification.hpp"
#include "homlie/series.hpp"

#include <algorithm>
#include <random>

namespace homlie {

Scalar ParamEnv::operator()(const std::string& name) const {
    auto it = vals_->find(name);
    if (it == vals_->end()) throw domain_error("missing parameter: " + name);
    return it->second;
}

namespace {

using Cell = Representative::Cell;
using Expr = std::function<Scalar(const ParamEnv&)>;

std::string rho_name(int src, int tgt) {
    return "rho" + std::to_string(src) + std::to_string(tgt);
}

// Incremental builder for one table entry.
struct Rep {
    Representative r;

    Rep(std::string name, int n, bool mult, std::string source) {
        r.name = std::move(name);
        r.n = n;
        r.multiplicative_table = mult;
        r.source = std::move(source);
        r.alpha_cells.assign(n + 1, std::vector<Cell>(n + 1));
    }

    Rep& psi(int k, int rr, long c = 1) {
        r.psi.push_back({k, rr, false, c, ""});
        return *this;
    }
    Rep& psi_param(int k, int rr, const std::string& p) {
        r.psi.push_back({k, rr, true, 0, p});
        declare(p);
        return *this;
    }
    Rep& declare(const std::string& p) {
        for (const auto& q : r.params)
            if (q == p) return *this;
        r.params.push_back(p);
        return *this;
    }
    Rep& nonzero(const std::string& p) {
        declare(p);
        r.nonzero_params.push_back(p);
        return *this;
    }
    Rep& sqrt5(const std::string& p) {
        declare(p);
        r.sqrt5_params.push_back(p);
        return *this;
    }
    // free parameter cell at (row, col); default name per the source
    // convention rho_{col,row}
    Rep& free(int row, int col, std::string name = "") {
        if (name.empty()) name = rho_name(col, row);
        r.alpha_cells[row][col] = Cell{Cell::Kind::free_param, name, nullptr};
        declare(name);
        return *this;
    }
    Rep& expr(int row, int col, const std::string& display, Expr e,
              const std::vector<std::string>& used) {
        r.alpha_cells[row][col] = Cell{Cell::Kind::expr, display, std::move(e)};
        for (const auto& p : used) declare(p);
        return *this;
    }
    // every lower-triangular cell free
    Rep& all_lower_free() {
        for (int row = 0; row <= r.n; ++row)
            for (int col = 0; col <= row; ++col) free(row, col);
        return *this;
    }
    Representative done() { return r; }
};

// ---- non-multiplicative tables ---------------------------------------------

Representative mu31() { return Rep("mu_3^1", 2, false, "dim-3 table").all_lower_free().done(); }
Representative mu41() { return Rep("mu_4^1", 3, false, "dim-4 table").all_lower_free().done(); }
Representative mu51() { return Rep("mu_5^1", 4, false, "dim-5 table").all_lower_free().done(); }
Representative mu52() {
    return Rep("mu_5^2", 4, false, "dim-5 table").psi(1, 4).all_lower_free().done();
}

Representative mu61() { return Rep("mu_6^1", 5, false, "dim-6 table").all_lower_free().done(); }

Representative mu62() {
    Rep b("mu_6^2", 5, false, "dim-6 table");
    b.psi(1, 4).psi(2, 5);
    for (int row = 0; row <= 2; ++row)
        for (int col = 0; col <= row; ++col) b.free(row, col);
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "rho00 - C11*rho01 - C10*rho11 - rho12",
           [](const ParamEnv& e) {
               return e("rho00") - e("C11") * e("rho01") - e("C10") * e("rho11") - e("rho12");
           },
           {"rho00", "C11", "rho01", "C10", "rho11", "rho12"});
    b.expr(3, 3, "C11*rho11", [](const ParamEnv& e) { return e("C11") * e("rho11"); },
           {"C11", "rho11"});
    for (int col = 0; col <= 4; ++col) b.free(4, col);
    for (int col = 0; col <= 5; ++col) b.free(5, col);
    return b.done();
}

Representative mu63() {
    Rep b("mu_6^3", 5, false, "dim-6 table");
    b.psi(1, 4).nonzero("C10");
    b.free(0, 0);
    b.free(1, 0);
    b.expr(1, 1, "rho00/C10", [](const ParamEnv& e) { return e("rho00") / e("C10"); },
           {"rho00", "C10"});
    for (int row = 2; row <= 5; ++row)
        for (int col = 0; col <= row; ++col) b.free(row, col);
    return b.done();
}

Representative mu64() {
    return Rep("mu_6^4", 5, false, "dim-6 table").psi(1, 5).all_lower_free().done();
}

Representative mu71() { return Rep("mu_7^1", 6, false, "dim-7 table").all_lower_free().done(); }

Representative mu72() {
    Rep b("mu_7^2", 6, false, "dim-7 table");
    b.psi(1, 4).psi_param(2, 6, "beta").nonzero("beta");
    b.expr(0, 0, "C10*rho11", [](const ParamEnv& e) { return e("C10") * e("rho11"); },
           {"C10", "rho11"});
    b.free(1, 0).free(1, 1);
    for (int col = 0; col <= 2; ++col) b.free(2, col);
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "-(beta*C11 - C20)*rho01/beta - rho12",
           [](const ParamEnv& e) {
               return -(e("beta") * e("C11") - e("C20")) * e("rho01") / e("beta") - e("rho12");
           },
           {"beta", "C11", "C20", "rho01", "rho12"});
    b.expr(3, 3, "(beta*C11 - C20 + C10^2)*rho11/beta",
           [](const ParamEnv& e) {
               return (e("beta") * e("C11") - e("C20") + e("C10") * e("C10")) * e("rho11") /
                      e("beta");
           },
           {"beta", "C11", "C20", "C10", "rho11"});
    for (int row = 4; row <= 6; ++row)
        for (int col = 0; col <= row; ++col) b.free(row, col);
    return b.done();
}

// Rows 4..6 of several dim-7 displays repeat the same symbol in columns 2
// and 3; transcribed literally.
void dim7_tail_rows(Rep& b) {
    b.free(4, 0).free(4, 1).free(4, 2, "rho34").free(4, 3, "rho34").free(4, 4);
    b.free(5, 0).free(5, 1).free(5, 2, "rho35").free(5, 3, "rho35").free(5, 4).free(5, 5);
    b.free(6, 0).free(6, 1).free(6, 2, "rho36").free(6, 3, "rho36").free(6, 4).free(6, 5).free(6, 6);
}

Representative mu73() {
    Rep b("mu_7^3", 6, false, "dim-7 table");
    b.psi(2, 6);
    for (int row = 0; row <= 2; ++row)
        for (int col = 0; col <= row; ++col) b.free(row, col);
    b.free(3, 0).free(3, 1).free(3, 2);
    b.expr(3, 3, "C11*rho11", [](const ParamEnv& e) { return e("C11") * e("rho11"); },
           {"C11", "rho11"});
    dim7_tail_rows(b);
    return b.done();
}

Representative mu74() {
    Rep b("mu_7^4", 6, false, "dim-7 table");
    b.psi(1, 5).psi(2, 6);
    for (int row = 0; row <= 2; ++row)
        for (int col = 0; col <= row; ++col) b.free(row, col);
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "rho00 + C11*rho11 - rho12",
           [](const ParamEnv& e) { return e("rho00") + e("C11") * e("rho11") - e("rho12"); },
           {"rho00", "C11", "rho11", "rho12"});
    b.expr(3, 3, "C11*rho11", [](const ParamEnv& e) { return e("C11") * e("rho11"); },
           {"C11", "rho11"});
    dim7_tail_rows(b);
    return b.done();
}

Representative mu75() {
    Rep b("mu_7^5", 6, false, "dim-7 table");
    b.psi(1, 5);
    b.expr(0, 0, "C10*rho11", [](const ParamEnv& e) { return e("C10") * e("rho11"); },
           {"C10", "rho11"});
    b.free(1, 0).free(1, 1);
    for (int col = 0; col <= 2; ++col) b.free(2, col);
    for (int col = 0; col <= 3; ++col) b.free(3, col);
    dim7_tail_rows(b);
    return b.done();
}

Representative mu76() {
    return Rep("mu_7^6", 6, false, "dim-7 table").psi(1, 6).all_lower_free().done();
}

// mu_7^7 and mu_7^8 share the twist pattern with two leading zero rows.
void dim7_nilrows_head(Rep& b) {
    // rows 0 and 1 entirely zero (default), then free rows
    for (int col = 0; col <= 2; ++col) b.free(2, col);
    for (int col = 0; col <= 3; ++col) b.free(3, col);
    dim7_tail_rows(b);
}

Representative mu77() {
    Rep b("mu_7^7", 6, false, "dim-7 table");
    b.psi(1, 4).psi(1, 6);
    dim7_nilrows_head(b);
    return b.done();
}

Representative mu78() {
    Rep b("mu_7^8", 6, false, "dim-7 table");
    b.psi(1, 4);
    dim7_nilrows_head(b);
    return b.done();
}

// ---- multiplicative tables --------------------------------------------------

Representative m31a() {
    Rep b("mu_3^1.m1", 2, true, "multiplicative dim-3 table");
    b.free(0, 0).free(1, 0).free(1, 1).free(2, 0).free(2, 1);
    b.expr(2, 2, "rho00*rho11", [](const ParamEnv& e) { return e("rho00") * e("rho11"); },
           {"rho00", "rho11"});
    return b.done();
}

Representative m31b() {
    Rep b("mu_3^1.m2", 2, true, "multiplicative dim-3 table");
    b.free(1, 0).free(1, 1).free(2, 0).free(2, 1);
    return b.done();
}

Representative m41a() {
    Rep b("mu_4^1.m1", 3, true, "multiplicative dim-4 table");
    b.free(0, 0).nonzero("rho00");
    b.free(1, 0);
    b.expr(1, 1, "rho22/rho00", [](const ParamEnv& e) { return e("rho22") / e("rho00"); },
           {"rho22", "rho00"});
    b.free(2, 0).free(2, 1).free(2, 2);
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "rho12*rho00", [](const ParamEnv& e) { return e("rho12") * e("rho00"); },
           {"rho12", "rho00"});
    b.expr(3, 3, "rho00*rho22", [](const ParamEnv& e) { return e("rho00") * e("rho22"); },
           {"rho00", "rho22"});
    return b.done();
}

Representative m41b() {
    Rep b("mu_4^1.m2", 3, true, "multiplicative dim-4 table");
    for (int row = 1; row <= 3; ++row) b.free(row, 0).free(row, 1);
    return b.done();
}

Representative m51a() {
    Rep b("mu_5^1.m1", 4, true, "multiplicative dim-5 table");
    b.free(0, 0).nonzero("rho00");
    b.free(1, 0);
    b.expr(1, 1, "rho22/rho00", [](const ParamEnv& e) { return e("rho22") / e("rho00"); },
           {"rho22", "rho00"});
    b.free(2, 0);
    b.expr(2, 1, "rho23/rho00", [](const ParamEnv& e) { return e("rho23") / e("rho00"); },
           {"rho23", "rho00"});
    b.free(2, 2);
    b.free(3, 0).free(3, 1).free(3, 2, "rho23");
    b.expr(3, 3, "rho00*rho22", [](const ParamEnv& e) { return e("rho00") * e("rho22"); },
           {"rho00", "rho22"});
    b.free(4, 0).free(4, 1);
    b.expr(4, 2, "rho00*rho13", [](const ParamEnv& e) { return e("rho00") * e("rho13"); },
           {"rho00", "rho13"});
    b.expr(4, 3, "rho00*rho23", [](const ParamEnv& e) { return e("rho00") * e("rho23"); },
           {"rho00", "rho23"});
    b.expr(4, 4, "rho00^2*rho22",
           [](const ParamEnv& e) { return e("rho00") * e("rho00") * e("rho22"); },
           {"rho00", "rho22"});
    return b.done();
}

Representative m51b() {
    Rep b("mu_5^1.m2", 4, true, "multiplicative dim-5 table");
    for (int row = 1; row <= 4; ++row) b.free(row, 0).free(row, 1);
    return b.done();
}

Representative m52a() {
    Rep b("mu_5^2.m1", 4, true, "multiplicative dim-5 table");
    b.psi(1, 4);
    for (int row = 1; row <= 4; ++row) b.free(row, 0).free(row, 1);
    b.expr(4, 2, "-rho11*rho02 + rho12*rho01",
           [](const ParamEnv& e) { return e("rho12") * e("rho01") - e("rho11") * e("rho02"); },
           {"rho11", "rho02", "rho12", "rho01"});
    return b.done();
}

Representative m52b() {
    Rep b("mu_5^2.m2", 4, true, "multiplicative dim-5 table");
    b.psi(1, 4);
    b.free(0, 0);
    b.free(1, 0);
    b.free(2, 0).free(2, 1);
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "rho00*rho12", [](const ParamEnv& e) { return e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    b.free(4, 0).free(4, 1);
    b.expr(4, 2, "rho01*rho12 + rho00*rho13",
           [](const ParamEnv& e) { return e("rho01") * e("rho12") + e("rho00") * e("rho13"); },
           {"rho01", "rho12", "rho00", "rho13"});
    b.expr(4, 3, "rho00^2*rho12",
           [](const ParamEnv& e) { return e("rho00") * e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    return b.done();
}

Representative m52c() {
    Rep b("mu_5^2.m3", 4, true, "multiplicative dim-5 table");
    b.psi(1, 4);
    auto pw = [](const ParamEnv& e, int k) { return e("rho00").pow(k); };
    b.free(0, 0);
    b.free(1, 0);
    b.expr(1, 1, "rho00^2", [pw](const ParamEnv& e) { return pw(e, 2); }, {"rho00"});
    b.free(2, 0).free(2, 1);
    b.expr(2, 2, "rho00^3", [pw](const ParamEnv& e) { return pw(e, 3); }, {"rho00"});
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "rho00*rho12", [](const ParamEnv& e) { return e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    b.expr(3, 3, "rho00^4", [pw](const ParamEnv& e) { return pw(e, 4); }, {"rho00"});
    b.free(4, 0).free(4, 1);
    b.expr(4, 2, "rho01*rho12 + rho00*rho13 - rho00^2*rho02",
           [](const ParamEnv& e) {
               return e("rho01") * e("rho12") + e("rho00") * e("rho13") -
                      e("rho00") * e("rho00") * e("rho02");
           },
           {"rho01", "rho12", "rho00", "rho13", "rho02"});
    b.expr(4, 3, "rho00^2*(rho00 + rho01 + rho12)",
           [](const ParamEnv& e) {
               return e("rho00") * e("rho00") * (e("rho00") + e("rho01") + e("rho12"));
           },
           {"rho00", "rho01", "rho12"});
    b.expr(4, 4, "rho00^5", [pw](const ParamEnv& e) { return pw(e, 5); }, {"rho00"});
    return b.done();
}

Representative m61a() {
    Rep b("mu_6^1.m1", 5, true, "multiplicative dim-6 table");
    b.free(0, 0).nonzero("rho00");
    b.free(1, 0);
    b.expr(1, 1, "rho22/rho00", [](const ParamEnv& e) { return e("rho22") / e("rho00"); },
           {"rho22", "rho00"});
    b.free(2, 0);
    b.expr(2, 1, "rho23/rho00", [](const ParamEnv& e) { return e("rho23") / e("rho00"); },
           {"rho23", "rho00"});
    b.free(2, 2);
    b.free(3, 0);
    b.expr(3, 1, "rho24/rho00", [](const ParamEnv& e) { return e("rho24") / e("rho00"); },
           {"rho24", "rho00"});
    b.free(3, 2, "rho23");
    // printed "rho00 rho_2"; completed to rho00*rho22 as in the dim-5 family
    b.expr(3, 3, "rho00*rho22", [](const ParamEnv& e) { return e("rho00") * e("rho22"); },
           {"rho00", "rho22"});
    b.free(4, 0).free(4, 1).free(4, 2, "rho24");
    b.expr(4, 3, "rho23*rho00", [](const ParamEnv& e) { return e("rho23") * e("rho00"); },
           {"rho23", "rho00"});
    b.expr(4, 4, "rho22*rho00^2",
           [](const ParamEnv& e) { return e("rho22") * e("rho00") * e("rho00"); },
           {"rho22", "rho00"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "rho14*rho00", [](const ParamEnv& e) { return e("rho14") * e("rho00"); },
           {"rho14", "rho00"});
    b.expr(5, 3, "rho24*rho00", [](const ParamEnv& e) { return e("rho24") * e("rho00"); },
           {"rho24", "rho00"});
    b.expr(5, 4, "rho23*rho00^2",
           [](const ParamEnv& e) { return e("rho23") * e("rho00") * e("rho00"); },
           {"rho23", "rho00"});
    b.expr(5, 5, "rho00^3*rho22",
           [](const ParamEnv& e) { return e("rho00").pow(3) * e("rho22"); }, {"rho00", "rho22"});
    return b.done();
}

Representative m61b() {
    Rep b("mu_6^1.m2", 5, true, "multiplicative dim-6 table");
    b.free(1, 0).free(1, 1);
    b.free(2, 0).free(2, 1);
    b.free(3, 0).free(3, 1, "rho31"); // symbol as printed
    b.free(4, 0).free(4, 1);
    b.free(5, 0).free(5, 1);
    return b.done();
}

Representative m62a() {
    Rep b("mu_6^2.m1", 5, true, "multiplicative dim-6 table");
    b.psi(1, 4).psi(2, 5);
    b.free(1, 0).free(1, 1);
    b.free(2, 0);
    b.expr(2, 1, "-C10*rho11", [](const ParamEnv& e) { return -(e("C10") * e("rho11")); },
           {"C10", "rho11"});
    b.free(3, 0).free(3, 1);
    b.free(4, 0).free(4, 1);
    b.expr(4, 2, "-rho11*(C10*rho01 + rho02)",
           [](const ParamEnv& e) {
               return -(e("rho11") * (e("C10") * e("rho01") + e("rho02")));
           },
           {"rho11", "C10", "rho01", "rho02"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "rho13*(C10*rho01 + rho02)",
           [](const ParamEnv& e) { return e("rho13") * (e("C10") * e("rho01") + e("rho02")); },
           {"rho13", "C10", "rho01", "rho02"});
    return b.done();
}

// The two golden-ratio families differ by the sign of sqrt(5).
Representative m62_golden(int idx, int sign) {
    Rep b("mu_6^2.m" + std::to_string(idx), 5, true, "multiplicative dim-6 table");
    b.psi(1, 4).psi(2, 5);
    b.sqrt5("s5");
    auto s5 = [sign](const ParamEnv& e) {
        return sign > 0 ? e("s5") : -e("s5");
    };
    auto half = [](const ParamEnv& e) { return Scalar::one(e.field()) / e.num(2); };
    b.expr(0, 0, "-(1+s5)/2", [s5, half](const ParamEnv& e) {
        return -(half(e) * (e.num(1) + s5(e)));
    }, {});
    b.free(1, 0).free(1, 1);
    b.free(2, 0);
    b.expr(2, 1, "(3+s5)/2",
           [s5, half](const ParamEnv& e) { return half(e) * (e.num(3) + s5(e)); }, {});
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "-2-s5", [s5](const ParamEnv& e) { return -(e.num(2) + s5(e)); }, {});
    b.free(4, 0).free(4, 1);
    b.expr(4, 2, "((3+s5)*rho01 - (1+s5)*rho31)/2",
           [s5, half](const ParamEnv& e) {
               return half(e) * ((e.num(3) + s5(e)) * e("rho01") -
                                 (e.num(1) + s5(e)) * e("rho31"));
           },
           {"rho01", "rho31"});
    b.expr(4, 3, "(7+3*s5)/2",
           [s5, half](const ParamEnv& e) { return half(e) * (e.num(7) + e.num(3) * s5(e)); }, {});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "(-(3+s5)*rho03 - 2*(C10*rho01+rho02)*rho31 - (1+s5)*rho14)/2",
           [s5, half](const ParamEnv& e) {
               return half(e) * (-(e.num(3) + s5(e)) * e("rho03") -
                                 e.num(2) * (e("C10") * e("rho01") + e("rho02")) * e("rho31") -
                                 (e.num(1) + s5(e)) * e("rho14"));
           },
           {"rho03", "C10", "rho01", "rho02", "rho31", "rho14"});
    b.expr(5, 3, "((3+s5)*rho13 - (4+2*s5)*rho02 - (4+2*s5)*(C10+1)*rho01)/2",
           [s5, half](const ParamEnv& e) {
               Scalar four_two = e.num(4) + e.num(2) * s5(e);
               return half(e) * ((e.num(3) + s5(e)) * e("rho13") - four_two * e("rho02") -
                                 four_two * (e("C10") + e.num(1)) * e("rho01"));
           },
           {"rho13", "rho02", "C10", "rho01"});
    return b.done();
}

Representative m63a() {
    Rep b("mu_6^3.m1", 5, true, "multiplicative dim-6 table");
    b.psi(1, 4);
    b.free(1, 0);
    b.free(2, 0).free(2, 1);
    b.free(3, 0).free(3, 1);
    b.free(4, 0).free(4, 1);
    b.expr(4, 2, "rho01*rho12", [](const ParamEnv& e) { return e("rho01") * e("rho12"); },
           {"rho01", "rho12"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "C10*rho01*rho13",
           [](const ParamEnv& e) { return e("C10") * e("rho01") * e("rho13"); },
           {"C10", "rho01", "rho13"});
    return b.done();
}

Representative m63b() {
    Rep b("mu_6^3.m2", 5, true, "multiplicative dim-6 table");
    b.psi(1, 4);
    b.nonzero("C10");
    auto c = [](const ParamEnv& e) { return e("C10"); };
    auto inv_pow = [c](const ParamEnv& e, int k) { return Scalar::one(e.field()) / c(e).pow(k); };
    // (1+C10)*rho01/((-1+C10)*C10^k)
    auto ladder = [c](const ParamEnv& e, int k) {
        return (e.num(1) + c(e)) * e("rho01") / ((c(e) - e.num(1)) * c(e).pow(k));
    };
    b.expr(0, 0, "1/C10", [inv_pow](const ParamEnv& e) { return inv_pow(e, 1); }, {});
    b.free(1, 0);
    b.expr(1, 1, "1/C10^2", [inv_pow](const ParamEnv& e) { return inv_pow(e, 2); }, {});
    b.expr(2, 0, "((1+C10)*rho01^2 + (C10^2-C10^3)*rho24 + C10*rho01^2 + C10^2*rho01^2 - rho13*C10)/(-1+C10)",
           [](const ParamEnv& e) {
               Scalar c10 = e("C10"), r01 = e("rho01");
               Scalar num = (e.num(1) + c10) * r01 * r01 +
                            (c10.pow(2) - c10.pow(3)) * e("rho24") + c10 * r01 * r01 +
                            c10.pow(2) * r01 * r01 - e("rho13") * c10;
               return num / (c10 - e.num(1));
           },
           {"rho01", "rho24", "rho13"});
    b.expr(2, 1, "(1+C10)*rho01/((-1+C10)*C10)",
           [ladder](const ParamEnv& e) { return ladder(e, 1); }, {"rho01"});
    b.expr(2, 2, "1/C10^3", [inv_pow](const ParamEnv& e) { return inv_pow(e, 3); }, {});
    b.free(3, 0).free(3, 1);
    b.expr(3, 2, "(1+C10)*rho01/((-1+C10)*C10^2)",
           [ladder](const ParamEnv& e) { return ladder(e, 2); }, {"rho01"});
    b.expr(3, 3, "1/C10^4", [inv_pow](const ParamEnv& e) { return inv_pow(e, 4); }, {});
    b.free(4, 0).free(4, 1).free(4, 2, "rho24");
    b.expr(4, 3, "2*rho01/((-1+C10)*C10^2)",
           [](const ParamEnv& e) {
               return e.num(2) * e("rho01") / ((e("C10") - e.num(1)) * e("C10").pow(2));
           },
           {"rho01"});
    b.expr(4, 4, "1/C10^5", [inv_pow](const ParamEnv& e) { return inv_pow(e, 5); }, {});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "(-rho03 + rho14 + rho13*rho01*C10^2)/C10",
           [](const ParamEnv& e) {
               return (-e("rho03") + e("rho14") + e("rho13") * e("rho01") * e("C10").pow(2)) /
                      e("C10");
           },
           {"rho03", "rho14", "rho13", "rho01"});
    b.expr(5, 3, "((1+C10)*rho01^2 + (-1+C10)*rho24)/((-1+C10)*C10)",
           [](const ParamEnv& e) {
               Scalar c10 = e("C10");
               return ((e.num(1) + c10) * e("rho01") * e("rho01") +
                       (c10 - e.num(1)) * e("rho24")) /
                      ((c10 - e.num(1)) * c10);
           },
           {"rho01", "rho24"});
    b.expr(5, 4, "(1+C10)*rho01/((-1+C10)*C10^2)",
           [ladder](const ParamEnv& e) { return ladder(e, 2); }, {"rho01"});
    b.expr(5, 5, "1/C10^6", [inv_pow](const ParamEnv& e) { return inv_pow(e, 6); }, {});
    return b.done();
}

Representative m64a() {
    Rep b("mu_6^4.m1", 5, true, "multiplicative dim-6 table");
    b.psi(1, 5);
    b.free(0, 0).nonzero("rho00");
    b.free(1, 0);
    b.free(2, 0).free(2, 1, "rho23"); // symbol as printed
    b.declare("rho12");
    b.free(3, 0);
    b.expr(3, 1, "rho24/rho00", [](const ParamEnv& e) { return e("rho24") / e("rho00"); },
           {"rho24", "rho00"});
    b.expr(3, 2, "rho00*rho12", [](const ParamEnv& e) { return e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    b.free(4, 0).free(4, 1).free(4, 2, "rho24");
    b.expr(4, 3, "rho12*rho00^2",
           [](const ParamEnv& e) { return e("rho12") * e("rho00").pow(2); }, {"rho12", "rho00"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "rho12*rho01 + rho14*rho00",
           [](const ParamEnv& e) { return e("rho12") * e("rho01") + e("rho14") * e("rho00"); },
           {"rho12", "rho01", "rho14", "rho00"});
    b.expr(5, 3, "rho24*rho00", [](const ParamEnv& e) { return e("rho24") * e("rho00"); },
           {"rho24", "rho00"});
    b.expr(5, 4, "rho12*rho00^3",
           [](const ParamEnv& e) { return e("rho12") * e("rho00").pow(3); }, {"rho12", "rho00"});
    return b.done();
}

Representative m64b() {
    Rep b("mu_6^4.m2", 5, true, "multiplicative dim-6 table");
    b.psi(1, 5);
    b.free(1, 0).free(1, 1);
    b.free(2, 0).free(2, 1);
    b.free(3, 0).free(3, 1, "rho31"); // symbol as printed
    b.free(4, 0).free(4, 1);
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "-rho11*rho02 + rho01*rho12",
           [](const ParamEnv& e) { return e("rho01") * e("rho12") - e("rho11") * e("rho02"); },
           {"rho11", "rho02", "rho01", "rho12"});
    return b.done();
}

Representative m64c() {
    Rep b("mu_6^4.m3", 5, true, "multiplicative dim-6 table");
    b.psi(1, 5);
    b.free(0, 0).nonzero("rho00");
    b.free(1, 0);
    b.expr(1, 1, "rho00^3", [](const ParamEnv& e) { return e("rho00").pow(3); }, {"rho00"});
    b.free(2, 0).free(2, 1);
    b.expr(2, 2, "rho00^4", [](const ParamEnv& e) { return e("rho00").pow(4); }, {"rho00"});
    b.free(3, 0);
    b.expr(3, 1, "rho24/rho00", [](const ParamEnv& e) { return e("rho24") / e("rho00"); },
           {"rho24", "rho00"});
    b.expr(3, 2, "rho00*rho12", [](const ParamEnv& e) { return e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    b.expr(3, 3, "rho00^5", [](const ParamEnv& e) { return e("rho00").pow(5); }, {"rho00"});
    b.free(4, 0).free(4, 1).free(4, 2, "rho24");
    b.expr(4, 3, "rho00^2*rho12",
           [](const ParamEnv& e) { return e("rho00").pow(2) * e("rho12"); }, {"rho00", "rho12"});
    b.expr(4, 4, "rho00^6", [](const ParamEnv& e) { return e("rho00").pow(6); }, {"rho00"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "-rho00^3*rho02 + rho14*rho00 + rho01*rho12",
           [](const ParamEnv& e) {
               return -(e("rho00").pow(3) * e("rho02")) + e("rho14") * e("rho00") +
                      e("rho01") * e("rho12");
           },
           {"rho00", "rho02", "rho14", "rho01", "rho12"});
    b.expr(5, 3, "rho00*(rho00^3*rho01 + rho24)",
           [](const ParamEnv& e) {
               return e("rho00") * (e("rho00").pow(3) * e("rho01") + e("rho24"));
           },
           {"rho00", "rho01", "rho24"});
    b.expr(5, 4, "rho00^3*rho12",
           [](const ParamEnv& e) { return e("rho00").pow(3) * e("rho12"); }, {"rho00", "rho12"});
    b.expr(5, 5, "rho00^7", [](const ParamEnv& e) { return e("rho00").pow(7); }, {"rho00"});
    return b.done();
}

Representative m64d() {
    Rep b("mu_6^4.m4", 5, true, "multiplicative dim-6 table");
    b.psi(1, 5);
    b.free(0, 0).nonzero("rho00");
    b.free(1, 0);
    b.expr(1, 1, "rho00^3", [](const ParamEnv& e) { return e("rho00").pow(3); }, {"rho00"});
    b.free(2, 0).free(2, 1);
    b.expr(2, 2, "rho00^4", [](const ParamEnv& e) { return e("rho00").pow(4); }, {"rho00"});
    b.free(3, 0);
    b.expr(3, 1, "rho24/rho00", [](const ParamEnv& e) { return e("rho24") / e("rho00"); },
           {"rho24", "rho00"});
    b.expr(3, 2, "rho00*rho12", [](const ParamEnv& e) { return e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    b.expr(3, 3, "rho00^5", [](const ParamEnv& e) { return e("rho00").pow(5); }, {"rho00"});
    b.free(4, 0).free(4, 1);
    // cell (4,2) is zero in this family
    b.expr(4, 3, "rho00^2*rho12",
           [](const ParamEnv& e) { return e("rho00").pow(2) * e("rho12"); }, {"rho00", "rho12"});
    b.expr(4, 4, "rho00^6", [](const ParamEnv& e) { return e("rho00").pow(6); }, {"rho00"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "-rho00^3*rho02 + rho14*rho00 + rho01*rho12",
           [](const ParamEnv& e) {
               return -(e("rho00").pow(3) * e("rho02")) + e("rho14") * e("rho00") +
                      e("rho01") * e("rho12");
           },
           {"rho00", "rho02", "rho14", "rho01", "rho12"});
    b.expr(5, 3, "rho00^4*rho01",
           [](const ParamEnv& e) { return e("rho00").pow(4) * e("rho01"); }, {"rho00", "rho01"});
    b.expr(5, 4, "rho00^3*rho12",
           [](const ParamEnv& e) { return e("rho00").pow(3) * e("rho12"); }, {"rho00", "rho12"});
    b.expr(5, 5, "rho00^7", [](const ParamEnv& e) { return e("rho00").pow(7); }, {"rho00"});
    return b.done();
}

Representative m64e() {
    Rep b("mu_6^4.m5", 5, true, "multiplicative dim-6 table");
    b.psi(1, 5);
    b.free(0, 0);
    b.free(1, 0);
    b.free(2, 0).free(2, 1);
    b.free(3, 0);
    b.expr(3, 2, "rho00*rho12", [](const ParamEnv& e) { return e("rho00") * e("rho12"); },
           {"rho00", "rho12"});
    b.free(4, 0).free(4, 1);
    b.expr(4, 3, "rho00^2*rho12",
           [](const ParamEnv& e) { return e("rho00").pow(2) * e("rho12"); }, {"rho00", "rho12"});
    b.free(5, 0).free(5, 1);
    b.expr(5, 2, "rho14*rho00 + rho01*rho12",
           [](const ParamEnv& e) { return e("rho14") * e("rho00") + e("rho01") * e("rho12"); },
           {"rho14", "rho00", "rho01", "rho12"});
    b.expr(5, 4, "rho00^3*rho12",
           [](const ParamEnv& e) { return e("rho00").pow(3) * e("rho12"); }, {"rho00", "rho12"});
    return b.done();
}

const std::vector<Representative>& all_entries() {
    static const std::vector<Representative> all = {
        mu31(), mu41(), mu51(), mu52(), mu61(), mu62(), mu63(), mu64(),
        mu71(), mu72(), mu73(), mu74(), mu75(), mu76(), mu77(), mu78(),
        m31a(), m31b(), m41a(), m41b(), m51a(), m51b(), m52a(), m52b(), m52c(),
        m61a(), m61b(), m62a(), m62_golden(2, +1), m62_golden(3, -1),
        m63a(), m63b(), m64a(), m64b(), m64c(), m64d(), m64e(),
    };
    return all;
}

} // namespace

std::vector<Representative> registry(int dim, bool multiplicative) {
    if (dim < 3 || dim > 7) throw domain_error("registry covers dimensions 3..7");
    if (multiplicative && dim == 7)
        throw domain_error("multiplicative dimension-7 tables are not provided by the source");
    std::vector<Representative> out;
    for (const auto& rep : all_entries())
        if (rep.n + 1 == dim && rep.multiplicative_table == multiplicative) out.push_back(rep);
    return out;
}

const Representative* registry_find(const std::string& name) {
    for (const auto& rep : all_entries())
        if (rep.name == name) return &rep;
    return nullptr;
}

HomAlgebra instantiate(const Representative& rep, const std::map<std::string, Scalar>& params,
                       const Field& f) {
    for (const auto& p : rep.params)
        if (!params.count(p)) throw domain_error(rep.name + ": missing parameter " + p);
    for (const auto& p : rep.nonzero_params)
        if (params.at(p).is_zero())
            throw domain_error(rep.name + ": parameter " + p + " must be nonzero");
    for (const auto& p : rep.sqrt5_params)
        if (params.at(p) * params.at(p) != Scalar::from_int(f, 5))
            throw domain_error(rep.name + ": parameter " + p + " must square to 5");
    ParamEnv env(params, f);
    int n = rep.n;
    Matrix a(n + 1, n + 1, f);
    for (int row = 0; row <= n; ++row)
        for (int col = 0; col <= n; ++col) {
            const auto& cell = rep.alpha_cells[row][col];
            switch (cell.kind) {
            case Cell::Kind::zero: break;
            case Cell::Kind::free_param: a.at(row, col) = env(cell.display); break;
            case Cell::Kind::expr: a.at(row, col) = cell.eval(env); break;
            }
        }
    PsiCoefficients coeffs(n);
    for (const auto& term : rep.psi) {
        Scalar c = term.is_param ? env(term.param) : Scalar::from_int(f, term.fixed);
        coeffs.set(term.k, term.r, c);
    }
    return assemble(n, coeffs, a);
}

std::optional<std::map<std::string, Scalar>> identity_params(const Representative& rep,
                                                             const Field& f) {
    if (!rep.sqrt5_params.empty()) return std::nullopt; // sqrt(5) has no rational value
    std::map<std::string, Scalar> params;
    for (const auto& p : rep.params) params[p] = Scalar::zero(f);
    // diagonal free cells 1, C-parameters and beta 1, everything else 0
    for (const auto& p : rep.params)
        if (p == "beta" || p[0] == 'C') params[p] = Scalar::one(f);
    for (int i = 0; i <= rep.n; ++i) {
        const auto& cell = rep.alpha_cells[i][i];
        if (cell.kind == Cell::Kind::free_param) params[cell.display] = Scalar::one(f);
    }
    try {
        HomAlgebra g = instantiate(rep, params, f);
        if (g.alpha.is_identity()) return params;
    } catch (const domain_error&) {
    }
    return std::nullopt;
}

VerifyReport verify_representative(const Representative& rep,
                                   const std::map<std::string, Scalar>& params, const Field& f) {
    HomAlgebra g = instantiate(rep, params, f);
    VerifyReport out;
    out.hom_jacobi = check_hom_jacobi(g);
    out.filiform = is_filiform(g);
    if (rep.multiplicative_table) {
        out.multiplicative_checked = true;
        out.multiplicative = check_multiplicative(g);
    }
    return out;
}

std::vector<AuditRow> audit_registry(int dim, bool multiplicative, int samples, unsigned seed) {
    std::vector<AuditRow> rows;
    std::mt19937 rng(seed);
    for (const auto& rep : registry(dim, multiplicative)) {
        AuditRow row;
        row.entry = rep.name;
        bool needs_sqrt5 = !rep.sqrt5_params.empty();
        // 5 is a square mod 11 (4^2 = 16 = 5), so those entries are audited there.
        Field f = needs_sqrt5 ? Field::prime(11) : Field::rationals();
        row.field = f.str();
        for (int s = 0; s < samples; ++s) {
            std::map<std::string, Scalar> params;
            bool made = false;
            for (int attempt = 0; attempt < 8 && !made; ++attempt) {
                params.clear();
                for (const auto& p : rep.params) {
                    long v = long(rng() % 7) - 3;
                    bool must_nonzero =
                        std::count(rep.nonzero_params.begin(), rep.nonzero_params.end(), p) > 0;
                    if (must_nonzero && v == 0) v = 1 + long(rng() % 3);
                    params[p] = Scalar::from_int(f, v);
                }
                for (const auto& p : rep.sqrt5_params) params[p] = Scalar::from_int(f, 4);
                try {
                    (void)instantiate(rep, params, f);
                    made = true;
                } catch (const domain_error&) {
                }
            }
            if (!made) {
                ++row.skipped;
                continue;
            }
            ++row.samples;
            VerifyReport v = verify_representative(rep, params, f);
            if (v.pass()) {
                ++row.pass;
            } else {
                if (!v.hom_jacobi) ++row.hom_jacobi_fail;
                if (!v.filiform) ++row.filiform_fail;
                if (v.multiplicative_checked && !v.multiplicative) ++row.multiplicative_fail;
                if (row.finding.empty()) {
                    row.finding = "params:";
                    for (const auto& [k, val] : params) row.finding += " " + k + "=" + val.str();
                }
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace homlie
