#include "homlie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace homlie {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

long parse_long(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw input_error(std::string("bad ") + what + ": '" + s + "'");
    }
}

} // namespace

Scalar parse_scalar(const std::string& text, const Field& f) {
    if (text.empty()) throw input_error("empty scalar literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        if (!f.is_rational())
            throw input_error("fraction literal '" + text + "' in a prime-field file");
        long num = parse_long(text.substr(0, slash), "numerator");
        long den = parse_long(text.substr(slash + 1), "denominator");
        if (den == 0) throw input_error("zero denominator: '" + text + "'");
        return Scalar::rational(num, den);
    }
    long v = parse_long(text, "scalar");
    return f.is_rational() ? Scalar::rational(v, 1) : Scalar::residue(f, v);
}

HomAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int dim = -1;
    std::optional<Field> field;
    std::vector<std::string> labels;
    std::vector<std::tuple<int, int, std::vector<std::pair<int, std::string>>>> brackets;
    std::vector<std::vector<std::string>> alpha_rows;
    bool in_alpha = false;

    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (in_alpha) {
            alpha_rows.push_back(toks);
            if (int(alpha_rows.size()) == dim) in_alpha = false;
            continue;
        }
        const std::string& key = toks[0];
        if (key == "dim") {
            if (toks.size() != 2) throw input_error("dim expects one integer");
            dim = int(parse_long(toks[1], "dimension"));
            if (dim < 1) throw input_error("dimension must be positive");
        } else if (key == "field") {
            if (toks.size() != 2) throw input_error("field expects one tag");
            if (toks[1] == "Q")
                field = Field::rationals();
            else if (toks[1].rfind("Fp:", 0) == 0)
                field = Field::prime(parse_long(toks[1].substr(3), "prime"));
            else
                throw input_error("unknown field tag '" + toks[1] + "'");
        } else if (key == "labels") {
            labels.assign(toks.begin() + 1, toks.end());
        } else if (key == "bracket") {
            // bracket i j : k=v k=v ...
            if (toks.size() < 4 || toks[3] != ":")
                throw input_error("bracket expects 'bracket i j : k=v ...'");
            int i = int(parse_long(toks[1], "bracket index"));
            int j = int(parse_long(toks[2], "bracket index"));
            std::vector<std::pair<int, std::string>> coeffs;
            for (std::size_t t = 4; t < toks.size(); ++t) {
                auto eq = toks[t].find('=');
                if (eq == std::string::npos)
                    throw input_error("bad bracket coefficient '" + toks[t] + "'");
                coeffs.push_back({int(parse_long(toks[t].substr(0, eq), "coefficient index")),
                                  toks[t].substr(eq + 1)});
            }
            brackets.push_back({i, j, coeffs});
        } else if (key == "alpha") {
            if (toks.size() != 1) throw input_error("alpha takes no arguments on its line");
            if (dim < 0) throw input_error("alpha must come after dim");
            in_alpha = true;
        } else {
            throw input_error("unknown field '" + key + "'");
        }
    }

    if (dim < 0) throw input_error("missing dim");
    if (!field) throw input_error("missing field");
    if (alpha_rows.empty()) throw input_error("missing alpha");
    if (int(alpha_rows.size()) != dim) throw input_error("alpha expects exactly dim rows");
    if (!labels.empty() && int(labels.size()) != dim)
        throw input_error("labels expects exactly dim names");

    HomAlgebra g = make_algebra(dim, *field);
    g.labels = labels;
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j, coeffs] : brackets) {
        if (i < 0 || j < 0 || i >= dim || j >= dim) throw input_error("bracket index out of range");
        if (i >= j) throw input_error("bracket entries require i < j");
        if (!seen.insert({i, j}).second)
            throw input_error("duplicate bracket entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        Vec v = vec_zero(*field, dim);
        for (const auto& [k, lit] : coeffs) {
            if (k < 0 || k >= dim) throw input_error("bracket coefficient index out of range");
            try {
                v[k] = parse_scalar(lit, *field);
            } catch (const domain_error& e) {
                throw input_error(e.what());
            }
        }
        g.bracket.set(i, j, v);
    }
    Matrix a(dim, dim, *field);
    for (int r = 0; r < dim; ++r) {
        if (int(alpha_rows[r].size()) != dim) throw input_error("alpha row length mismatch");
        for (int c = 0; c < dim; ++c) {
            try {
                a.at(r, c) = parse_scalar(alpha_rows[r][c], *field);
            } catch (const domain_error& e) {
                throw input_error(e.what());
            }
        }
    }
    g.alpha = a;
    return g;
}

std::string serialize_algebra(const HomAlgebra& g) {
    std::ostringstream out;
    out << "dim " << g.dim << "\n";
    out << "field " << g.field().str() << "\n";
    if (!g.labels.empty()) {
        out << "labels";
        for (const auto& l : g.labels) out << " " << l;
        out << "\n";
    }
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec v = g.bracket.pair(i, j);
            if (vec_is_zero(v)) continue;
            out << "bracket " << i << " " << j << " :";
            for (int k = 0; k < g.dim; ++k)
                if (!v[k].is_zero()) out << " " << k << "=" << v[k].str();
            out << "\n";
        }
    out << "alpha\n";
    for (int r = 0; r < g.dim; ++r) {
        for (int c = 0; c < g.dim; ++c) out << (c ? " " : "") << g.alpha.at(r, c).str();
        out << "\n";
    }
    return out.str();
}

HomAlgebra load_algebra_file(const std::string& path) { return parse_algebra(read_file(path)); }

void save_algebra_file(const std::string& path, const HomAlgebra& g) {
    write_file(path, serialize_algebra(g));
}

Matrix parse_matrix_file_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int dim = -1;
    std::optional<Field> field;
    std::vector<std::vector<std::string>> rows;
    bool in_matrix = false;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (in_matrix) {
            rows.push_back(toks);
            if (int(rows.size()) == dim) in_matrix = false;
            continue;
        }
        if (toks[0] == "dim") {
            dim = int(parse_long(toks[1], "dimension"));
        } else if (toks[0] == "field") {
            if (toks[1] == "Q")
                field = Field::rationals();
            else if (toks[1].rfind("Fp:", 0) == 0)
                field = Field::prime(parse_long(toks[1].substr(3), "prime"));
            else
                throw input_error("unknown field tag '" + toks[1] + "'");
        } else if (toks[0] == "matrix") {
            if (dim < 0) throw input_error("matrix must come after dim");
            in_matrix = true;
        } else {
            throw input_error("unknown field '" + toks[0] + "' in map file");
        }
    }
    if (dim < 0 || !field) throw input_error("map file needs dim and field");
    if (int(rows.size()) != dim) throw input_error("matrix expects exactly dim rows");
    Matrix m(dim, dim, *field);
    for (int r = 0; r < dim; ++r) {
        if (int(rows[r].size()) != dim) throw input_error("matrix row length mismatch");
        for (int c = 0; c < dim; ++c) m.at(r, c) = parse_scalar(rows[r][c], *field);
    }
    return m;
}

Matrix load_matrix_file(const std::string& path) {
    return parse_matrix_file_text(read_file(path));
}

std::string serialize_matrix(const Matrix& m) {
    std::ostringstream out;
    out << "dim " << m.rows() << "\n";
    out << "field " << m.field().str() << "\n";
    out << "matrix\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).str();
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

} // namespace homlie
