#pragma once

#include <string>

#include "homlie/algebra.hpp"

namespace homlie {

// Scalar literal: "p/q" or "p" over Q; decimal residue over F_p.
Scalar parse_scalar(const std::string& text, const Field& f);

// Algebra file format, one statement per line:
//   dim <n>
//   field Q | Fp:<prime>
//   labels <name> ...            (optional)
//   bracket <i> <j> : <k>=<scalar> ...   (i < j; omitted pairs are zero)
//   alpha                        (followed by n rows of n scalar literals;
//                                 row i = coefficients of x_i in the images,
//                                 column j = alpha(x_j))
// '#' starts a comment. Unknown fields and duplicate (i,j) entries are errors.
HomAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const HomAlgebra& g);

HomAlgebra load_algebra_file(const std::string& path);
void save_algebra_file(const std::string& path, const HomAlgebra& g);

// Map file: dim, field, then "matrix" followed by n rows (same conventions).
Matrix parse_matrix_file_text(const std::string& text);
Matrix load_matrix_file(const std::string& path);
std::string serialize_matrix(const Matrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace homlie
