#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "projspec/numeric.hpp"

namespace projspec {

/// Shared matrix file format, a JSON document:
///
///   { "kind": "pencil" | "tuple", "n": 2, "d": 2,
///     "matrices": [ [[re, im], [re, im], ...], ... ] }
///
/// Each matrix is a flat row-major list of d*d [re, im] pairs. A pencil
/// carries n+1 matrices A_0..A_n, a tuple carries n matrices A_1..A_n.
struct MatrixFile {
  enum class Kind { pencil, tuple };

  Kind kind = Kind::pencil;
  std::vector<ComplexMatrix> matrices;

  std::size_t n() const;
  std::size_t d() const;
};

MatrixFile parse_matrix_file(const std::string& text);
MatrixFile read_matrix_file(const std::filesystem::path& path);
std::string format_matrix_file(const MatrixFile& file);
void write_matrix_file(const MatrixFile& file, const std::filesystem::path& path);

}  // namespace projspec
