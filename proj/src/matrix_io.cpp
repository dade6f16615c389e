#include "projspec/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "projspec/errors.hpp"

namespace projspec {

using nlohmann::json;

std::size_t MatrixFile::n() const {
  return kind == Kind::pencil ? matrices.size() - 1 : matrices.size();
}

std::size_t MatrixFile::d() const {
  return matrices.empty() ? 0 : static_cast<std::size_t>(matrices.front().rows());
}

MatrixFile parse_matrix_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("matrix file: ") + e.what());
  }
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key != "kind" && key != "n" && key != "d" && key != "matrices") {
        throw InvalidInput("matrix file: unknown key '" + key + "'");
      }
    }
    MatrixFile file;
    const std::string kind = doc.value("kind", std::string("pencil"));
    if (kind == "pencil") {
      file.kind = MatrixFile::Kind::pencil;
    } else if (kind == "tuple") {
      file.kind = MatrixFile::Kind::tuple;
    } else {
      throw InvalidInput("matrix file: kind must be 'pencil' or 'tuple', got '" + kind + "'");
    }
    const auto n = doc.at("n").get<long long>();
    const auto d = doc.at("d").get<long long>();
    if (n < 1 || d < 1) throw InvalidInput("matrix file: n and d must be positive");
    const auto& mats = doc.at("matrices");
    const auto expected = file.kind == MatrixFile::Kind::pencil ? n + 1 : n;
    if (!mats.is_array() || static_cast<long long>(mats.size()) != expected) {
      throw InvalidInput("matrix file: expected " + std::to_string(expected) + " matrices");
    }
    for (const auto& m : mats) {
      if (!m.is_array() || static_cast<long long>(m.size()) != d * d) {
        throw InvalidInput("matrix file: each matrix needs d*d = " + std::to_string(d * d) +
                           " entries");
      }
      ComplexMatrix a(d, d);
      for (long long k = 0; k < d * d; ++k) {
        const auto& e = m[k];
        if (!e.is_array() || e.size() != 2) {
          throw InvalidInput("matrix file: entries must be [re, im] pairs");
        }
        a(k / d, k % d) = Complex(e[0].get<double>(), e[1].get<double>());
      }
      if (!all_finite(a)) throw InvalidInput("matrix file: non-finite entry");
      file.matrices.push_back(std::move(a));
    }
    return file;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("matrix file: ") + e.what());
  }
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string format_matrix_file(const MatrixFile& file) {
  json doc;
  doc["kind"] = file.kind == MatrixFile::Kind::pencil ? "pencil" : "tuple";
  doc["n"] = file.n();
  doc["d"] = file.d();
  json mats = json::array();
  for (const auto& m : file.matrices) {
    json flat = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        flat.push_back({m(r, c).real(), m(r, c).imag()});
      }
    }
    mats.push_back(std::move(flat));
  }
  doc["matrices"] = std::move(mats);
  return doc.dump(1) + "\n";
}

void write_matrix_file(const MatrixFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write matrix file " + path.string());
  out << format_matrix_file(file);
  if (!out) throw IoError("failed writing matrix file " + path.string());
}

}  // namespace projspec
