#include "sfwm/cli/export.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "sfwm/cli/csv.hpp"
#include "sfwm/errors.hpp"

namespace sfwm::cli {

void write_matrix(std::ostream& out, const JointAmplitudeMatrix& matrix, MatrixFormat format) {
  out << (format == MatrixFormat::triplets ? "row_coord,col_coord,re,im\n" : "row_coord,col_coord,magnitude,phase\n");
  const ComplexMatrix& v = matrix.values();
  const RealVector rows = matrix.signal_axis().coordinates();
  const RealVector cols = matrix.idler_axis().coordinates();
  std::string line;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const std::string row = format_double(rows(i));
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      const auto z = v(i, j);
      const double a = format == MatrixFormat::triplets ? z.real() : std::abs(z);
      const double b = format == MatrixFormat::triplets ? z.imag() : std::arg(z);
      line.clear();
      line.append(row).append(",").append(format_double(cols(j))).append(",");
      line.append(format_double(a)).append(",").append(format_double(b)).append("\n");
      out << line;
    }
  }
}

void export_matrix(const JointAmplitudeMatrix& matrix, const std::filesystem::path& path, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_matrix(out, matrix, format);
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

MatrixTriplets read_matrix_triplets(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "row_coord,col_coord,re,im") {
    throw IoError(path.string() + ": missing triplet header");
  }

  std::vector<double> row_of_entry;
  std::vector<double> col_of_entry;
  std::vector<std::complex<double>> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double fields[4];
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      const std::size_t comma = k < 3 ? line.find(',', pos) : line.size();
      if (comma == std::string::npos) throw IoError(path.string() + ": malformed line");
      try {
        fields[k] = std::stod(line.substr(pos, comma - pos));
      } catch (const std::exception&) {
        throw IoError(path.string() + ": malformed number");
      }
      pos = comma + 1;
    }
    row_of_entry.push_back(fields[0]);
    col_of_entry.push_back(fields[1]);
    entries.emplace_back(fields[2], fields[3]);
  }
  if (entries.empty()) throw IoError(path.string() + ": no entries");

  std::size_t n_cols = 1;
  while (n_cols < entries.size() && row_of_entry[n_cols] == row_of_entry[0]) ++n_cols;
  if (entries.size() % n_cols != 0) throw IoError(path.string() + ": ragged matrix");
  const std::size_t n_rows = entries.size() / n_cols;

  MatrixTriplets out;
  out.values.resize(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
  out.col_coords.assign(col_of_entry.begin(), col_of_entry.begin() + static_cast<std::ptrdiff_t>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i) {
    out.row_coords.push_back(row_of_entry[i * n_cols]);
    for (std::size_t j = 0; j < n_cols; ++j) {
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i * n_cols + j];
    }
  }
  return out;
}

}  // namespace sfwm::cli
