#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "sfwm/joint_amplitude.hpp"

namespace sfwm::cli {

/// `triplets`: header "row_coord,col_coord,re,im", one line per entry.
/// `polar`: header "row_coord,col_coord,magnitude,phase" with the phase from
/// atan2 in (-pi, pi].
/// Entries are written row-major: signal coordinate outer, idler inner.
enum class MatrixFormat { triplets, polar };

void write_matrix(std::ostream& out, const JointAmplitudeMatrix& matrix, MatrixFormat format);

/// Throws IoError if the file cannot be written.
void export_matrix(const JointAmplitudeMatrix& matrix, const std::filesystem::path& path, MatrixFormat format);

struct MatrixTriplets {
  std::vector<double> row_coords;
  std::vector<double> col_coords;
  ComplexMatrix values;
};

/// Reads a file in the triplet format. Values round-trip exactly.
/// Throws IoError for unreadable or malformed files.
MatrixTriplets read_matrix_triplets(const std::filesystem::path& path);

}  // namespace sfwm::cli
