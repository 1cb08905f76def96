#pragma once

#include <filesystem>
#include <string>

#include "numrad/complex_matrix.hpp"

namespace numrad {

enum class MatrixFormat { MatrixMarket, Json };

/// Picks a format from the file extension: .json -> Json, everything else
/// (.mtx, .mm, ...) -> MatrixMarket.
MatrixFormat format_from_path(const std::filesystem::path& path);
MatrixFormat format_from_name(const std::string& name);  // "mm"/"matrix-market"/"json"

/// Reads a dense complex matrix.
///
/// Matrix Market: header "%%MatrixMarket matrix array complex general",
/// optional % comments, a "rows cols" size line, then rows*cols
/// "real imag" entries in column-major order.
///
/// JSON: {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
///
/// Malformed headers, entry-count mismatches and non-finite values each
/// produce a distinct std::runtime_error diagnostic.
ComplexMatrix read_matrix(const std::filesystem::path& path, MatrixFormat format);
ComplexMatrix read_matrix(const std::filesystem::path& path);  // format from extension

/// Writes in the chosen format. JSON round-trips bit-exactly; Matrix Market
/// uses 17 significant digits, which also reparses exactly.
void write_matrix(const ComplexMatrix& m, const std::filesystem::path& path, MatrixFormat format);

std::string matrix_to_json_string(const ComplexMatrix& m);
ComplexMatrix matrix_from_json_string(const std::string& text);

}  // namespace numrad
