#include "numrad/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace numrad {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

ComplexMatrix read_matrix_market(std::istream& in, const std::string& origin) {
    std::string header;
    if (!std::getline(in, header)) fail(origin + ": empty file");
    std::istringstream hs(header);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%MatrixMarket") fail(origin + ": malformed header (missing %%MatrixMarket banner)");
    if (lower(object) != "matrix" || lower(fmt) != "array") {
        fail(origin + ": malformed header (expected 'matrix array')");
    }
    if (lower(field) != "complex") fail(origin + ": malformed header (only complex field supported)");
    if (lower(symmetry) != "general") fail(origin + ": malformed header (only general symmetry supported)");

    std::string line;
    std::size_t rows = 0, cols = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        long long r = 0, c = 0;
        if (!(ls >> r >> c) || r <= 0 || c <= 0) fail(origin + ": malformed size line");
        rows = static_cast<std::size_t>(r);
        cols = static_cast<std::size_t>(c);
        break;
    }
    if (rows == 0) fail(origin + ": missing size line");

    // Token-wise strtod parsing so "nan"/"inf" entries are read and then
    // rejected by the finiteness check rather than as a stream failure.
    std::vector<double> scalars;
    scalars.reserve(2 * rows * cols);
    std::string token;
    while (in >> token) {
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || *end != '\0') {
            fail(origin + ": unparseable entry token '" + token + "'");
        }
        scalars.push_back(v);
    }
    if (scalars.size() % 2 != 0) fail(origin + ": odd scalar count; entries are re/im pairs");
    std::vector<cplx> entries;
    entries.reserve(scalars.size() / 2);
    for (std::size_t k = 0; k + 1 < scalars.size(); k += 2) {
        entries.emplace_back(scalars[k], scalars[k + 1]);
    }
    if (entries.size() != rows * cols) {
        fail(origin + ": entry count mismatch (expected " + std::to_string(rows * cols) + ", got " +
             std::to_string(entries.size()) + ")");
    }

    ComplexMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols; ++j) {         // column-major on disk
        for (std::size_t i = 0; i < rows; ++i, ++k) {
            m(i, j) = entries[k];
        }
    }
    if (!m.all_finite()) fail(origin + ": non-finite matrix entry");
    return m;
}

ComplexMatrix matrix_from_json(const json& doc, const std::string& origin) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data")) {
        fail(origin + ": JSON matrix must have rows, cols and data fields");
    }
    const auto rows = doc.at("rows").get<long long>();
    const auto cols = doc.at("cols").get<long long>();
    if (rows <= 0 || cols <= 0) fail(origin + ": matrix dimensions must be positive");
    const json& data = doc.at("data");
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols)) {
        fail(origin + ": entry count mismatch (expected " + std::to_string(rows * cols) + ", got " +
             std::to_string(data.size()) + ")");
    }
    ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t k = 0;
    for (const json& pair : data) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            fail(origin + ": entries must be [re, im] number pairs");
        }
        m.data()[k++] = cplx(pair[0].get<double>(), pair[1].get<double>());
    }
    if (!m.all_finite()) fail(origin + ": non-finite matrix entry");
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (const cplx& z : m.data()) data.push_back({z.real(), z.imag()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

}  // namespace

MatrixFormat format_from_path(const std::filesystem::path& path) {
    return lower(path.extension().string()) == ".json" ? MatrixFormat::Json
                                                       : MatrixFormat::MatrixMarket;
}

MatrixFormat format_from_name(const std::string& name) {
    const std::string k = lower(name);
    if (k == "json") return MatrixFormat::Json;
    if (k == "mm" || k == "mtx" || k == "matrix-market" || k == "matrix-market-array-complex") {
        return MatrixFormat::MatrixMarket;
    }
    throw std::runtime_error("unknown matrix format: " + name);
}

ComplexMatrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) fail(path.string() + ": cannot open file");
    if (format == MatrixFormat::MatrixMarket) {
        return read_matrix_market(in, path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(path.string() + ": invalid JSON (" + e.what() + ")");
    }
    return matrix_from_json(doc, path.string());
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
    return read_matrix(path, format_from_path(path));
}

void write_matrix(const ComplexMatrix& m, const std::filesystem::path& path, MatrixFormat format) {
    std::ofstream out(path);
    if (!out) fail(path.string() + ": cannot open file for writing");
    if (format == MatrixFormat::Json) {
        out << matrix_to_json(m).dump(2) << '\n';
    } else {
        out << "%%MatrixMarket matrix array complex general\n";
        out << m.rows() << ' ' << m.cols() << '\n';
        out.precision(17);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                out << m(i, j).real() << ' ' << m(i, j).imag() << '\n';
            }
        }
    }
    if (!out) fail(path.string() + ": write failed");
}

std::string matrix_to_json_string(const ComplexMatrix& m) { return matrix_to_json(m).dump(2); }

ComplexMatrix matrix_from_json_string(const std::string& text) {
    return matrix_from_json(json::parse(text), "<string>");
}

}  // namespace numrad
