#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "numrad/generators.hpp"
#include "numrad/matrix_io.hpp"
#include "support/helpers.hpp"

using namespace numrad;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "numrad_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("matrix market parsing is column-major") {
    const fs::path p = temp_file("jordan.mtx");
    write_text(p,
               "%%MatrixMarket matrix array complex general\n"
               "% a comment line\n"
               "2 2\n"
               "0 0\n0 0\n1 0\n0 0\n");
    CHECK(read_matrix(p) == testsup::jordan2());
}

TEST_CASE("json matrix parsing") {
    const fs::path p = temp_file("unit.json");
    write_text(p, R"({"rows":1,"cols":1,"data":[[0,1]]})");
    CHECK(read_matrix(p) == ComplexMatrix{{cplx(0.0, 1.0)}});
}

TEST_CASE("diagnosed error paths") {
    const fs::path count = temp_file("count.mtx");
    write_text(count,
               "%%MatrixMarket matrix array complex general\n2 2\n1 0\n0 0\n1 0\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_matrix(count)),
                         doctest::Contains("entry count mismatch"), std::runtime_error);

    const fs::path header = temp_file("header.mtx");
    write_text(header, "%%MatrixMarket matrix coordinate complex general\n2 2\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_matrix(header)),
                         doctest::Contains("malformed header"), std::runtime_error);

    const fs::path banner = temp_file("banner.mtx");
    write_text(banner, "MatrixMarket matrix array complex general\n1 1\n0 0\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_matrix(banner)),
                         doctest::Contains("malformed header"), std::runtime_error);

    const fs::path nonfinite = temp_file("nan.mtx");
    write_text(nonfinite, "%%MatrixMarket matrix array complex general\n1 1\nnan 0\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_matrix(nonfinite)),
                         doctest::Contains("non-finite"), std::runtime_error);

    const fs::path json_count = temp_file("count.json");
    write_text(json_count, R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[1,0]]})");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_matrix(json_count)),
                         doctest::Contains("entry count mismatch"), std::runtime_error);

    CHECK_THROWS_AS(static_cast<void>(read_matrix(temp_file("missing.mtx"))), std::runtime_error);
}

TEST_CASE("round trips are exact in both formats") {
    for (std::uint64_t seed : {1u, 2u}) {
        const ComplexMatrix m = generate({OperatorClass::General, 5, seed, 1.0});

        const fs::path pj = temp_file("roundtrip.json");
        write_matrix(m, pj, MatrixFormat::Json);
        CHECK(read_matrix(pj) == m);  // bit-exact

        const fs::path pm = temp_file("roundtrip.mtx");
        write_matrix(m, pm, MatrixFormat::MatrixMarket);
        CHECK(read_matrix(pm) == m);  // 17 significant digits reparse exactly
    }
}

TEST_CASE("format helpers") {
    CHECK(format_from_path("x.json") == MatrixFormat::Json);
    CHECK(format_from_path("x.mtx") == MatrixFormat::MatrixMarket);
    CHECK(format_from_name("mm") == MatrixFormat::MatrixMarket);
    CHECK(format_from_name("matrix-market-array-complex") == MatrixFormat::MatrixMarket);
    CHECK(format_from_name("json") == MatrixFormat::Json);
    CHECK_THROWS_AS(format_from_name("csv"), std::runtime_error);
}
