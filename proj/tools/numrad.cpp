// numrad: numerical-radius toolkit CLI.
//
// Subcommands:
//   radius  certified bracket for omega(A)
//   bounds  all applicable norm/radius bounds for one operator
//   verify  randomized verification campaign over operator classes
//   fov     numerical-range boundary samples as CSV
//   gen     seeded random operator generation
//
// Exit codes: 0 success, 2 usage/IO/config error, 3 radius did not converge,
// 4 campaign found a VIOLATED verdict, 5 INCONCLUSIVE above threshold.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "numrad/campaign.hpp"
#include "numrad/classify.hpp"
#include "numrad/generators.hpp"
#include "numrad/inequalities.hpp"
#include "numrad/matrix_functions.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/numerical_range.hpp"
#include "numrad/version.hpp"

namespace {

using namespace numrad;

ComplexMatrix load(const std::string& path, const std::string& format) {
    if (format.empty()) return read_matrix(path);
    return read_matrix(path, format_from_name(format));
}

int run_radius(const std::string& path, const std::string& format, std::optional<double> tol) {
    const ComplexMatrix a = load(path, format);
    const double use_tol = tol ? *tol : default_radius_tol(a);
    const RadiusBracket bracket = numerical_radius(a, use_tol);

    std::cout.precision(15);
    std::cout << "lo          = " << bracket.enclosure.lo() << '\n'
              << "hi          = " << bracket.enclosure.hi() << '\n'
              << "width       = " << bracket.enclosure.width() << '\n'
              << "converged   = " << (bracket.converged ? "true" : "false") << '\n'
              << "angles_used = " << bracket.angles_used << '\n';
    return bracket.converged ? 0 : 3;
}

void print_bound(const std::string& name, const Interval& value, const std::string& relation) {
    std::cout.precision(12);
    std::cout << "  " << name;
    for (std::size_t pad = name.size(); pad < 32; ++pad) std::cout << ' ';
    std::cout << "[" << value.lo() << ", " << value.hi() << "]  " << relation << '\n';
}

int run_bounds(const std::string& path, const std::string& format) {
    const ComplexMatrix t = load(path, format);
    require_square(t, "bounds");

    CheckOptions opts;
    opts.omega_tol_factor = 1e-6;
    const double omega_tol = opts.omega_tol_factor * std::max(1.0, t.frobenius_norm());
    const Interval omega = numerical_radius(t, omega_tol).enclosure;

    const ComplexMatrix adj = t.adjoint();
    const Interval norm = op_norm(t);
    const Interval kitt = op_norm(adj * t + t * adj);
    const ComplexMatrix abs_t = abs_value(t);
    const ComplexMatrix abs_adj = abs_value(adj);
    const Interval rot_upper =
        numerical_radius(abs_t + abs_adj * cplx(0.0, 1.0), omega_tol).enclosure;
    const ComplexMatrix re = real_part(t);
    const ComplexMatrix im = imag_part(t);
    const Interval rev_lower =
        numerical_radius(re * re + (im * im) * cplx(0.0, 1.0), omega_tol).enclosure;

    std::cout << "omega bracket: [" << omega.lo() << ", " << omega.hi() << "]\n";
    std::cout << "bounds:\n";
    print_bound("half_norm_lower", norm.scaled(0.5), "lower bound on omega");
    print_bound("norm_upper", norm, "upper bound on omega");
    print_bound("kittaneh_lower", kitt.scaled(0.25), "lower bound on omega^2");
    print_bound("kittaneh_upper", kitt.scaled(0.5), "upper bound on omega^2");
    print_bound("rotation_refine_upper", rot_upper.square_nonneg().scaled(0.5),
                "upper bound on omega^2");
    print_bound("rotation_refine_lower", rev_lower.scaled(std::numbers::sqrt2 / 2.0),
                "lower bound on omega^2");

    if (classify(t).contains(OperatorClass::AccretiveDissipative)) {
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        print_bound("accretive_dissipative_lower", norm.scaled(inv_sqrt2),
                    "lower bound on omega");
        print_bound("cartesian_sum_lower", op_norm(re + im).scaled(inv_sqrt2),
                    "lower bound on omega");
    }
    return 0;
}

int run_verify(CampaignConfig config, const std::string& inequalities,
               const std::string& dims_text, const std::vector<std::string>& class_overrides,
               const std::string& out_path) {
    if (!inequalities.empty()) config.inequalities = parse_inequality_list(inequalities);
    if (!dims_text.empty()) {
        config.dims.clear();
        std::stringstream ss(dims_text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            const long long v = std::stoll(token);
            if (v <= 0) throw std::invalid_argument("dims must be positive");
            config.dims.push_back(static_cast<std::size_t>(v));
        }
    }
    // "ID=CLASS" or "ID=CLASS1,CLASS2" per entry.
    for (const std::string& entry : class_overrides) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("class override must look like ID=CLASS[,CLASS]: " + entry);
        }
        const InequalityId id = inequality_from_name(entry.substr(0, eq));
        std::vector<OperatorClass> classes;
        std::stringstream ss(entry.substr(eq + 1));
        std::string tag;
        while (std::getline(ss, tag, ',')) classes.push_back(class_from_name(tag));
        config.class_overrides[id] = std::move(classes);
    }
    if (const char* env = std::getenv("NUMRAD_SEED")) {
        config.master_seed = std::strtoull(env, nullptr, 10);
    }
    validate_config(config);

    const CampaignResult result = run_campaign(config);
    const std::string timestamp = iso8601_now();

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
        out << campaign_result_to_json_string(result, config, timestamp) << '\n';
        if (!out) throw std::runtime_error(out_path + ": write failed");
    }

    std::cout << "reports: " << result.total_reports() << "  (refined trials: "
              << result.refined_trials << ", wall " << result.wall_seconds << " s)\n";
    for (const auto& [id, counts] : result.summary) {
        std::cout << "  " << inequality_name(id) << ": confirmed " << counts.confirmed
                  << ", violated " << counts.violated << ", inconclusive " << counts.inconclusive
                  << '\n';
    }

    if (result.total_violated() > 0) {
        std::cerr << "VIOLATED verdicts found\n";
        return 4;
    }
    if (!result.passes(config.inconclusive_threshold)) {
        std::cerr << "INCONCLUSIVE fraction above threshold\n";
        return 5;
    }
    return 0;
}

int run_fov(const std::string& path, const std::string& format, std::size_t samples,
            const std::string& out_path) {
    const ComplexMatrix a = load(path, format);
    const FovBoundary boundary = fov_boundary(a, samples);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error(out_path + ": cannot open for writing");
        out = &file;
    }
    out->precision(17);
    *out << "theta,re,im,support_value\n";
    for (std::size_t k = 0; k < boundary.points.size(); ++k) {
        const SupportSample s = support_value(a, boundary.angles[k]);
        *out << boundary.angles[k] << ',' << boundary.points[k].real() << ','
             << boundary.points[k].imag() << ',' << s.value.mid() << '\n';
    }
    if (!*out) throw std::runtime_error("fov: write failed");
    return 0;
}

int run_gen(const std::string& class_name_text, std::size_t n, std::uint64_t seed, double scale,
            const std::string& out_path, const std::string& format) {
    std::string tag = class_name_text;
    for (char& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    const GeneratorSpec spec{class_from_name(tag), n, seed, scale};
    const ComplexMatrix m = generate(spec);
    const MatrixFormat fmt = format.empty() ? format_from_path(out_path) : format_from_name(format);
    write_matrix(m, out_path, fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical-radius toolkit"};
    app.set_version_flag("--version", numrad::kVersion);
    app.require_subcommand(1);

    std::string path, format, out_path, inequalities, dims_text, class_text;
    std::vector<std::string> class_overrides;
    std::optional<double> tol;
    std::size_t samples = 360;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double scale = 1.0;
    numrad::CampaignConfig config;

    auto* radius = app.add_subcommand("radius", "certified numerical-radius bracket");
    radius->add_option("path", path, "matrix file")->required();
    radius->add_option("--format", format, "mm|json (default: by extension)");
    radius->add_option("--tol", tol, "bracket width target");

    auto* bounds = app.add_subcommand("bounds", "single-operator radius/norm bounds");
    bounds->add_option("path", path, "matrix file")->required();
    bounds->add_option("--format", format, "mm|json (default: by extension)");

    auto* verify = app.add_subcommand("verify", "randomized inequality verification campaign");
    verify->add_option("--inequalities", inequalities, "comma-separated ids (default: all)");
    verify->add_option("--dims", dims_text, "comma-separated dimensions (default: 2,3,5,8,16)");
    verify->add_option("--trials", config.trials, "trials per (inequality, dim)");
    verify->add_option("--master-seed", config.master_seed, "campaign master seed");
    verify->add_option("--omega-tol-factor", config.omega_tol_factor,
                       "omega bracket tolerance factor");
    verify->add_option("--verdict-tol-factor", config.verdict_tol_factor,
                       "verdict tolerance factor");
    verify->add_option("--inconclusive-threshold", config.inconclusive_threshold,
                       "allowed INCONCLUSIVE fraction");
    verify->add_option("--classes", class_overrides,
                       "per-inequality class override, ID=CLASS[,CLASS] (repeatable)");
    verify->add_option("--out", out_path, "write JSON report here");

    auto* fov = app.add_subcommand("fov", "numerical-range boundary CSV");
    fov->add_option("path", path, "matrix file")->required();
    fov->add_option("--samples", samples, "boundary samples (>= 3)");
    fov->add_option("--format", format, "mm|json (default: by extension)");
    fov->add_option("--out", out_path, "CSV output path (default: stdout)");

    auto* gen = app.add_subcommand("gen", "generate a seeded random operator");
    gen->add_option("--class", class_text, "operator class tag")->required();
    gen->add_option("--n", n, "dimension")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--scale", scale, "scale factor");
    gen->add_option("--out", out_path, "output matrix file")->required();
    gen->add_option("--format", format, "mm|json (default: by extension)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (radius->parsed()) return run_radius(path, format, tol);
        if (bounds->parsed()) return run_bounds(path, format);
        if (verify->parsed())
            return run_verify(config, inequalities, dims_text, class_overrides, out_path);
        if (fov->parsed()) return run_fov(path, format, samples, out_path);
        if (gen->parsed()) return run_gen(class_text, n, seed, scale, out_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
