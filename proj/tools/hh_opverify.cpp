// hh-opverify: seeded verification campaigns for operator inequality chains,
// preinvexity checks, and the supporting functional-calculus laws on
// finite-dimensional Hermitian matrices.
//
//   hh-opverify run --suite chain --eta convex --fn square --dims 1,2,3
//                   --trials 500 --seed 42 --format jsonl --out report.jsonl
//   hh-opverify matrix check matrix.txt
//
// Exit codes: 0 all expectations met, 2 violations found where none were
// expected, 3 a falsification suite found no violation, 64 usage error.

#include "hhop/hhop.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kUsageError = 64;

std::vector<int> parse_dims(const std::string& csv) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) dims.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return dims;
}

int run_campaign(const hhop::SuiteConfig& config, const std::string& format,
                 const std::string& out_path) {
    const hhop::RunReport report = hhop::run_suite(config);
    const hhop::ReportFormat fmt = hhop::parse_report_format(format);
    if (out_path.empty()) {
        hhop::emit_report(report, fmt, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open '" << out_path << "' for writing\n";
            return kUsageError;
        }
        hhop::emit_report(report, fmt, out);
    }
    return report.summary.exit_code;
}

int check_matrix(const std::string& path) {
    try {
        const hhop::HermitianMatrix a = hhop::load_matrix(path);
        const hhop::SpectralDecomposition dec = hhop::eigh(a);
        std::cout << "ok dim=" << a.dim() << " min_eigenvalue="
                  << hhop::format_real17(dec.min_eigenvalue())
                  << " max_eigenvalue=" << hhop::format_real17(dec.max_eigenvalue())
                  << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "invalid matrix file: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of operator inequality chains and "
                 "preinvexity on Hermitian matrices"};
    app.require_subcommand(1);

    std::string suite, eta = "convex", fn = "square", dims_spec = "1,2,3,4";
    std::string format = "text", out_path;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = -1.0, a = -1.0, b = -1.0;
    int threads = 0;

    CLI::App* run = app.add_subcommand("run", "run a verification suite");
    run->add_option("--suite", suite, "suite name")->required();
    run->add_option("--eta", eta, "eta map: eta1, eta2, eta3, convex");
    run->add_option("--fn", fn,
                    "function: square, cube, exp, abs-neg, identity, "
                    "affine(a,b), constant(c)");
    run->add_option("--dims", dims_spec, "comma-separated dimensions in [1,16]");
    run->add_option("--trials", trials, "number of trials");
    run->add_option("--seed", seed, "campaign seed");
    run->add_option("--tol", tol, "tolerance override");
    run->add_option("--a", a, "left parameter in (0,1) (estimate, scalar-oracles)");
    run->add_option("--b", b, "right parameter in (0,1) (estimate, scalar-oracles)");
    run->add_option("--threads", threads,
                    "worker threads (default: HH_OPVERIFY_THREADS or 1)");
    run->add_option("--format", format, "report format: text or jsonl");
    run->add_option("--out", out_path, "write the report to a file");

    CLI::App* matrix = app.add_subcommand("matrix", "matrix file utilities");
    std::string matrix_path;
    CLI::App* check = matrix->add_subcommand("check", "validate a matrix file");
    check->add_option("file", matrix_path, "matrix text file")->required();
    matrix->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (run->parsed()) {
            hhop::SuiteConfig config;
            config.suite = suite;
            config.eta = eta;
            config.fn = fn;
            config.dims = parse_dims(dims_spec);
            config.trials = trials;
            config.seed = seed;
            config.tol = tol;
            config.a = a;
            config.b = b;
            config.threads = threads;
            return run_campaign(config, format, out_path);
        }
        return check_matrix(matrix_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
