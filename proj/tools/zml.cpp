// zml: experiment runner, invariant checker, zero exporter.
// Exit codes: 0 success, 1 check failure, 2 usage/config error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "zml/checks.hpp"
#include "zml/harness.hpp"
#include "zml/parallel.hpp"
#include "zml/zeta.hpp"

namespace {

int cmd_check(const std::string& suite) {
    std::vector<zml::CheckResult> results;
    try {
        results = zml::check_suite(suite);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\nusage: zml check --suite NAME\n", e.what());
        std::fprintf(stderr, "suites:");
        for (const auto& n : zml::check_suite_names())
            std::fprintf(stderr, " %s", n.c_str());
        std::fprintf(stderr, "\n");
        return 2;
    }
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %-55s measured %.3e  gate %.3e\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                    r.gate);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s: %zu checks, %s\n", suite.c_str(), results.size(),
                all_pass ? "all passed" : "FAILURES");
    return all_pass ? 0 : 1;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    std::ifstream in(config_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config %s\n",
                     config_path.c_str());
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    zml::ExperimentParams params;
    try {
        params = zml::from_config_json(text);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: config: %s\n", e.what());
        return 2;
    }
    auto report = zml::run_experiment(params);
    std::filesystem::create_directories(out_dir);
    auto path = std::filesystem::path(out_dir) / "report.json";
    std::ofstream(path) << report.to_json() << "\n";
    std::printf("report: %s\n", path.string().c_str());
    if (!report.hist.edges.empty()) {
        auto hpath = std::filesystem::path(out_dir) / "histogram.csv";
        std::ofstream(hpath) << report.hist.to_csv();
        std::printf("histogram: %s\n", hpath.string().c_str());
    }
    if (params.mode == "levinson")
        std::printf("kappa_bound %.6f  (raw %.6f, eps_E %.4f)\n", report.kappa,
                    report.kappa_raw, report.eps_E);
    else
        std::printf("mean-square ratio %.6f  (c1R %.6f)\n", report.ms_ratio,
                    report.ms_c1R);
    return 0;
}

int cmd_zeros(double t_lo, double t_hi, const std::string& out_path) {
    if (!(t_hi > t_lo) || t_lo < 0.0 || t_hi > 1e5) {
        std::fprintf(stderr,
                     "error: need 0 <= t-lo < t-hi <= 1e5 (got %g, %g)\n",
                     t_lo, t_hi);
        return 2;
    }
    auto zl = zml::find_zeros(t_lo, t_hi);
    std::string csv = zml::zero_list_csv(zl);
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        std::ofstream(out_path) << csv;
    }
    std::printf("count: %zu%s\n", zl.ordinates.size(),
                zl.count_warning ? " (count warning)" : "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerics workbench for critical-line zero experiments"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker thread count (0 = hardware)")
        ->envname("ZML_THREADS");

    auto* check = app.add_subcommand("check", "run an invariant suite");
    std::string suite = "all";
    check->add_option("--suite,suite", suite, "suite name")
        ->envname("ZML_SUITE");

    auto* run = app.add_subcommand("run", "run an experiment from a config");
    std::string config_path, out_dir = ".";
    run->add_option("--config", config_path, "JSON config path")
        ->envname("ZML_CONFIG")
        ->required();
    run->add_option("--out", out_dir, "output directory")->envname("ZML_OUT");

    auto* zeros = app.add_subcommand("zeros", "export critical-line ordinates");
    double t_lo = 0.0, t_hi = 0.0;
    std::string zeros_out;
    zeros->add_option("--t-lo", t_lo, "window start")->envname("ZML_T_LO");
    zeros->add_option("--t-hi", t_hi, "window end")
        ->envname("ZML_T_HI")
        ->required();
    zeros->add_option("--out", zeros_out, "CSV path (default stdout)")
        ->envname("ZML_OUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) zml::thread_count() = threads;

    try {
        if (check->parsed()) return cmd_check(suite);
        if (run->parsed()) return cmd_run(config_path, out_dir);
        if (zeros->parsed()) return cmd_zeros(t_lo, t_hi, zeros_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
