#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qah/tasks.hpp"

namespace {

using qah::json;

json read_task_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qah::parse_error("cannot open task file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte offset; surface it as the location
        throw qah::parse_error(path + ": " + e.what());
    }
}

void emit(const json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << qah::render_report_text(report);
}

int run_compute(const std::string& path, const std::string& format, const qah::TaskOptions& opts,
                const std::string& force_op) {
    auto tf = read_task_file(path);
    if (!force_op.empty()) {
        if (!tf.contains("task")) tf["task"] = json::object();
        tf["task"]["op"] = force_op;
    }
    qah::Stopwatch watch;
    auto report = qah::finalize_report(qah::run_task_file(tf, opts), watch.ms());
    emit(report, format);
    return report.value("pass", false) ? 0 : 1;
}

int run_check_laws(const std::string& suite, std::uint64_t seed, std::size_t cases,
                   const std::string& format, const qah::TaskOptions& opts,
                   std::string witness_out) {
    qah::Stopwatch watch;
    qah::LawParams params{seed, cases, opts.resource_cap};
    auto run = qah::run_law_suite(suite, params);
    auto report = qah::law_run_to_json(run);
    report["tool"] = qah::tool_version;
    if (run.witness) {
        if (witness_out.empty())
            witness_out = "qah-witness-" + suite + "-" + std::to_string(seed) + ".json";
        std::ofstream out(witness_out);
        out << run.witness->dump(2) << "\n";
        report["witness_file"] = witness_out;
    }
    emit(qah::finalize_report(std::move(report), watch.ms()), format);
    return run.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qah: exact heart-valued homology over the seminormed pair model"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("QAH_FORMAT");
    int max_degree = -1;
    app.add_option("--max-degree", max_degree, "clamp computed degrees")->envname("QAH_MAX_DEGREE");
    std::size_t resource_cap = 100000;
    app.add_option("--resource-cap", resource_cap, "max entries of any bar object")
        ->envname("QAH_RESOURCE_CAP");

    std::string compute_file, les_file, duality_file;
    auto* compute = app.add_subcommand("compute", "run the task in a task file");
    compute->add_option("file", compute_file, "task file (JSON)")->required();

    std::string suite;
    std::uint64_t seed = 1;
    std::size_t cases = 20;
    std::string witness_out;
    auto* check = app.add_subcommand("check-laws", "run a seeded law suite");
    check->add_option("--suite", suite, "suite name")->required()->envname("QAH_SUITE");
    check->add_option("--seed", seed, "master seed")->envname("QAH_SEED");
    check->add_option("--cases", cases, "number of cases")->envname("QAH_CASES");
    check->add_option("--witness-out", witness_out, "path for the failing-instance task file");

    auto* les = app.add_subcommand("les", "long exact sequence of a coefficient sequence");
    les->add_option("file", les_file, "task file (JSON)")->required();

    auto* duality = app.add_subcommand("duality", "duality theorem checks for a module");
    duality->add_option("file", duality_file, "task file (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    qah::TaskOptions opts;
    if (max_degree >= 0) opts.max_degree = max_degree;
    opts.resource_cap = resource_cap;

    try {
        if (compute->parsed()) return run_compute(compute_file, format, opts, "");
        if (check->parsed()) return run_check_laws(suite, seed, cases, format, opts, witness_out);
        if (les->parsed()) return run_compute(les_file, format, opts, "les");
        if (duality->parsed()) return run_compute(duality_file, format, opts, "duality");
    } catch (const qah::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const qah::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
