#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cmposet/cache.hpp"
#include "cmposet/lattice_posets.hpp"
#include "cmposet/partial_bases.hpp"
#include "cmposet/poset_io.hpp"
#include "cmposet/set_partitions.hpp"
#include "cmposet/stability.hpp"
#include "cmposet/suites.hpp"
#include "cmposet/utrees.hpp"
#include "cmposet/version.hpp"

using namespace cmposet;

namespace {

constexpr int exit_usage = 3;

struct BuildArgs {
    std::string builder;
    std::string ring = "p2";
    int genus = 2;
    int radical = 0;
    int size = 3;
    std::string cache_dir;
};

FinitePoset build_named(const BuildArgs& a) {
    const auto ring = ScalarRing::parse(a.ring);
    auto make = [&]() -> FinitePoset {
        const auto& b = a.builder;
        if (b == "U") return build_U(SymplecticModule::standard(ring, a.genus, a.radical)).poset;
        if (b == "I") return build_I(SymplecticModule::standard(ring, a.genus, a.radical)).poset;
        if (b == "D") return build_D(SymplecticModule::standard(ring, a.genus), false).poset;
        if (b == "D+") return build_D(SymplecticModule::standard(ring, a.genus), true).poset;
        if (b == "HU") return build_HU(a.genus, ring).poset;
        if (b == "O") return build_O(ring, a.size).poset;
        if (b == "partitions") return partitions_poset(a.size).poset;
        if (b == "T") return build_T(a.size).poset;
        if (b == "TD") return build_TD(SymplecticModule::standard(ring, a.genus)).poset;
        throw std::invalid_argument("unknown builder '" + b + "' (U, I, D, D+, HU, O, partitions, T, TD)");
    };
    if (a.cache_dir.empty()) return make();
    PosetCache cache(a.cache_dir);
    const CacheKey key{a.builder, ring.name(), a.genus, "radical=" + std::to_string(a.radical) + ";size=" + std::to_string(a.size)};
    return cache.get_or_build(key, make);
}

void add_build_options(CLI::App* cmd, BuildArgs& a) {
    cmd->add_option("builder", a.builder, "U, I, D, D+, HU, O, partitions, T or TD")->required();
    cmd->add_option("--ring", a.ring, "p2, p3, ... or Z");
    cmd->add_option("--genus", a.genus, "genus of the standard form")->check(CLI::NonNegativeNumber);
    cmd->add_option("--radical", a.radical, "rank of the radical (U, I)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--size", a.size, "n for O, |X| for partitions, |u| for T")->check(CLI::PositiveNumber);
    cmd->add_option("--cache", a.cache_dir, "cache directory");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Builds the lattice and decomposition posets and checks their connectivity."};
    app.set_version_flag("--version", library_version);
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string ring_text = "p2";
    std::string out_dir = "reports";
    std::string suite;
    for (const auto& name : suite_names()) {
        auto* cmd = app.add_subcommand(name, "run the " + name + " claim set");
        cmd->add_option("--ring", ring_text, "p2, p3, ... or Z");
        cmd->add_option("--genus", cfg.genus, "largest genus to build")->check(CLI::NonNegativeNumber);
        cmd->add_option("--budget", cfg.budget, "chain budget per complex")->check(CLI::PositiveNumber);
        cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", cfg.seed, "seed for random instances");
        cmd->add_option("--out", out_dir, "report directory");
        cmd->add_option("--cache", cfg.cache_dir, "cache directory");
        cmd->callback([&suite, name] { suite = name; });
    }

    BuildArgs build;
    std::string format = "text";
    std::string out_file;
    auto* exp = app.add_subcommand("export", "write a poset or its chain complex");
    add_build_options(exp, build);
    exp->add_option("--format", format, "text, structured, dot or triplets")
        ->check(CLI::IsMember({"text", "structured", "dot", "triplets"}));
    exp->add_option("--out", out_file, "output file (stdout by default)");

    BuildArgs hom;
    auto* homology = app.add_subcommand("homology", "print the reduced integer homology of a poset");
    add_build_options(homology, hom);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and --version exit 0; every other parse failure is a usage error
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (!suite.empty()) {
            cfg.ring = ScalarRing::parse(ring_text);
            const auto report = run_suite(suite, cfg);
            const auto path = write_report(report, out_dir);
            for (const auto& c : report.claims)
                std::cout << to_string(c.verdict) << "  " << c.id << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
            std::cout << suite << ": " << to_string(report.overall()) << "; report in " << path << '\n';
            return exit_code(report.overall());
        }
        if (exp->parsed()) {
            const auto p = build_named(build);
            if (format == "text") emit(write_text(p), out_file);
            else if (format == "structured") emit(to_json(p).dump(2) + "\n", out_file);
            else if (format == "dot") emit(write_dot(p), out_file);
            else emit(write_complex(OrderComplex(p)), out_file);
            return 0;
        }
        if (homology->parsed()) {
            const auto p = build_named(hom);
            std::cout << to_json(reduced_homology(p)).dump(2) << '\n';
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(VerdictStatus::inconclusive);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
