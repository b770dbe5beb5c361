#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Representations of finite categories: coherence checks, Gr(R) and R[C]"};
    catgr::cli::Options opts;
    std::string emit = "json";
    std::string level = "exhaustive";
    std::string ring;
    bool timing = false;
    app.add_option("command", opts.command, "validate | gr | algebra | equiv")
        ->required()
        ->check(CLI::IsMember({"validate", "gr", "algebra", "equiv"}));
    app.add_option("file", opts.file, "instance file (JSON)")->required();
    app.add_option("--ring", ring, "override the ground ring: Z, Q or GF(p)");
    app.add_option("--emit", emit, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--check-level", level, "fast skips the associativity sweeps")
        ->check(CLI::IsMember({"fast", "exhaustive"}));
    app.add_option("--direction", opts.direction, "equiv only: m2f | f2m | roundtrip | endo")
        ->check(CLI::IsMember({"m2f", "f2m", "roundtrip", "endo"}));
    app.add_flag("--timing", timing, "print elapsed time to stderr");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!ring.empty()) opts.ring = ring;
    opts.emit = emit == "csv" ? catgr::cli::Emit::Csv : catgr::cli::Emit::Json;
    opts.exhaustive = level == "exhaustive";

    const auto start = std::chrono::steady_clock::now();
    const auto outcome = catgr::cli::run_command(opts);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    if (timing) std::cerr << "elapsed_ms: " << elapsed.count() << "\n";
    return outcome.exit_code;
}
