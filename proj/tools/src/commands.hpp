#pragma once

#include <optional>
#include <string>

namespace catgr::cli {

enum class Emit { Json, Csv };

struct Options {
    std::string command;  ///< validate | gr | algebra | equiv
    std::string file;
    std::optional<std::string> ring;
    Emit emit = Emit::Json;
    bool exhaustive = true;
    std::string direction = "roundtrip";  ///< m2f | f2m | roundtrip | endo
};

/// Exit codes: 0 pass, 1 validation failure, 2 parse error or missing section.
struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

Outcome run_command(const Options& opts);

}  // namespace catgr::cli
