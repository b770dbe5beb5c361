#include <doctest.h>

#include "commands.hpp"
#include "instance.hpp"

#include "fixtures.hpp"

#include <json.hpp>

#include <fstream>

using namespace catgr;
using cli::Options;
using cli::run_command;

namespace {

Options opts(std::string command, const std::string& file) {
    Options o;
    o.command = std::move(command);
    o.file = fixtures::gallery(file).string();
    return o;
}

nlohmann::json run_json(const Options& o) { return nlohmann::json::parse(run_command(o).out); }

std::string parse_error(std::string_view text) {
    try {
        cli::parse_instance(text, "inline.json");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        return e.message();
    }
    FAIL("expected ParseError");
    return {};
}

}  // namespace

TEST_SUITE("cli") {
TEST_CASE("every command passes on the coherent gallery") {
    for (const auto& file : fixtures::valid_gallery()) {
        for (const auto* cmd : {"validate", "gr", "algebra"}) {
            CAPTURE(file);
            CAPTURE(cmd);
            const auto out = run_command(opts(cmd, file));
            CHECK(out.exit_code == 0);
            CHECK(out.err.empty());
            const auto j = nlohmann::json::parse(out.out);
            CHECK(j["status"] == "pass");
            CHECK(j["command"] == cmd);
            CHECK(j["file"] == file);
            CHECK(j["findings"].empty());
        }
    }
}

TEST_CASE("broken μ is reported with its location") {
    const auto out = run_command(opts("validate", "a4_broken_mu.json"));
    CHECK(out.exit_code == 1);
    const auto j = nlohmann::json::parse(out.out);
    CHECK(j["status"] == "fail");
    REQUIRE(j["findings"].size() == 1);
    CHECK(j["findings"][0]["check"] == "rep1");
    CHECK(j["findings"][0]["location"] == "representation/rep1/(γ,β,α)/x=*");
    CHECK(j["findings"][0]["detail"] == "left leg [2], right leg [1]");

    const auto alg = run_command(opts("algebra", "a4_broken_mu.json"));
    CHECK(alg.exit_code == 1);
    CHECK(nlohmann::json::parse(alg.out)["associativity"] == "fail");
}

TEST_CASE("algebra output") {
    const auto j = run_json(opts("algebra", "z2_twisted.json"));
    CHECK(j["dimension"] == 2);
    CHECK(j["basis"] == nlohmann::json::array({"e|*:*|*:*|1", "s|*:*|*:*|1"}));
    CHECK(j["unit"] == "e|*:*|*:*|1");
    CHECK(j["table"][1]["products"][1] == "-e|*:*|*:*|1");
    CHECK(j["commutative"] == true);
    CHECK(j["center_rank"] == 2);
    CHECK(j["skew_oracle"] == "not-applicable");
    CHECK(run_json(opts("algebra", "z2_swap_skew.json"))["skew_oracle"] == "pass");

    auto fast = opts("algebra", "a3_constant.json");
    fast.exhaustive = false;
    CHECK(run_json(fast)["associativity"] == "skipped");
}

TEST_CASE("output is deterministic") {
    for (const auto* cmd : {"validate", "gr", "algebra", "equiv"}) {
        const auto a = run_command(opts(cmd, "a3_constant.json"));
        const auto b = run_command(opts(cmd, "a3_constant.json"));
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("csv emission") {
    auto o = opts("gr", "a2_constant.json");
    o.emit = cli::Emit::Csv;
    const auto out = run_command(o);
    CHECK(out.exit_code == 0);
    CHECK(out.out.rfind("row_basis,col_basis,product_coefficients\n", 0) == 0);
    CHECK(out.out.find("α|1:*|2:*|1,1_1|1:*|1:*|1,1\n") != std::string::npos);
    o.command = "algebra";
    CHECK(run_command(o).out.rfind("row_basis,col_basis,product_coefficients\n", 0) == 0);
}

TEST_CASE("equivalence directions") {
    for (const auto* dir : {"m2f", "f2m", "roundtrip", "endo"}) {
        CAPTURE(dir);
        auto o = opts("equiv", "a3_constant.json");
        o.direction = dir;
        const auto out = run_command(o);
        CHECK(out.exit_code == 0);
        CHECK(nlohmann::json::parse(out.out)["direction"] == dir);
    }
    auto o = opts("equiv", "a2_constant.json");
    o.direction = "endo";
    const auto j = run_json(o);
    CHECK(j["dimension"] == 3);
    CHECK(j["product_comparisons"] == 9);
    CHECK(j["endomorphism_check"] == "pass");
}

TEST_CASE("missing sections and bad files exit with 2") {
    auto o = opts("equiv", "empty.json");
    o.direction = "m2f";
    auto out = run_command(o);
    CHECK(out.exit_code == 2);
    CHECK(out.out.empty());
    CHECK(out.err.find("MissingSpec") != std::string::npos);

    out = run_command(opts("validate", "no_such_file.json"));
    CHECK(out.exit_code == 2);

    const auto path = std::filesystem::temp_directory_path() / "catgr_truncated.json";
    std::ofstream(path) << "{\"ring\": \"Q\", \"category\": ";
    Options t;
    t.command = "validate";
    t.file = path.string();
    out = run_command(t);
    CHECK(out.exit_code == 2);
    CHECK(out.err.find("line 1") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("ring override") {
    auto o = opts("algebra", "z2_twisted.json");
    o.ring = "GF(3)";
    const auto j = run_json(o);
    CHECK(j["ring"] == "GF(3)");
    CHECK(j["table"][1]["products"][1] == "2*e|*:*|*:*|1");

    o.ring = "GF(4)";
    CHECK(run_command(o).exit_code == 2);
    o.ring = "Z";
    CHECK(run_command(o).exit_code == 0);
    // 1/3 is not an integer
    auto a4 = opts("validate", "a4_constant.json");
    a4.ring = "Z";
    CHECK(run_command(a4).exit_code == 2);
}

TEST_CASE("parse diagnostics carry JSON paths") {
    CHECK(parse_error(R"({"category": {}})") == "at /: missing key 'ring'");
    CHECK(parse_error(R"({"ring": "Q", "category": {"path_category": {"vertices": ["a"],
        "arrows": [{"id": "f", "source": "a", "target": "b"}]}}})")
              == "at /category/path_category: arrow 'f' has an undeclared endpoint");
    CHECK(parse_error(R"({"ring": "Q", "category": {"path_category": {"vertices": ["a"],
        "arrows": [{"id": "f", "source": "a", "target": "a"}]}}})")
              .find("cycl") != std::string::npos);
    const std::string two = R"({"ring": "Q", "category": {"path_category": {"vertices": ["1", "2"],
        "arrows": [{"id": "α", "source": "1", "target": "2"}]}}, )";
    const auto inst = cli::parse_instance(two + R"("module": {"values": {"1": 1, "2": 1}, "actions": {"α": {"*": "x"}}}})", "m.json");
    const auto r = cli::build_representation(inst);
    try {
        cli::build_module(inst, r);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(e.message().find("/module/actions/α") != std::string::npos);
    }
}

TEST_CASE("explicit composition tables") {
    const auto inst = cli::parse_instance(R"({"ring": "Q", "category": {"objects": ["*"],
        "morphisms": [{"id": "e", "dom": "*", "cod": "*"}, {"id": "s", "dom": "*", "cod": "*"}],
        "identities": {"*": "e"}, "composition": [["s", "s", "e"]]},
        "representation": {"cocycle": [{"b": "s", "a": "s", "value": -1}]}})",
                                          "table.json");
    CHECK(validate_category(inst.category).ok());
    CHECK(inst.category == cyclic_group(2, {"e", "s"}));
    const auto r = cli::build_representation(inst);
    CHECK(validate_representation(*r).ok());
    CHECK_FALSE(is_strict(*r));
}
}
