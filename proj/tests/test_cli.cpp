// Drives the selim binary end to end: happy paths against pinned outputs,
// exit codes for every error class, and byte-identical reruns on the
// bundled documents.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SELIM_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string docs_path(const std::string& name) {
    return std::string(SELIM_DOCS_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "selim_cli_tests";
    std::filesystem::create_directories(dir);
    const std::filesystem::path file = dir / name;
    std::ofstream out(file);
    out << content;
    return file.string();
}

} // namespace

TEST_CASE("bounds subcommands print exact values") {
    CHECK(run_cli("bounds tmne --players 3").output == "2\n");
    CHECK(run_cli("bounds tmne --players 8").output == "14833\n");
    CHECK(run_cli("bounds gf " + docs_path("tmne3_blocks.json")).output == "2\n");
    CHECK(run_cli("bounds product " + docs_path("bilinear_pair.json")).output == "2\n");
    CHECK(run_cli("bounds permanent-mv " + docs_path("scaled_segments.json")).output == "7\n");
    CHECK(run_cli("bounds mixed-area " + docs_path("square_and_segment.json")).output == "1\n");

    const std::string gf_doc = write_temp("gf_geometric.json", R"({
        "kind": "degree-matrix", "blocks": [2], "entries": [[3]]
    })");
    CHECK(run_cli("bounds gf " + gf_doc).output == "9\n");

    // documents also arrive on stdin
    CHECK(run_cli("bounds gf - < " + gf_doc).output == "9\n");
}

TEST_CASE("cross-method check passes on the bundled documents") {
    const RunResult all = run_cli("bounds gf --all " + docs_path("tmne3_blocks.json"));
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("agreement  ok") != std::string::npos);
    CHECK(run_cli("bounds tmne --players 6 --all").exit_code == 0);
    CHECK(run_cli("bounds mixed-area --all " + docs_path("square_and_segment.json")).exit_code == 0);
}

TEST_CASE("schema violations exit with code 2") {
    const std::string empty_entries = write_temp("empty_entries.json", R"({
        "kind": "degree-matrix", "blocks": [1], "entries": []
    })");
    CHECK(run_cli("bounds product " + empty_entries).exit_code == 2);

    const std::string bad_kind = write_temp("bad_kind.json", R"({
        "kind": "polygon-pair", "blocks": [1], "entries": [[1]]
    })");
    CHECK(run_cli("bounds product " + bad_kind).exit_code == 2);

    const std::string not_json = write_temp("not_json.json", "][");
    CHECK(run_cli("bounds product " + not_json).exit_code == 2);

    CHECK(run_cli("bounds product /nonexistent/path.json").exit_code == 2);
    CHECK(run_cli("game discriminant " + docs_path("parabola.json")).exit_code == 2);
    CHECK(run_cli("bounds tmne --players 0").exit_code == 2);

    // per-block form required by gf: a non-square entries matrix is rejected
    const std::string per_equation = write_temp("per_equation.json", R"({
        "kind": "degree-matrix", "blocks": [2, 1], "entries": [[1,1],[1,2],[0,1]]
    })");
    CHECK(run_cli("bounds gf " + per_equation).exit_code == 2);
    CHECK(run_cli("bounds product " + per_equation).exit_code == 0);
}

TEST_CASE("resultants: values, matrices, degenerate exit code 4") {
    CHECK(run_cli("resultant sylvester " + docs_path("sylvester_pair.json")).output == "0\n");
    CHECK(run_cli("resultant macaulay " + docs_path("linear_system.json")).output == "14\n");

    const RunResult matrix =
        run_cli("resultant macaulay --matrix-only " + docs_path("linear_system.json"));
    CHECK(matrix.exit_code == 0);
    CHECK(matrix.output.find("\"critical_degree\": 1") != std::string::npos);

    // degrees (1,1,2) with f0 missing x0: the 1x1 minor M' vanishes
    const std::string degenerate = write_temp("degenerate_macaulay.json", R"({
        "kind": "polynomial-system",
        "polys": [
            {"vars": ["x0","x1","x2"], "terms": [{"coeff": "1", "exps": [0,1,0]}, {"coeff": "1", "exps": [0,0,1]}]},
            {"vars": ["x0","x1","x2"], "terms": [{"coeff": "1", "exps": [1,0,0]}, {"coeff": "-1", "exps": [0,1,0]}]},
            {"vars": ["x0","x1","x2"], "terms": [{"coeff": "1", "exps": [2,0,0]}, {"coeff": "1", "exps": [0,1,1]}]}
        ]
    })");
    CHECK(run_cli("resultant macaulay " + degenerate).exit_code == 4);
}

TEST_CASE("game pipeline: build, discriminant, solve, double-root") {
    const RunResult build = run_cli("game build " + docs_path("game_2x2x2.json"));
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("player 1:") != std::string::npos);

    // build --json emits a bilinear-triple document that round-trips into
    // the discriminant and matches the payoff-tensor route
    const RunResult triple_json = run_cli("game build --json " + docs_path("game_2x2x2.json"));
    CHECK(triple_json.exit_code == 0);
    const std::string triple_file = write_temp("built_triple.json", triple_json.output);
    const RunResult via_triple = run_cli("game discriminant " + triple_file);
    const RunResult via_tensor = run_cli("game discriminant " + docs_path("game_2x2x2.json"));
    CHECK(via_triple.exit_code == 0);
    CHECK(via_triple.output == via_tensor.output);

    CHECK(run_cli("game discriminant " + docs_path("double_root_triple.json")).output == "0\n");
    const RunResult solve = run_cli("game solve " + docs_path("double_root_triple.json"));
    CHECK(solve.exit_code == 0);
    CHECK(solve.output.find("multiplicity 2") != std::string::npos);

    const RunResult regenerated = run_cli("game double-root --seed 0");
    CHECK(regenerated.exit_code == 0);

    // positive-dimensional instance: exit 4
    const std::string all_ones = write_temp("all_ones_triple.json", R"({
        "kind": "bilinear-triple",
        "a": [1, 1, 1, 1], "b": [1, 1, 1, 1], "c": [1, 1, 1, 1]
    })");
    CHECK(run_cli("game solve " + all_ones).exit_code == 4);
}

TEST_CASE("implicitize: equations, membership, support override, exit code 5") {
    CHECK(run_cli("implicitize " + docs_path("parabola.json")).output == "X^2 - Y\n");
    CHECK(run_cli("implicitize " + docs_path("twisted_cubic_plane.json")).output == "X^3 - Y^2\n");
    CHECK(run_cli("implicitize " + docs_path("twisted_cubic_plane.json") + " --test-point 1 1")
              .output == "true\n");
    CHECK(run_cli("implicitize " + docs_path("twisted_cubic_plane.json") + " --test-point 1 2")
              .output == "false\n");
    CHECK(run_cli("implicitize " + docs_path("parabola.json") + " --support-file " +
                  docs_path("parabola_support.json"))
              .output == "X^2 - Y\n");

    const std::string tiny_support = write_temp("tiny_support.json", R"({
        "points": [[0, 0], [1, 0], [0, 1]]
    })");
    CHECK(run_cli("implicitize " + docs_path("twisted_cubic_plane.json") + " --support-file " +
                  tiny_support)
              .exit_code == 5);
}

TEST_CASE("repeated runs are byte-identical on every bundled document") {
    const std::vector<std::string> commands{
        "bounds gf --all " + docs_path("tmne3_blocks.json"),
        "bounds product --json " + docs_path("bilinear_pair.json"),
        "bounds permanent-mv --json " + docs_path("scaled_segments.json"),
        "bounds mixed-area " + docs_path("square_and_segment.json"),
        "bounds tmne --players 7 --json",
        "resultant sylvester --matrix-only " + docs_path("sylvester_pair.json"),
        "resultant macaulay --json " + docs_path("linear_system.json"),
        "game build --json " + docs_path("game_2x2x2.json"),
        "game solve --json " + docs_path("game_2x2x2.json"),
        "game discriminant " + docs_path("double_root_triple.json"),
        "game double-root --seed 42",
        "implicitize --json " + docs_path("twisted_cubic_plane.json"),
    };
    for (const std::string& command : commands) {
        const RunResult first = run_cli(command);
        const RunResult second = run_cli(command);
        CHECK(first.exit_code == 0);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}
