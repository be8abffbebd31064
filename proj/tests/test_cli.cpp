#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path() {
    const char* env = std::getenv("TOPOGRAPH_CLI");
    REQUIRE_MESSAGE(env != nullptr, "TOPOGRAPH_CLI must point at the binary");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with stdout captured; pass merge_stderr to fold stderr in.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string command = "\"" + cli_path() + "\" " + args;
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";

    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& filename, const std::string& content) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "topograph_cli_tests";
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / filename;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

const std::string kNineClasses = "classes=9\n"
                                 "class.1=A R\n"
                                 "class.2=B\n"
                                 "class.3=C I J L M N S U V W Z\n"
                                 "class.4=D O\n"
                                 "class.5=E F G T Y\n"
                                 "class.6=H K\n"
                                 "class.7=P\n"
                                 "class.8=Q\n"
                                 "class.9=X\n";

} // namespace

TEST_CASE("classify --builtin reproduces the classification") {
    RunResult r = run_cli("classify --builtin --format machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output == kNineClasses);
}

TEST_CASE("classify --with-enye appends a tenth class") {
    RunResult r = run_cli("classify --builtin --with-enye --format machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "classes=10\n" + kNineClasses.substr(10) + "class.10=Ñ\n");
}

TEST_CASE("classify --builtin accepts an explicit letter subset") {
    RunResult r = run_cli("classify --builtin A R B --format machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "classes=2\nclass.1=A R\nclass.2=B\n");
}

TEST_CASE("machine output is byte-stable across runs") {
    for (const char* args : {"classify --builtin --format machine",
                             "signature --builtin H --format machine",
                             "distinguish --builtin A P --format machine",
                             "reduce --builtin B --format machine",
                             "classify --builtin --format json"}) {
        RunResult first = run_cli(args);
        RunResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("signature subcommand") {
    CHECK(run_cli("signature --builtin H --format machine").output == "1=4 2=inf 3=2\n");
    CHECK(run_cli("signature --builtin O --format machine").output == "1=inf\n");
    CHECK(run_cli("signature --builtin I --format machine").output == "1=2 2=inf\n");
    CHECK(run_cli("signature --builtin H").output ==
          "order signature of H: 1=4 2=inf 3=2\n");
    CHECK(run_cli("signature --builtin H --format json").output ==
          "{\"name\":\"H\",\"signature\":{\"1\":4,\"2\":\"inf\",\"3\":2}}\n");
}

TEST_CASE("distinguish subcommand") {
    CHECK(run_cli("distinguish --builtin A P --format machine").output ==
          "homeomorphic=false\nwitness=depth_k_max\ndepth=2\nlhs=4\nrhs=3\n");
    CHECK(run_cli("distinguish --builtin B O --format machine").output ==
          "homeomorphic=false\nwitness=depth_k_max\ndepth=2\nlhs=3\nrhs=2\n");
    CHECK(run_cli("distinguish --builtin D O --format machine").output ==
          "homeomorphic=true\ncircles=1\n");

    RunResult human = run_cli("distinguish --builtin A P");
    CHECK(human.exit_code == 0);
    CHECK(human.output == "not homeomorphic: M_2: 4 vs 3\n");

    RunResult enye = run_cli("distinguish --builtin Ñ N --format machine");
    CHECK(enye.output ==
          "homeomorphic=false\nwitness=component_count\nlhs=2\nrhs=1\n");

    CHECK(run_cli("distinguish --builtin A P --max-depth 5").exit_code == 2);
}

TEST_CASE("reduce subcommand") {
    CHECK(run_cli("reduce --builtin O --format machine").output == "g O\ncircles=1\n");

    RunResult b = run_cli("reduce --builtin B --format machine");
    CHECK(b.output == "g B\n"
                      "v u 0.25 0.95\n"
                      "v v 0.25 0.05\n"
                      "e e1 u v\n"
                      "e e2 u v\n"
                      "e e3 u v\n"
                      "circles=0\n");

    // a subdivided I reduces to a bare segment
    std::filesystem::path path =
        write_temp("isub.tgf", "g isub\nv a\nv m1\nv m2\nv b\ne e1 a m1\ne e2 m1 m2\ne e3 m2 b\n");
    RunResult r = run_cli("reduce --format machine \"" + path.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "g isub\nv a\nv b\ne e1 a b\ncircles=0\n");
}

TEST_CASE("file inputs: tgf and paths") {
    std::filesystem::path tgf = write_temp("ring.tgf", "g ring\nv a\ne e1 a a\n");
    RunResult one = run_cli("classify \"" + tgf.string() + "\" --format machine");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "classes=1\nclass.1=ring\n");

    // stroke starts are 1e-7 apart: inside the default tolerance, far
    // outside an explicit 1e-12
    std::filesystem::path paths = write_temp(
        "wye.paths", "0.5,0.55 0.1,1\n0.5000001,0.55 0.9,1\n0.5,0.5500001 0.5,0\n");
    RunResult wye = run_cli("signature \"" + paths.string() + "\" --format machine");
    CHECK(wye.exit_code == 0);
    CHECK(wye.output == "1=3 2=inf 3=1\n");

    // unmerged, the three segments are three pieces; every deletion keeps
    // the other two pieces around, so all orders shift up by two
    RunResult apart = run_cli("signature \"" + paths.string() + "\" --format machine --tol 1e-12");
    CHECK(apart.exit_code == 0);
    CHECK(apart.output == "3=6 4=inf\n");
}

TEST_CASE("exit codes and error reporting") {
    CHECK(run_cli("classify --builtin").exit_code == 0);
    CHECK(run_cli("signature --builtin Å").exit_code == 2);
    CHECK(run_cli("classify missing-file.tgf").exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);        // no inputs
    CHECK(run_cli("nonsense").exit_code == 2);        // unknown subcommand
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("signature --builtin I J").exit_code == 2); // too many inputs
    CHECK(run_cli("classify --builtin --format yaml").exit_code == 2);

    std::filesystem::path bad = write_temp("bad.tgf", "g t\nv a\ne e1 a zz\n");
    RunResult r = run_cli("classify \"" + bad.string() + "\"", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(r.output.find("dangling endpoint") != std::string::npos);
    // the message goes to stderr; stdout stays silent
    CHECK(run_cli("classify \"" + bad.string() + "\"").output.empty());

    std::filesystem::path dup_a = write_temp("dup_a.tgf", "g same\nv a\n");
    std::filesystem::path dup_b = write_temp("dup_b.tgf", "g same\nv a\n");
    CHECK(run_cli("classify \"" + dup_a.string() + "\" \"" + dup_b.string() + "\"").exit_code == 2);
}

int main(int argc, char** argv) {
    doctest::Context context(argc, argv);
    return context.run();
}
