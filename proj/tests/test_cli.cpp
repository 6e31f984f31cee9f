#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "sokoarch-cli-test";

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + SOKOARCH_CLI_PATH + "\" " + args;
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("run, export-front and describe-level exit codes") {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
    const auto config = kWork / "config.json";
    const auto out = kWork / "run";
    write_file(config, R"({"generations": 4, "rng_seed": 2, "output_directory": ")" + out.string() + "\"}");

    CHECK(run_cli("run " + q(config) + " --quiet") == 0);
    CHECK(fs::exists(out / "seed-2" / "generations.jsonl"));
    CHECK(run_cli("run " + q(out / "manifest.json") + " --quiet --seed 7 --out " + q(kWork / "again")) == 0);
    CHECK(fs::exists(kWork / "again" / "seed-7" / "archives.json"));

    const auto front = kWork / "front.csv";
    CHECK(run_cli("export-front " + q(out) + " --which da --output " + q(front)) == 0);
    CHECK(read_file(front).rfind("id,f_emp,f_div,level,solution_length\n", 0) == 0);
    CHECK(run_cli("export-front " + q(out) + " --which union > " + q(kWork / "u.csv")) == 0);
    CHECK(run_cli("export-front " + q(kWork / "nowhere") + " 2> /dev/null") == 3);
    CHECK(run_cli("export-front " + q(out) + " --which both 2> /dev/null") == 2);

    const auto level = kWork / "level.txt";
    write_file(level, "#####\n#@$.#\n#   #\n#   #\n#####\n");
    const auto report = kWork / "report.txt";
    CHECK(run_cli("describe-level " + q(level) + " > " + q(report)) == 0);
    CHECK(read_file(report).find("verdict: Solvable") != std::string::npos);
    CHECK(run_cli("describe-level - --json < " + q(level) + " > " + q(report)) == 0);
    CHECK(read_file(report).find("\"solution\": \"R\"") != std::string::npos);

    write_file(level, "##\n#x#\n");
    const auto err = kWork / "err.txt";
    CHECK(run_cli("describe-level " + q(level) + " 2> " + q(err)) == 2);
    CHECK(read_file(err).find("row 1") != std::string::npos);

    write_file(config, R"({"width": 2})");
    CHECK(run_cli("run " + q(config) + " 2> " + q(err)) == 2);
    CHECK(read_file(err).find("width") != std::string::npos);
    CHECK(run_cli("run " + q(kWork / "missing.json") + " 2> /dev/null") == 2);
    CHECK(run_cli("frobnicate 2> /dev/null") == 2);
}
