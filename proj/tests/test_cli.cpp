#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = QWIT_CLI_PATH;
const std::string kFixtures = QWIT_FIXTURES_DIR;

int run(const std::string& args, const std::string& out_file) {
    const std::string cmd = kCli + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("every subcommand runs green on the fixtures") {
    CHECK(run("bounds", "/tmp/qwit_cli_bounds.csv") == 0);
    CHECK(run("entropy --fixtures " + kFixtures, "/tmp/qwit_cli_entropy.csv") == 0);
    CHECK(run("coherence --fixtures " + kFixtures, "/tmp/qwit_cli_coh.csv") == 0);
    CHECK(run("chsh --fixtures " + kFixtures + " --samples 5000 --seed 11",
              "/tmp/qwit_cli_chsh.csv") == 0);
    CHECK(run("svetlichny", "/tmp/qwit_cli_sv.csv") == 0);
    CHECK(run("witness", "/tmp/qwit_cli_wit.csv") == 0);
    CHECK(run("tomography --seed 42", "/tmp/qwit_cli_tomo.csv") == 0);
}

TEST_CASE("csv headers are stable") {
    run("witness", "/tmp/qwit_cli_wit.csv");
    CHECK(first_line(slurp("/tmp/qwit_cli_wit.csv")) == "state,value,c_separable,violated");
    run("coherence --fixtures " + kFixtures, "/tmp/qwit_cli_coh.csv");
    CHECK(first_line(slurp("/tmp/qwit_cli_coh.csv")) == "theta_deg,d_h,phi_at_min_deg,error");
}

TEST_CASE("same seed gives byte-identical output") {
    REQUIRE(run("chsh --fixtures " + kFixtures + " --samples 2000 --seed 9 --json",
                "/tmp/qwit_cli_a.json") == 0);
    REQUIRE(run("chsh --fixtures " + kFixtures + " --samples 2000 --seed 9 --json",
                "/tmp/qwit_cli_b.json") == 0);
    CHECK(slurp("/tmp/qwit_cli_a.json") == slurp("/tmp/qwit_cli_b.json"));

    REQUIRE(run("tomography --seed 5", "/tmp/qwit_cli_t1.csv") == 0);
    REQUIRE(run("tomography --seed 5", "/tmp/qwit_cli_t2.csv") == 0);
    CHECK(slurp("/tmp/qwit_cli_t1.csv") == slurp("/tmp/qwit_cli_t2.csv"));

    // A different seed changes the bootstrap columns.
    REQUIRE(run("chsh --fixtures " + kFixtures + " --samples 2000 --seed 10 --json",
                "/tmp/qwit_cli_c.json") == 0);
    CHECK(slurp("/tmp/qwit_cli_a.json") != slurp("/tmp/qwit_cli_c.json"));
}

TEST_CASE("json flag switches the format") {
    REQUIRE(run("witness --json", "/tmp/qwit_cli_wit.json") == 0);
    std::string text = slurp("/tmp/qwit_cli_wit.json");
    CHECK(text.find('[') != std::string::npos);
    CHECK(text.find("\"state\"") != std::string::npos);
}

TEST_CASE("out flag writes a file") {
    std::remove("/tmp/qwit_cli_outfile.csv");
    REQUIRE(run("witness --out /tmp/qwit_cli_outfile.csv", "/tmp/qwit_cli_stdout.txt") == 0);
    CHECK(slurp("/tmp/qwit_cli_stdout.txt").empty());
    CHECK(first_line(slurp("/tmp/qwit_cli_outfile.csv")) ==
          "state,value,c_separable,violated");
}

TEST_CASE("bad inputs exit nonzero with a machine-readable failure list") {
    CHECK(run("entropy --fixtures /nonexistent", "/tmp/qwit_cli_err.txt") == 2);
    CHECK(slurp("/tmp/qwit_cli_err.txt").find("failed_verdicts") != std::string::npos);

    CHECK(run("bounds --entropy renyi --k 1", "/tmp/qwit_cli_err2.txt") == 2);
    CHECK(slurp("/tmp/qwit_cli_err2.txt").find("cli.invalid_order") != std::string::npos);

    CHECK(run("chsh --fixtures " + kFixtures + " --theta 120", "/tmp/qwit_cli_err3.txt") == 2);
    CHECK(slurp("/tmp/qwit_cli_err3.txt").find("theta_out_of_range") != std::string::npos);

    CHECK(run("nonsense", "/tmp/qwit_cli_err4.txt") != 0);
}

TEST_CASE("theta list restricts the chsh sweep") {
    REQUIRE(run("chsh --fixtures " + kFixtures + " --samples 1000 --theta 45",
                "/tmp/qwit_cli_one.csv") == 0);
    std::string text = slurp("/tmp/qwit_cli_one.csv");
    // Header plus exactly one data row.
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.find("45.000000,2.78") != std::string::npos);
}
