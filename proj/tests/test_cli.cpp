#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_shell(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// Runs the built CLI with the given arguments, capturing stdout.
CmdResult run_cli(const std::string& args, const std::string& stderr_redirect = "2>/dev/null") {
    return run_shell(std::string(FUSION_CLI_PATH) + " " + args + " " + stderr_redirect);
}

std::string data_path(const std::string& name) {
    return std::string(FUSION_TEST_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/fusion_cli_test_" + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
    return path;
}

}  // namespace

TEST_CASE("series: exact csv rows for sl2") {
    const CmdResult r = run_cli("series --ring sl2 --gens 0,1 --steps 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,support_size,dim_vn,log2_dim_vn\n"
          "1,2,5,2.321928\n"
          "2,3,14,3.807355\n"
          "3,4,30,4.906891\n"
          "4,5,55,5.781360\n");
}

TEST_CASE("series: torus rank 1") {
    const CmdResult r = run_cli("series --ring torus:1 --gens \"0,1,-1\" --steps 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,support_size,dim_vn,log2_dim_vn\n"
          "1,3,3,1.584963\n"
          "2,5,5,2.321928\n");
}

TEST_CASE("series: missing unit is adjoined with a warning") {
    const std::string errfile = "/tmp/fusion_cli_test_stderr.txt";
    const CmdResult with_warning =
        run_cli("series --ring sl2 --gens 1 --steps 2", "2>" + errfile);
    CHECK(with_warning.exit_code == 0);
    std::ifstream err(errfile);
    std::stringstream errbuf;
    errbuf << err.rdbuf();
    CHECK(errbuf.str().find("unit adjoined") != std::string::npos);

    const CmdResult reference = run_cli("series --ring sl2 --gens 0,1 --steps 2");
    CHECK(with_warning.out == reference.out);

    const CmdResult strict =
        run_cli("series --ring sl2 --gens 1 --steps 2 --strict-unit");
    CHECK(strict.exit_code == 2);
}

TEST_CASE("series: csv and json encode the same records") {
    const CmdResult csv = run_cli("series --ring gl2 --gens \"(0,0);(1,0);(0,1);(0,-1)\" "
                                  "--steps 12 --format csv");
    const CmdResult js = run_cli("series --ring gl2 --gens \"(0,0);(1,0);(0,1);(0,-1)\" "
                                 "--steps 12 --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);

    const json doc = json::parse(js.out);
    CHECK(doc.at("ring") == "gl2");
    CHECK(doc.at("unit_adjoined") == false);

    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,support_size,dim_vn,log2_dim_vn");
    std::size_t i = 0;
    std::string line;
    while (std::getline(lines, line)) {
        REQUIRE(i < doc.at("records").size());
        const json& rec = doc.at("records").at(i);
        std::ostringstream expect;
        expect << rec.at("n").get<int>() << ',' << rec.at("support_size").get<std::string>()
               << ',' << rec.at("dim_vn").get<std::string>() << ','
               << rec.at("log2_dim_vn").get<std::string>();
        CHECK(line == expect.str());
        ++i;
    }
    CHECK(i == doc.at("records").size());
}

TEST_CASE("series: output is byte-identical across runs and thread counts") {
    const std::string args = "series --ring gl2 --gens \"(0,0);(1,0);(0,1);(0,-1)\" --steps 24";
    const CmdResult a1 = run_cli(args + " --threads 1");
    const CmdResult a2 = run_cli(args + " --threads 1");
    const CmdResult b = run_cli(args + " --threads 4");
    CHECK(a1.exit_code == 0);
    CHECK(a1.out == a2.out);
    CHECK(a1.out == b.out);

    // FUSION_THREADS takes precedence over --threads
    const CmdResult env_run = run_shell("env FUSION_THREADS=3 " + std::string(FUSION_CLI_PATH) +
                                        " " + args + " --threads 1 2>/dev/null");
    CHECK(env_run.out == a1.out);
}

TEST_CASE("series: file output and errors") {
    const std::string out_path = "/tmp/fusion_cli_test_series.csv";
    const CmdResult r =
        run_cli("series --ring sl2 --gens 0,1 --steps 3 --out " + out_path);
    CHECK(r.exit_code == 0);
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("3,4,30,4.906891") != std::string::npos);

    CHECK(run_cli("series --ring nope --gens 0 --steps 2").exit_code == 2);
    CHECK(run_cli("series --ring sl2 --gens \"(1,2)\" --steps 2").exit_code == 2);
    CHECK(run_cli("series --ring sl2 --gens 0,1").exit_code == 1);  // missing --steps
    CHECK(run_cli("series --ring sl2 --gens 0,1 --steps 2 --out /no/such/dir/x.csv")
              .exit_code == 1);
}

TEST_CASE("gkdim: polynomial and exponential classifications") {
    const CmdResult poly = run_cli("gkdim --ring sl2 --gens 0,1 --steps 64");
    CHECK(poly.exit_code == 0);
    const json pdoc = json::parse(poly.out);
    CHECK(pdoc.at("classification") == "polynomial");
    CHECK(std::abs(pdoc.at("degree").get<double>() - 3.0) < 0.1);
    CHECK(pdoc.at("n_max") == 64);
    CHECK(pdoc.at("doubling_exponents").size() == 5);

    const CmdResult expo = run_cli("gkdim --ring be:3 --gens 0,1 --steps 64");
    CHECK(expo.exit_code == 0);
    const json edoc = json::parse(expo.out);
    CHECK(edoc.at("classification") == "exponential");
    CHECK(edoc.at("rate").get<double>() > 2.0);
}

TEST_CASE("gkdim: bad step counts are usage errors") {
    CHECK(run_cli("gkdim --ring sl2 --gens 0,1 --steps 20").exit_code == 1);
    CHECK(run_cli("gkdim --ring sl2 --gens 0,1 --steps 8").exit_code == 1);
}

TEST_CASE("gkdim: a stabilizing chain ring is inconclusive at short range") {
    // group ring of Z/8: the ball keeps growing to n = 7, then freezes;
    // at N = 16 the doubling exponents disagree and the tail is flat
    std::ostringstream ring;
    ring << "ring Z8\nunit g0\n";
    for (int i = 0; i < 8; ++i) ring << "simple g" << i << " 1\n";
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            ring << "fuse g" << i << " g" << j << " = g" << (i + j) % 8 << "\n";
        }
    }
    const std::string path = write_temp("z8.ring", ring.str());
    CHECK(run_cli("validate " + path).exit_code == 0);
    const CmdResult r = run_cli("gkdim --ring dsl:" + path + " --gens \"g0;g1\" --steps 16");
    CHECK(r.exit_code == 3);
    CHECK(json::parse(r.out).at("classification") == "inconclusive");
}

TEST_CASE("validate: exit codes and witnesses") {
    CHECK(run_cli("validate " + data_path("z2.ring")).exit_code == 0);
    const CmdResult ok = run_cli("validate " + data_path("s3.ring"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("ok:") != std::string::npos);

    const CmdResult bad = run_cli("validate " + data_path("s3_dropped.ring"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("(r,r)") != std::string::npos);

    const std::string no_unit = write_temp("nounit.ring", "ring R\nsimple e 1\n");
    CHECK(run_cli("validate " + no_unit).exit_code == 2);

    CHECK(run_cli("validate /no/such/file.ring").exit_code == 1);
}

TEST_CASE("witness: certificates, none, and failures") {
    const CmdResult rho2 = run_cli("witness --a be:4 --b sl2 --map 1=1 --depth 4");
    CHECK(rho2.exit_code == 0);
    const json cert = json::parse(rho2.out);
    CHECK(cert.at("dim_x") == "4");
    CHECK(cert.at("dim_fx") == "2");
    CHECK(cert.at("ratio").get<double>() == doctest::Approx(2.0));
    CHECK(cert.at("bound") == "dim S_n >= 2^n");

    const CmdResult none = run_cli("witness --a be:2 --b sl2 --map 1=1");
    CHECK(none.exit_code == 0);
    CHECK(none.out == "none\n");

    const CmdResult rho15 = run_cli("witness --a be:3 --b sl2 --map 1=1 --x 1");
    CHECK(rho15.exit_code == 0);
    CHECK(json::parse(rho15.out).at("ratio").get<double>() == doctest::Approx(1.5));

    CHECK(run_cli("witness --a sl2 --b torus:1 --map 1=1").exit_code == 2);
}

TEST_CASE("rings: lists the catalog") {
    const CmdResult r = run_cli("rings");
    CHECK(r.exit_code == 0);
    for (const char* id : {"sl2", "gl2", "torus:<r>", "sln:<n>", "be:<d>", "gef:<d>",
                           "product:<id>,<id>", "dsl:<path>"}) {
        CHECK(r.out.find(id) != std::string::npos);
    }
}
