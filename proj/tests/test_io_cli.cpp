#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>
#include <sstream>

#include "lasa/errors.hpp"
#include "lasa/io.hpp"
#include "lasa/posterior.hpp"
#include "support/test_chains.hpp"

using namespace lasa;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("lasa_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LASA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("read_chain csv variants") {
    const fs::path dir = temp_dir("read_chain");

    SUBCASE("plain unit square") {
        write_file(dir / "sq.csv", "0,0\n1,0\n1,1\n0,1\n");
        const PolygonalChain chain = read_chain(dir / "sq.csv");
        CHECK(chain.size() == 4);
        CHECK(chain[2].x == 1.0);
    }

    SUBCASE("header and trailing closure vertex are dropped") {
        write_file(dir / "sq.csv", "x,y\n0,0\n1,0\n1,1\n0,1\n0,0\n");
        const PolygonalChain chain = read_chain(dir / "sq.csv");
        CHECK(chain.size() == 4);
    }

    SUBCASE("consecutive duplicates are dropped") {
        write_file(dir / "sq.csv", "0,0\n1,0\n1,0\n1,1\n0,1\n");
        CHECK(read_chain(dir / "sq.csv").size() == 4);
    }

    SUBCASE("unparseable row names its line") {
        write_file(dir / "bad.csv", "0,0\n1,0\na,b\n0,1\n");
        try {
            read_chain(dir / "bad.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find(":3:") != std::string::npos);
        }
    }

    SUBCASE("too few distinct vertices") {
        write_file(dir / "two.csv", "0,0\n1,0\n");
        CHECK_THROWS_AS(read_chain(dir / "two.csv"), InvalidInput);
    }

    SUBCASE("json array of pairs") {
        write_file(dir / "sq.json", "[[0,0],[1,0],[1,1],[0,1]]");
        CHECK(read_chain(dir / "sq.json").size() == 4);
        write_file(dir / "bad.json", "[[0,0],[1],[1,1]]");
        CHECK_THROWS_AS(read_chain(dir / "bad.json"), ParseError);
    }
}

TEST_CASE("indicator round trip and validation") {
    const fs::path dir = temp_dir("indicator");
    const LandmarkIndicator gamma{1, 0, 0, 1, 0, 1, 0};
    write_indicator(dir / "g.csv", gamma);
    CHECK(read_indicator(dir / "g.csv") == gamma);

    write_file(dir / "bad.csv", "gamma\n0\n2\n");
    CHECK_THROWS_AS(read_indicator(dir / "bad.csv"), ParseError);
}

TEST_CASE("format_double") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()).empty());
    CHECK(format_double(-3.0) == "-3");
    // round-trips exactly
    const double x = 0.12345678901234567;
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("chain csv round trip") {
    const fs::path dir = temp_dir("roundtrip");
    const PolygonalChain chain =
        make_chain({{0.125, -0.125}, {0.1, 0.3}, {-0.37, 0.11}, {-0.01, -0.3}});
    write_chain_csv(dir / "c.csv", chain);
    const PolygonalChain back = read_chain(dir / "c.csv");
    REQUIRE(back.size() == chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(back[i].x == chain[i].x);
        CHECK(back[i].y == chain[i].y);
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cli");

TEST_CASE("version and usage errors") {
    CHECK(run_cli("--version") == 0);
    CHECK(run_cli("detect") == 1);                       // missing input
    CHECK(run_cli("bogus-subcommand") == 1);
    CHECK(run_cli("detect /nonexistent/x.csv") == 2);    // data error
    CHECK(run_cli("simulate --k 4 --n 5 --sigma2 1") == 1);  // n <= 2k
}

TEST_CASE("simulate then evaluate with prediction equal to truth") {
    const fs::path dir = temp_dir("cli_eval");
    REQUIRE(run_cli("simulate --k 4 --n 50 --sigma2 0.5 --replicates 2 --seed 3 --out-dir " +
                    (dir / "sim").string()) == 0);
    REQUIRE(fs::exists(dir / "sim" / "chain_000.csv"));
    REQUIRE(fs::exists(dir / "sim" / "chain_001.gamma.csv"));

    REQUIRE(run_cli("evaluate --data-dir " + (dir / "sim").string() + " --pred-dir " +
                    (dir / "sim").string() + " --out-dir " + (dir / "ev").string()) == 0);
    const std::string metrics = read_file(dir / "ev" / "metrics.csv");
    CHECK(metrics.find("chain_000,files") != std::string::npos);
    // prediction == truth: mcc and ari are exactly 1
    std::istringstream lines(metrics);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        CHECK(line.find(",1,1,") != std::string::npos);
    }
    const std::string medians = read_file(dir / "ev" / "medians.csv");
    CHECK(medians.find("files,2,1,1") != std::string::npos);

    REQUIRE(run_cli("evaluate --data-dir " + (dir / "sim").string() +
                    " --method hull --out-dir " + (dir / "ev_hull").string()) == 0);
    CHECK(read_file(dir / "ev_hull" / "metrics.csv").find("hull") != std::string::npos);

    // prediction of the wrong length is a data error
    fs::create_directories(dir / "bad_preds");
    write_file(dir / "bad_preds" / "chain_000.gamma.csv", "gamma\n1\n0\n0\n1\n");
    fs::copy_file(dir / "sim" / "chain_001.gamma.csv", dir / "bad_preds" / "chain_001.gamma.csv");
    CHECK(run_cli("evaluate --data-dir " + (dir / "sim").string() + " --pred-dir " +
                  (dir / "bad_preds").string() + " --out-dir " + (dir / "ev_bad").string()) == 2);

    // missing prediction file is a data error too
    fs::remove(dir / "bad_preds" / "chain_001.gamma.csv");
    CHECK(run_cli("evaluate --data-dir " + (dir / "sim").string() + " --pred-dir " +
                  (dir / "bad_preds").string() + " --out-dir " + (dir / "ev_bad2").string()) == 2);
}

TEST_CASE("detect and simulate are byte-deterministic under a fixed seed") {
    const fs::path dir = temp_dir("cli_determinism");
    REQUIRE(run_cli("simulate --k 4 --n 40 --sigma2 0.5 --replicates 1 --seed 5 --out-dir " +
                    (dir / "sim").string()) == 0);

    // identical flags both times; only the working directory differs
    const std::string env = "SOURCE_DATE_EPOCH=1700000000 ";
    for (const char* sub : {"a", "b"}) {
        fs::create_directories(dir / sub);
        const std::string cmd = "cd " + (dir / sub).string() + " && " + env +
                                std::string(LASA_CLI_PATH) + " detect " +
                                (dir / "sim" / "chain_000.csv").string() +
                                " --iterations 2000 --chains 2 --seed 17 --out-dir out" +
                                " >/dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    }
    for (const char* file :
         {"report.json", "map.gamma.csv", "ppm.gamma.csv", "segments.csv",
          "chain_features.csv", "manifest.json"}) {
        CHECK(read_file(dir / "a" / "out" / file) == read_file(dir / "b" / "out" / file));
        CHECK_FALSE(read_file(dir / "a" / "out" / file).empty());
    }
}

TEST_CASE("detect stays well-formed with tiny iteration budgets") {
    const fs::path dir = temp_dir("cli_tiny");
    // 12 distinct vertices, 10 iterations
    write_file(dir / "c.csv",
               "0,0\n2,0.3\n4,0\n4.3,2\n4,4\n2,3.7\n0,4\n-0.3,2.7\n0,2\n0.2,1.4\n0,1\n-0.2,0.5\n");
    REQUIRE(run_cli("detect " + (dir / "c.csv").string() +
                    " --iterations 10 --chains 1 --seed 2 --out-dir " + (dir / "out").string()) ==
            0);
    const LandmarkIndicator map = read_indicator(dir / "out" / "map.gamma.csv");
    CHECK(map.size() == 12);
    CHECK(landmark_count(map) >= 3);

    // the report and manifest parse as JSON
    const auto report = nlohmann::json::parse(read_file(dir / "out" / "report.json"));
    CHECK(report.at("n_vertices") == 12);
    const auto manifest = nlohmann::json::parse(read_file(dir / "out" / "manifest.json"));
    CHECK(manifest.at("command") == "detect");
}

TEST_CASE("detect map output matches exhaustive enumeration on a small chain") {
    const fs::path dir = temp_dir("cli_enum");
    const PolygonalChain chain =
        testing::poly_chain({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {2, 2, 2, 2}, 0.4);
    write_chain_csv(dir / "c.csv", chain);

    Hyperparameters hyper = Hyperparameters::recommended(chain.size());
    hyper.beta_sigma = 1e-5;
    const int m = static_cast<int>(chain.size());
    LandmarkIndicator mode;
    double best = -std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        LandmarkIndicator g(m);
        for (int i = 0; i < m; ++i) g[i] = (mask >> i) & 1;
        if (!is_valid_gamma(g, chain)) continue;
        const double lp = log_posterior(chain, g, hyper);
        if (lp > best) {
            best = lp;
            mode = g;
        }
    }

    REQUIRE(run_cli("detect " + (dir / "c.csv").string() +
                    " --beta-sigma 1e-5 --chains 1 --seed 4 --no-ppm --out-dir " +
                    (dir / "out").string()) == 0);
    CHECK(read_indicator(dir / "out" / "map.gamma.csv") == mode);
    CHECK_FALSE(fs::exists(dir / "out" / "ppm.gamma.csv"));  // --no-ppm
}

TEST_CASE("manifest-only writes the manifest and nothing else") {
    const fs::path dir = temp_dir("cli_manifest");
    write_file(dir / "c.csv", "0,0\n2,0.3\n4,0\n4.3,2\n4,4\n2,3.7\n0,4\n-0.3,2\n");
    REQUIRE(run_cli("detect " + (dir / "c.csv").string() + " --manifest-only --out-dir " +
                    (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "manifest.json"));
    CHECK_FALSE(fs::exists(dir / "out" / "report.json"));

    const auto doc = nlohmann::json::parse(read_file(dir / "out" / "manifest.json"));
    CHECK(doc.at("command") == "detect");
    CHECK(doc.at("normalization").at("raw_length").get<double>() > 0.0);
}

TEST_CASE("raw-units rescales feature distances by the input length") {
    const fs::path dir = temp_dir("cli_raw_units");
    REQUIRE(run_cli("simulate --k 4 --n 40 --sigma2 1 --replicates 1 --seed 31 --out-dir " +
                    (dir / "sim").string()) == 0);
    // simulated chains are already normalized, so feed a scaled copy
    const PolygonalChain base = read_chain(dir / "sim" / "chain_000.csv");
    PolygonalChain scaled = base;
    for (Point2& v : scaled.vertices) v = 250.0 * v;
    write_chain_csv(dir / "scaled.csv", scaled);

    for (const char* mode : {"norm", "raw"}) {
        const std::string extra = std::string(mode) == "raw" ? " --raw-units" : "";
        REQUIRE(run_cli("features " + (dir / "scaled.csv").string() + " --landmarks " +
                        (dir / "sim" / "chain_000.gamma.csv").string() + extra +
                        " --tbr-window 5 --tbr-window 10 --out-dir " +
                        (dir / mode).string()) == 0);
    }
    auto first_ra = [&](const char* mode) {
        std::istringstream lines(read_file(dir / mode / "segments.csv"));
        std::string line;
        std::getline(lines, line);
        std::getline(lines, line);
        std::size_t pos = 0;
        for (int c = 0; c < 3; ++c) pos = line.find(',', pos) + 1;
        return std::stod(line.substr(pos));
    };
    const double scale = chain_length(scaled);
    CHECK(first_ra("raw") == doctest::Approx(first_ra("norm") * scale).epsilon(1e-9));

    // one TBR column per requested window
    std::istringstream header_in(read_file(dir / "norm" / "chain_features.csv"));
    std::string header;
    std::getline(header_in, header);
    CHECK(header.find("tbr_l5") != std::string::npos);
    CHECK(header.find("tbr_l10") != std::string::npos);
    CHECK(header.find("tbr_l200") == std::string::npos);
}

TEST_CASE("features on a zero-noise chain reports zero deviation") {
    const fs::path dir = temp_dir("cli_features");
    REQUIRE(run_cli("simulate --k 4 --n 40 --sigma2 0 --replicates 1 --seed 9 --out-dir " +
                    (dir / "sim").string()) == 0);
    REQUIRE(run_cli("features " + (dir / "sim" / "chain_000.csv").string() + " --landmarks " +
                    (dir / "sim" / "chain_000.gamma.csv").string() + " --tbr-window 5 --out-dir " +
                    (dir / "feat").string()) == 0);
    const std::string segments = read_file(dir / "feat" / "segments.csv");
    std::istringstream lines(segments);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "chain,segment,n_k,ra,rq,rv,rp,rz,rsk,rku,rzjis,a_pp,a_pm,a_mp,a_mm");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // ra column is the 4th field; zero noise means 0 within formatting
        std::size_t pos = 0;
        for (int c = 0; c < 3; ++c) pos = line.find(',', pos) + 1;
        const double ra = std::stod(line.substr(pos));
        CHECK(ra < 1e-9);
    }
    CHECK(rows == 4);

    // landmark file inconsistent with the chain
    CHECK(run_cli("features " + (dir / "sim" / "chain_000.csv").string() + " --landmarks " +
                  (dir / "feat" / "segments.csv").string()) == 2);
}

TEST_SUITE_END();
