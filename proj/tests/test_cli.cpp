// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed binary end to end through a shell. GDIV_CLI_PATH is
// injected by the build so the tests always exercise the freshly built tool.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

CmdResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
    std::string cmd = shell_quote(GDIV_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";

    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.code = WEXITSTATUS(status);
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

// Scratch CSV that cleans up after itself.
class TempCsv {
public:
    explicit TempCsv(const std::string& content) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("gdiv_cli_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + ".csv");
        std::ofstream out(path_);
        out << content;
    }
    ~TempCsv() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("eval emits one report line per row pair") {
    const auto res = run_cli({"eval", "--divergence", "hellinger", "--p", "0.25",
                              "--q", "1.0"});
    CHECK(res.code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 1);
    const json rec = json::parse(lines[0]);
    CHECK(rec["divergence"] == "hellinger");
    CHECK(rec["form"] == "bregman");
    CHECK(rec["value"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("eval handles the symmetric and jensen forms") {
    const auto sym = run_cli({"eval", "--divergence", "kl", "--form", "sym", "--p",
                              "0.5,0.5", "--q", "0.25,0.75"});
    CHECK(sym.code == 0);
    const json srec = json::parse(lines_of(sym.out).at(0));
    CHECK(srec["value"].get<double>() ==
          doctest::Approx(0.2746530721670274).epsilon(1e-12));

    const auto jen = run_cli({"eval", "--divergence", "kl", "--form", "jensen", "--p",
                              "0.5,0.5", "--q", "0.25,0.75"});
    CHECK(jen.code == 0);
    const json jrec = json::parse(lines_of(jen.out).at(0));
    CHECK(jrec["skew"].get<double>() == 0.5);
    CHECK(jrec["value"].get<double>() ==
          doctest::Approx(0.13528830227442082).epsilon(1e-12));

    const auto skewed = run_cli({"eval", "--divergence", "kl", "--form", "jensen",
                                 "--skew", "0.25", "--p", "1,2", "--q", "3,4"});
    CHECK(skewed.code == 0);
    CHECK(json::parse(lines_of(skewed.out).at(0))["skew"].get<double>() == 0.25);
}

TEST_CASE("eval reads CSV files, with or without a header") {
    const TempCsv p("a,b\n1,2\n3,4\n");
    const TempCsv q("1,1\n1,1\n");
    const auto res = run_cli({"eval", "--divergence", "kl", "--p", p.path(),
                              "--q", q.path()});
    CHECK(res.code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 2);

    // Row one of p against row one of q, and likewise for row two.
    const double first = json::parse(lines[0])["value"].get<double>();
    const double second = json::parse(lines[1])["value"].get<double>();
    const auto inline_first =
        run_cli({"eval", "--divergence", "kl", "--p", "1,2", "--q", "1,1"});
    CHECK(first ==
          doctest::Approx(json::parse(lines_of(inline_first.out).at(0))["value"]
                              .get<double>())
              .epsilon(1e-15));
    CHECK(second != first);
}

TEST_CASE("eval rejects bad requests with distinct exit codes") {
    // Unknown key and malformed numbers are caller errors: exit 2.
    CHECK(run_cli({"eval", "--divergence", "zzz", "--p", "1", "--q", "2"}).code == 2);
    CHECK(run_cli({"eval", "--divergence", "kl", "--p", "1x", "--q", "2"}).code == 2);
    CHECK(run_cli({"eval", "--divergence", "kl", "--p", "0", "--q", "2"}).code == 2);
    CHECK(run_cli({"eval", "--divergence", "alpha", "--p", "1", "--q", "2"}).code == 2);
    // Skew only modifies the jensen form.
    CHECK(run_cli({"eval", "--divergence", "kl", "--form", "sym", "--skew", "0.3",
                   "--p", "1", "--q", "2"}).code == 2);
    // Dimension disagreements are a separate class: exit 3.
    CHECK(run_cli({"eval", "--divergence", "kl", "--p", "1", "--q", "1,2"}).code == 3);
    const TempCsv p("1,2\n3,4\n");
    const TempCsv q("1,1\n");
    CHECK(run_cli({"eval", "--divergence", "kl", "--p", p.path(), "--q", q.path()})
              .code == 3);
    // Missing required options are parse errors.
    CHECK(run_cli({"eval", "--divergence", "kl", "--p", "1"}).code == 2);
}

TEST_CASE("the alpha family accepts both index spellings") {
    const auto split = run_cli({"eval", "--divergence", "alpha", "--family-index",
                                "0.5", "--p", "0.25", "--q", "1.0"});
    CHECK(split.code == 0);
    const json rec = json::parse(lines_of(split.out).at(0));
    CHECK(rec["divergence"] == "alpha(0.5)");
    CHECK(rec["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

    const auto inline_key = run_cli({"eval", "--divergence", "alpha(0.5)", "--p",
                                     "0.25", "--q", "1.0"});
    CHECK(inline_key.code == 0);
    CHECK(json::parse(lines_of(inline_key.out).at(0))["value"].get<double>() ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("centroid reports the minimizer and its certificate") {
    const TempCsv data("1\n4\n");
    const auto res = run_cli({"centroid", "--divergence", "hellinger", "--input",
                              data.path()});
    CHECK(res.code == 0);
    const json rec = json::parse(res.out);
    REQUIRE(rec["centroid"].size() == 1);
    CHECK(rec["centroid"][0].get<double>() == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(rec["objective"].get<double>() ==
          doctest::Approx(rec["jensen_bound"].get<double>()).epsilon(1e-10));
    CHECK(rec["residual"].get<double>() <= 1e-10);

    const auto weighted = run_cli({"centroid", "--divergence", "hellinger", "--input",
                                   data.path(), "--weights", "1,3"});
    CHECK(weighted.code == 0);
    CHECK(json::parse(weighted.out)["centroid"][0].get<double>() ==
          doctest::Approx(3.0625).epsilon(1e-12));

    const auto geo = run_cli({"centroid", "--divergence", "reverse_kl", "--input",
                              data.path()});
    CHECK(json::parse(geo.out)["centroid"][0].get<double>() ==
          doctest::Approx(2.0).epsilon(1e-12));

    const auto left = run_cli({"centroid", "--divergence", "kl", "--input",
                               data.path(), "--side", "left"});
    CHECK(left.code == 0);
    CHECK(json::parse(left.out)["centroid"][0].get<double>() ==
          doctest::Approx(2.0).epsilon(1e-12));

    const auto harmonic = run_cli({"centroid", "--divergence", "neyman_chi2",
                                   "--input", data.path()});
    CHECK(json::parse(harmonic.out)["centroid"][0].get<double>() ==
          doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("centroid validates weights and inputs") {
    const TempCsv data("1\n4\n");
    CHECK(run_cli({"centroid", "--divergence", "kl", "--input", data.path(),
                   "--weights", "1,2,3"}).code == 3);
    CHECK(run_cli({"centroid", "--divergence", "kl", "--input", data.path(),
                   "--weights", "0,0"}).code == 2);
    CHECK(run_cli({"centroid", "--divergence", "kl", "--input",
                   "/nonexistent/file.csv"}).code == 2);
    const TempCsv ragged("1,2\n3\n");
    CHECK(run_cli({"centroid", "--divergence", "kl", "--input", ragged.path()})
              .code == 3);
}

TEST_CASE("cluster separates groups and reports its trace") {
    const TempCsv data("1\n1.1\n1.2\n9\n10\n11\n");
    const auto res = run_cli({"cluster", "--divergence", "kl", "--input", data.path(),
                              "--k", "2"});
    CHECK(res.code == 0);
    const json rec = json::parse(res.out);
    const auto assign = rec["assignments"].get<std::vector<std::size_t>>();
    REQUIRE(assign.size() == 6);
    CHECK(assign[0] == assign[1]);
    CHECK(assign[1] == assign[2]);
    CHECK(assign[3] == assign[4]);
    CHECK(assign[4] == assign[5]);
    CHECK(assign[0] != assign[3]);
    CHECK(rec["converged"].get<bool>());
    CHECK(rec["centroids"].size() == 2);
    const auto trace = rec["objective_trace"].get<std::vector<double>>();
    REQUIRE(!trace.empty());
    for (std::size_t i = 1; i < trace.size(); ++i) {
        CHECK(trace[i] <= trace[i - 1] + 1e-12);
    }
    CHECK(rec["iterations"].get<std::size_t>() == trace.size());
}

TEST_CASE("cluster failure modes are distinguishable") {
    const TempCsv data("1\n2\n3\n");
    const auto too_many = run_cli({"cluster", "--divergence", "kl", "--input",
                                   data.path(), "--k", "5"}, true);
    CHECK(too_many.code == 5);
    CHECK(too_many.out.find("gdiv:") != std::string::npos);
    CHECK(run_cli({"cluster", "--divergence", "kl", "--input", data.path(),
                   "--k", "0"}).code == 2);
}

TEST_CASE("verify reports pass and failure states through the exit code") {
    const auto ok = run_cli({"verify", "--suite", "bj", "--divergence", "hellinger",
                             "--trials", "50"});
    CHECK(ok.code == 0);
    const json reports = json::parse(ok.out);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["identity_name"] == "bregman_jensen_inequality");
    CHECK(reports[0]["pass"].get<bool>());
    CHECK(reports[0]["divergence"] == "hellinger");
    CHECK(reports[0]["trials"].get<std::size_t>() == 50);
    CHECK_FALSE(reports[0].contains("worst_case"));

    // The endpoint-skew check cannot converge for the square link on this
    // box; the tool reports the failures and exits 1.
    const auto fail = run_cli({"verify", "--suite", "limits", "--divergence",
                               "pearson_chi2", "--trials", "20"});
    CHECK(fail.code == 1);
    const json freports = json::parse(fail.out);
    REQUIRE(freports.size() == 1);
    CHECK_FALSE(freports[0]["pass"].get<bool>());
    CHECK(freports[0].contains("worst_case"));
    CHECK(freports[0]["worst_case"].contains("points"));

    CHECK(run_cli({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run_cli({"verify", "--trials", "0"}).code == 2);
}

TEST_CASE("verify output is byte-stable for a fixed seed") {
    const std::vector<std::string> args{"verify", "--suite", "division",
                                        "--divergence", "kl", "--trials", "30",
                                        "--seed", "42"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"eval", "--help"}).code == 0);
    // No subcommand at all is a usage error.
    CHECK(run_cli({}).code == 2);
}
