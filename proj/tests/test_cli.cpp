#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string binary_path() {
    const char* p = std::getenv("PELLSEQ_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PELLSEQ_BIN must point at the pellseq binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = "'" + binary_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::json> json_lines(const std::string& out) {
    std::vector<nlohmann::json> recs;
    size_t start = 0;
    while (start < out.size()) {
        size_t end = out.find('\n', start);
        if (end == std::string::npos) end = out.size();
        if (end > start) recs.push_back(nlohmann::json::parse(out.substr(start, end - start)));
        start = end + 1;
    }
    return recs;
}

}  // namespace

TEST_CASE("gen: families and seeds") {
    RunResult c = run("gen --family C --from 0 --to 2");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "       0  2\n       1  14\n       2  82\n");

    RunResult seeded = run("gen --r 3 --s 1 --from 0 --to 3");
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.output == "       0  3\n       1  1\n       2  3\n       3  17\n");

    RunResult t0 = run("gen --family T --from 0 --to 0");
    CHECK(t0.exit_code == 0);
    CHECK(t0.output == "       0  0\n");

    RunResult nsw = run("gen --family NSW --from -2 --to 2 --format json-lines");
    CHECK(nsw.exit_code == 0);
    std::vector<nlohmann::json> recs = json_lines(nsw.output);
    REQUIRE(recs.size() == 5);
    CHECK(recs[0]["kind"] == "term");
    CHECK(recs[0]["n"] == -2);
    CHECK(recs[0]["value"] == "-7");
    CHECK(recs[4]["value"] == "41");
}

TEST_CASE("gen: usage errors") {
    CHECK(run("gen --family Q --from 0 --to 1").exit_code == 2);
    CHECK(run("gen --from 0 --to 1").exit_code == 2);
    CHECK(run("gen --family T --from 3 --to 1").exit_code == 2);
    CHECK(run("gen --family T --r 1 --s 2 --from 0 --to 1").exit_code == 2);
    CHECK(run("gen --r 1 --from 0 --to 1").exit_code == 2);
    CHECK(run("gen --r x --s 1 --from 0 --to 1").exit_code == 2);
}

TEST_CASE("negative seeds via --r=-1 style flags") {
    RunResult a = run("gen --r=-1 --s=-1 --from 0 --to 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == "       0  -1\n       1  -1\n       2  -5\n");
    RunResult b = run("classify --r=-1 --s=-1 --format json-lines");
    CHECK(b.exit_code == 0);
    nlohmann::json rec = json_lines(b.output)[0];
    CHECK(rec["family"] == "B");
    CHECK(rec["shift"] == -1);
    CHECK(rec["mu_num"] == "-1");
    CHECK(rec["mu_den"] == "1");
}

TEST_CASE("prove: corpus, expressions, exit codes") {
    RunResult all = run("prove --all");
    CHECK(all.exit_code == 0);
    size_t proven = 0;
    size_t pos = 0;
    while ((pos = all.output.find(": Proven", pos)) != std::string::npos) {
        ++proven;
        pos += 8;
    }
    CHECK(proven == 17);

    CHECK(run("prove --expr 'E(n) == 4*B(n)'").exit_code == 0);

    RunResult neg = run("prove --expr 'T(n) == B(n)' --format json-lines");
    CHECK(neg.exit_code == 1);
    nlohmann::json rec = json_lines(neg.output)[0];
    CHECK(rec["kind"] == "proof");
    CHECK(rec["outcome"] == "counterexample");
    CHECK(rec["witness_n"] == 0);
    CHECK(rec["lhs"] == "0");
    CHECK(rec["rhs"] == "1");

    CHECK(run("prove --identity nope").exit_code == 2);
    CHECK(run("prove --expr 'T(n'").exit_code == 2);
    CHECK(run("prove").exit_code == 2);
    CHECK(run("prove --all --sweep -20 50").exit_code == 0);
    CHECK(run("prove --identity tsq").exit_code == 0);
}

TEST_CASE("classify and certificate") {
    RunResult b = run("classify --r 1 --s 1");
    CHECK(b.exit_code == 0);
    CHECK(b.output == "classification: member family=B shift=-1 mu=1\n");

    RunResult none = run("classify --r 1 --s 2");
    CHECK(none.exit_code == 1);
    CHECK(none.output == "classification: not-in-four-families\n");

    CHECK(run("classify --r 0 --s 0").exit_code == 2);

    RunResult cert = run("certificate --r 1 --s 0 --format json-lines");
    CHECK(cert.exit_code == 0);
    nlohmann::json rec = json_lines(cert.output)[0];
    CHECK(rec["kind"] == "certificate");
    CHECK(rec["m"] == -4);
    CHECK(rec["h"] == "1");
    CHECK(rec["c"] == "2");

    CHECK(run("certificate --r 1 --s 2").exit_code == 1);
}

TEST_CASE("pell subcommand") {
    RunResult sols = run("pell --d 2 --n-const -1 --y-max 30");
    CHECK(sols.exit_code == 0);
    CHECK(sols.output == "x=1 y=1\nx=7 y=5\nx=41 y=29\n");

    RunResult cmp = run("pell --d 8 --n-const 1 --y-max 40 --compare-families --format json-lines");
    CHECK(cmp.exit_code == 0);
    std::vector<nlohmann::json> recs = json_lines(cmp.output);
    REQUIRE(recs.size() == 5);
    CHECK(recs[0]["kind"] == "solution");
    CHECK(recs[3]["x"] == "99");
    CHECK(recs[3]["y"] == "35");
    CHECK(recs[4]["kind"] == "verdict");
    CHECK(recs[4]["match"] == true);

    RunResult trivial = run("pell --d 2 --n-const 0 --y-max 5");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output == "x=0 y=0\n");

    CHECK(run("pell --d 9 --n-const 1 --y-max 5").exit_code == 2);
    CHECK(run("pell --d 5 --n-const 1 --y-max 5 --compare-families").exit_code == 2);
}

TEST_CASE("relations and fundamental subcommands") {
    RunResult rel = run("relations");
    CHECK(rel.exit_code == 0);
    CHECK(rel.output == "relations: ok for n in [-10, 30]\n");

    RunResult fund = run("fundamental --r 1 --s 1 --format json-lines");
    CHECK(fund.exit_code == 0);
    nlohmann::json rec = json_lines(fund.output)[0];
    CHECK(rec["kind"] == "fundamental");
    CHECK(rec["ok"] == true);
}

TEST_CASE("output is deterministic") {
    for (const char* args : {"gen --family L --from -5 --to 5 --format json-lines",
                             "prove --all --format json-lines",
                             "classify --r 3 --s 17 --format json-lines"}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("round-trip: generated terms feed back into classification") {
    RunResult gen = run("gen --family T --from 0 --to 8 --format json-lines");
    REQUIRE(gen.exit_code == 0);
    std::vector<nlohmann::json> recs = json_lines(gen.output);
    REQUIRE(recs.size() == 9);
    for (size_t j = 1; j + 1 < recs.size(); ++j) {
        std::string r = recs[j]["value"].get<std::string>();
        std::string s = recs[j + 1]["value"].get<std::string>();
        RunResult cls = run("classify --r " + r + " --s " + s + " --format json-lines");
        CHECK(cls.exit_code == 0);
        nlohmann::json rec = json_lines(cls.output)[0];
        CHECK(rec["family"] == "T");
        CHECK(rec["shift"] == static_cast<long long>(j));
        CHECK(rec["mu_num"] == "1");
    }
}
