// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Every check is exact (zero tolerance); the only non-exact budgets are the
// per-criterion wall-clock limits, which are asserted as stated.

#include "pellseq/identity.hpp"
#include "pellseq/pell.hpp"
#include "pellseq/sequences.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace pellseq;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_argv0;

struct Result {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

std::string cli_path() {
    if (const char* env = std::getenv("PELLSEQ_BIN")) return env;
    std::filesystem::path self(g_argv0);
    return (self.parent_path() / "pellseq").string();
}

int run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path() + "' " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---------------------------------------------------------------- criteria

Result criterion1_corpus() {
    Result res;
    const std::vector<CorpusEntry>& entries = corpus();
    if (entries.size() != 17) res.fail("corpus size != 17");
    for (const CorpusEntry& e : entries) {
        IdentityAst ast = parse_identity(e.text);
        if (!prove(ast).proven()) res.fail(e.name + " not proven symbolically");
        if (std::optional<long long> n = numeric_sweep_failure(ast, -20, 50))
            res.fail(e.name + " numeric sweep failed at n=" + std::to_string(*n));
    }
    if (run_cli("prove --all") != 0) res.fail("CLI 'prove --all' did not exit 0");
    if (res.pass) res.detail = std::to_string(entries.size()) + " identities, sweep n in [-20,50]";
    return res;
}

Result criterion2_prefixes() {
    Result res;
    const std::array<long, 10> kT{0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105};
    const std::array<long, 10> kL{2, 6, 34, 198, 1154, 6726, 39202, 228486, 1331714, 7761798};
    const std::array<long, 10> kB{1, 5, 29, 169, 985, 5741, 33461, 195025, 1136689, 6625109};
    const std::array<long, 10> kC{2,  14,     82,     478,     2786,
                                       16238, 94642, 551614, 3215042, 18738638};
    const std::array<long, 10> kE{4,  20,     116,    676,     3940,
                                       22964, 133844, 780100, 4546756, 26500436};
    const std::array<long, 10> kNSW{1, 7, 41, 239, 1393, 8119, 47321, 275807, 1607521, 9369319};
    const std::array<long, 10> kR{1, 1, 3, 7, 17, 41, 99, 239, 577, 1393};
    const std::vector<std::pair<Family, const std::array<long, 10>*>> tables{
        {Family::T, &kT}, {Family::L, &kL}, {Family::B, &kB},   {Family::C, &kC},
        {Family::E, &kE}, {Family::NSW, &kNSW}, {Family::R, &kR}};
    for (auto [f, tbl] : tables)
        for (long long n = 0; n < 10; ++n)
            if (family_term(f, n) != (*tbl)[static_cast<size_t>(n)])
                res.fail("prefix mismatch in " + family_name(f) + " at n=" + std::to_string(n));
    RelationReport rep = cross_relations_check(-10, 30);
    if (!rep.ok())
        res.fail("relation '" + rep.first_failure->relation + "' failed at n=" +
                 std::to_string(rep.first_failure->n));
    if (res.pass) res.detail = "7 family prefixes, cross-relations n in [-10,30]";
    return res;
}

Result criterion3_elementary() {
    Result res;
    struct Case {
        long r, s;
        Family f;
        long long shift;
        Rational mu;
    };
    const std::vector<Case> cases{{1, 1, Family::B, -1, Rational(1)},
                                  {1, -1, Family::C, -1, Rational(-1, 2)},
                                  {1, 0, Family::T, -1, Rational(-1)},
                                  {3, 1, Family::L, -1, Rational(1, 2)}};
    for (const Case& c : cases) {
        Classification cls = classify({BigInt(c.r), BigInt(c.s)});
        std::string tag = "(" + std::to_string(c.r) + "," + std::to_string(c.s) + ")";
        if (!cls.in_four_families()) {
            res.fail(tag + " not classified");
            continue;
        }
        if (cls.member->family != c.f || cls.member->shift != c.shift || cls.member->mu != c.mu)
            res.fail(tag + " classified as family=" + family_name(cls.member->family) +
                     " shift=" + std::to_string(cls.member->shift) + " mu=" + cls.member->mu.str());
    }
    if (res.pass) res.detail = "4 elementary seeds reproduce (family, shift, mu)";
    return res;
}

Result criterion4_roundtrip() {
    Result res;
    const std::vector<Rational> mus{Rational(1),  Rational(-1),    Rational(2),
                                    Rational(-2), Rational(1, 2), Rational(-1, 2)};
    long checked = 0;
    for (Family f : {Family::T, Family::B, Family::C, Family::L})
        for (long long j = -15; j <= 15; ++j)
            for (const Rational& mu : mus) {
                Rational r = mu * Rational(family_term(f, j));
                Rational s = mu * Rational(family_term(f, j + 1));
                if (!r.is_integer() || !s.is_integer()) continue;
                if (r.is_zero() && s.is_zero()) continue;
                Classification cls = classify({r.num(), s.num()});
                ++checked;
                std::string tag = family_name(f) + " j=" + std::to_string(j) + " mu=" + mu.str();
                if (!cls.in_four_families()) {
                    res.fail(tag + ": not classified");
                } else if (cls.member->family != f || cls.member->shift != j ||
                           cls.member->mu != mu) {
                    res.fail(tag + ": got family=" + family_name(cls.member->family) +
                             " shift=" + std::to_string(cls.member->shift) +
                             " mu=" + cls.member->mu.str());
                }
            }
    if (res.pass) res.detail = std::to_string(checked) + " generated triples recovered exactly";
    return res;
}

Result criterion5_equivalence() {
    Result res;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> far(11, 200);
    long members = 0, certs = 0, findings = 0;
    for (long r = -60; r <= 60; ++r) {
        for (long s = -60; s <= 60; ++s) {
            if (r == 0 && s == 0) continue;
            SeedPair seed{BigInt(r), BigInt(s)};
            Classification cls = classify(seed);
            std::optional<Certificate> cert = certificate(seed, 10, 10);
            if (cls.in_four_families()) ++members;
            if (cert) ++certs;
            if (cls.in_four_families() != cert.has_value()) {
                ++findings;
                std::ostringstream msg;
                msg << "FINDING seed (" << r << "," << s << "): classify="
                    << (cls.in_four_families()
                            ? "member " + family_name(cls.member->family) + " shift=" +
                                  std::to_string(cls.member->shift) + " mu=" + cls.member->mu.str()
                            : std::string("not-in-four-families"))
                    << " certificate="
                    << (cert ? "m=" + std::to_string(cert->m) + " h=" + to_string(cert->h)
                             : std::string("none"));
                std::cout << msg.str() << "\n";
                res.fail("equivalence violated at seed (" + std::to_string(r) + "," +
                         std::to_string(s) + ")");
            }
            if (cert) {
                for (int i = 0; i < 20; ++i) {
                    long long n = far(rng);
                    BigInt an = seed_term(seed, n);
                    if (32 * an * an + cert->c !=
                        cert->h * family_term(Family::L, 2 * n + cert->m + 2))
                        res.fail("certificate re-verification failed at seed (" +
                                 std::to_string(r) + "," + std::to_string(s) +
                                 ") n=" + std::to_string(n));
                }
            }
        }
    }
    if (res.pass)
        res.detail = "14640 seeds, " + std::to_string(members) + " members == " +
                     std::to_string(certs) + " certificates, 0 findings";
    return res;
}

Result criterion6_fundamental_telescoping() {
    Result res;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> pick(-100, 100);
    for (int i = 0; i < 1000; ++i) {
        SeedPair seed{BigInt(pick(rng)), BigInt(pick(rng))};
        if (seed.r == 0 && seed.s == 0) seed.r = 1;
        for (long long n = 1; n <= 40; ++n) {
            if (!fundamental_check(seed, n).equal()) {
                res.fail("fundamental failed for seed (" + to_string(seed.r) + "," +
                         to_string(seed.s) + ") n=" + std::to_string(n));
                return res;
            }
        }
        for (long long m = -2; m <= 6; ++m)
            for (long long n = 1; n <= 40; ++n) {
                if (!telescope_check(seed, m, n).equal()) {
                    res.fail("telescoping failed for seed (" + to_string(seed.r) + "," +
                             to_string(seed.s) + ") m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
                    return res;
                }
            }
    }
    res.detail = "1000 seeds, fundamental n in [1,40], telescoping m in [-2,6]";
    return res;
}

Result criterion7_pell_oracle() {
    Result res;
    const BigInt y_max(100000);
    for (auto [d, n] : std::vector<std::pair<long, long>>{{8, 1}, {2, -1}, {2, 8}, {32, 4}}) {
        PellEquation eq{BigInt(d), BigInt(n)};
        std::vector<PellSolution> brute = pell_brute(eq, y_max);
        std::vector<PellSolution> fam = family_solutions(eq, y_max);
        if (brute != fam)
            res.fail("x^2-" + std::to_string(d) + "y^2=" + std::to_string(n) +
                     ": brute force and family parameterization differ");
    }
    if (res.pass) res.detail = "4 equations agree element-for-element up to y_max=100000";
    return res;
}

Result criterion8_performance() {
    Result res;
    RecurrenceSpec t = family_spec(Family::T);
    for (long long n : {10000LL, -10000LL}) {
        Clock::time_point start = Clock::now();
        BigInt fast = term_fast(t, n);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (ms >= 50.0) res.fail("term_fast(" + std::to_string(n) + ") took " +
                                 std::to_string(ms) + " ms (budget 50 ms)");
        if (fast != term(t, n)) res.fail("term_fast != term at n=" + std::to_string(n));
    }
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> idx(5000, 10000);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int i = 0; i < 20; ++i) {
        long long n = idx(rng) * (flip(rng) ? 1 : -1);
        if (term_fast(t, n) != term(t, n))
            res.fail("term_fast != term at n=" + std::to_string(n));
    }
    if (res.pass) res.detail = "term_fast at |n|=10^4 under 50 ms, 20 random indices agree";
    return res;
}

}  // namespace

int main(int, char** argv) {
    g_argv0 = argv[0];
    struct Criterion {
        int id;
        const char* label;
        double budget_s;
        Result (*fn)();
    };
    const std::vector<Criterion> criteria{
        {1, "corpus proof (symbolic + numeric sweep)", 5.0, criterion1_corpus},
        {2, "family prefixes and cross-relations", 5.0, criterion2_prefixes},
        {3, "elementary classifications", 5.0, criterion3_elementary},
        {4, "classification round-trip", 10.0, criterion4_roundtrip},
        {5, "certificate <=> classification equivalence, |r|,|s| <= 60", 60.0,
         criterion5_equivalence},
        {6, "fundamental and telescoping equations", 30.0, criterion6_fundamental_telescoping},
        {7, "pell oracle completeness at y_max=10^5", 30.0, criterion7_pell_oracle},
        {8, "term_fast performance and agreement", 5.0, criterion8_performance},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Clock::time_point start = Clock::now();
        Result res;
        try {
            res = c.fn();
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > c.budget_s)
            res.fail("runtime " + std::to_string(secs) + " s exceeds budget " +
                     std::to_string(c.budget_s) + " s");
        std::printf("%s  criterion %d: %s (%.2f s)%s%s\n", res.pass ? "PASS" : "FAIL", c.id,
                    c.label, secs, res.detail.empty() ? "" : " — ", res.detail.c_str());
        if (!res.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
