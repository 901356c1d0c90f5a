// pellseq — exact generation, identity proving, classification, certificates,
// and a brute-force Pell oracle for the recurrence A_n = 6A_{n-1} - A_{n-2}.
//
// Exit codes: 0 success/proven/found; 1 verified negative (counterexample,
// no certificate, not in the four families, oracle mismatch); 2 usage error.

#include "pellseq/identity.hpp"
#include "pellseq/pell.hpp"
#include "pellseq/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace pellseq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const ordered_json& rec) { std::cout << rec.dump() << "\n"; }

BigInt parse_bigint_flag(const std::string& text, const std::string& flag) {
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw UsageError(flag + ": not an integer: '" + text + "'");
    return v;
}

std::string mu_str(const Rational& mu) { return mu.str(); }

// ---------------------------------------------------------------- gen

int run_gen(const std::string& family, const std::string& r_text, const std::string& s_text,
            long long from, long long to) {
    if (from > to) throw UsageError("--from must be <= --to");
    const bool have_seed = !r_text.empty() || !s_text.empty();
    if (family.empty() == !have_seed)
        throw UsageError("choose either --family or a seed (--r and --s)");

    std::optional<Family> fam;
    RecurrenceSpec spec(6, -1, BigInt(0), BigInt(1));
    bool halve = false;
    if (!family.empty()) {
        fam = family_from_name(family);
        if (!fam) throw UsageError("unknown family '" + family + "' (T, L, B, C, E, NSW, R)");
        if (*fam == Family::NSW) {
            spec = family_spec(Family::C);
            halve = true;
        } else {
            spec = family_spec(*fam);
        }
    } else {
        if (r_text.empty() || s_text.empty()) throw UsageError("a seed needs both --r and --s");
        spec = RecurrenceSpec(6, -1, parse_bigint_flag(r_text, "--r"),
                              parse_bigint_flag(s_text, "--s"));
    }

    BigInt prev = term_fast(spec, from - 1);
    BigInt cur = term_fast(spec, from);
    for (long long n = from; n <= to; ++n) {
        BigInt shown = cur;
        if (halve) shown /= 2;
        if (g_json) {
            emit({{"kind", "term"}, {"n", n}, {"value", to_string(shown)}});
        } else {
            std::printf("%8lld  %s\n", n, to_string(shown).c_str());
        }
        BigInt next = spec.p * cur + spec.q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- prove

int run_prove(const std::string& name, bool all, const std::string& expr,
              const std::vector<long long>& sweep) {
    int chosen = (!name.empty() ? 1 : 0) + (all ? 1 : 0) + (!expr.empty() ? 1 : 0);
    if (chosen != 1) throw UsageError("choose exactly one of --identity, --all, --expr");

    std::vector<CorpusEntry> entries;
    if (all) {
        entries = corpus();
    } else if (!name.empty()) {
        std::optional<CorpusEntry> e = corpus_entry(name);
        if (!e) throw UsageError("unknown identity '" + name + "'");
        entries.push_back(*e);
    } else {
        entries.push_back({"expr", expr});
    }

    bool any_negative = false;
    for (const CorpusEntry& e : entries) {
        IdentityAst ast;
        try {
            ast = parse_identity(e.text);
        } catch (const ParseError& pe) {
            throw UsageError(std::string("--expr: ") + pe.what());
        }
        ProofOutcome outcome = prove(ast);
        std::optional<long long> sweep_fail;
        if (sweep.size() == 2 && outcome.proven())
            sweep_fail = numeric_sweep_failure(ast, sweep[0], sweep[1]);
        if (outcome.proven() && sweep_fail)
            throw std::logic_error("numeric sweep disagrees with symbolic proof");

        if (g_json) {
            ordered_json rec{{"kind", "proof"}, {"name", e.name}};
            if (outcome.proven()) {
                rec["outcome"] = "proven";
            } else {
                rec["outcome"] = "counterexample";
                rec["witness_n"] = outcome.counterexample->n;
                rec["lhs"] = outcome.counterexample->lhs_value.str();
                rec["rhs"] = outcome.counterexample->rhs_value.str();
            }
            if (sweep.size() == 2 && outcome.proven()) rec["sweep_ok"] = true;
            emit(rec);
        } else {
            if (outcome.proven()) {
                std::string extra;
                if (sweep.size() == 2)
                    extra = " (numeric sweep [" + std::to_string(sweep[0]) + ", " +
                            std::to_string(sweep[1]) + "] ok)";
                std::cout << e.name << ": Proven" << extra << "\n";
            } else {
                const Counterexample& cx = *outcome.counterexample;
                std::cout << e.name << ": Counterexample at n=" << cx.n
                          << " (lhs=" << cx.lhs_value.str() << ", rhs=" << cx.rhs_value.str()
                          << ")\n";
            }
        }
        if (!outcome.proven()) any_negative = true;
    }
    return any_negative ? kExitNegative : kExitOk;
}

// ---------------------------------------------------------------- classify / certificate

SeedPair seed_from_flags(const std::string& r_text, const std::string& s_text) {
    if (r_text.empty() || s_text.empty()) throw UsageError("both --r and --s are required");
    SeedPair seed{parse_bigint_flag(r_text, "--r"), parse_bigint_flag(s_text, "--s")};
    if (seed.r == 0 && seed.s == 0) throw UsageError("seed (0, 0) is not allowed");
    return seed;
}

int run_classify(const std::string& r_text, const std::string& s_text) {
    SeedPair seed = seed_from_flags(r_text, s_text);
    Classification cls = classify(seed);
    if (g_json) {
        ordered_json rec{{"kind", "classification"}};
        if (cls.in_four_families()) {
            rec["family"] = family_name(cls.member->family);
            rec["shift"] = cls.member->shift;
            rec["mu_num"] = to_string(cls.member->mu.num());
            rec["mu_den"] = to_string(cls.member->mu.den());
        } else {
            rec["family"] = "none";
        }
        emit(rec);
    } else {
        if (cls.in_four_families()) {
            std::cout << "classification: member family=" << family_name(cls.member->family)
                      << " shift=" << cls.member->shift << " mu=" << mu_str(cls.member->mu)
                      << "\n";
        } else {
            std::cout << "classification: not-in-four-families\n";
        }
    }
    return cls.in_four_families() ? kExitOk : kExitNegative;
}

int run_certificate(const std::string& r_text, const std::string& s_text, long long window,
                    long long n_check) {
    SeedPair seed = seed_from_flags(r_text, s_text);
    std::optional<Certificate> cert = certificate(seed, window, n_check);
    if (g_json) {
        ordered_json rec{{"kind", "certificate"}};
        if (cert) {
            rec["m"] = cert->m;
            rec["h"] = to_string(cert->h);
            rec["c"] = to_string(cert->c);
        } else {
            rec["found"] = false;
        }
        emit(rec);
    } else {
        if (cert) {
            std::cout << "certificate: m=" << cert->m << " h=" << to_string(cert->h)
                      << " c=" << to_string(cert->c) << "\n";
        } else {
            std::cout << "certificate: none (window " << window << ")\n";
        }
    }
    return cert ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- pell

int run_pell(const std::string& d_text, const std::string& n_text, long y_max,
             bool compare_families) {
    PellEquation eq{parse_bigint_flag(d_text, "--d"), parse_bigint_flag(n_text, "--n-const")};
    if (eq.d < 2 || is_perfect_square(eq.d))
        throw UsageError("--d must be >= 2 and not a perfect square");
    if (y_max < 0) throw UsageError("--y-max must be >= 0");

    std::vector<PellSolution> brute = pell_brute(eq, BigInt(y_max));
    for (const PellSolution& sol : brute) {
        if (g_json) {
            emit({{"kind", "solution"}, {"x", to_string(sol.x)}, {"y", to_string(sol.y)}});
        } else {
            std::cout << "x=" << to_string(sol.x) << " y=" << to_string(sol.y) << "\n";
        }
    }
    if (!compare_families) return kExitOk;

    std::vector<PellSolution> fam;
    try {
        fam = family_solutions(eq, BigInt(y_max));
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    bool match = fam == brute;
    if (g_json) {
        emit({{"kind", "verdict"}, {"match", match}});
    } else {
        std::cout << "family-comparison: " << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- relations / fundamental

int run_relations(long long from, long long to) {
    if (from > to) throw UsageError("--from must be <= --to");
    RelationReport rep = cross_relations_check(from, to);
    if (g_json) {
        ordered_json rec{{"kind", "relations"}, {"from", from}, {"to", to}, {"ok", rep.ok()}};
        if (!rep.ok()) {
            rec["relation"] = rep.first_failure->relation;
            rec["n"] = rep.first_failure->n;
        }
        emit(rec);
    } else {
        if (rep.ok()) {
            std::cout << "relations: ok for n in [" << from << ", " << to << "]\n";
        } else {
            std::cout << "relations: FAILED '" << rep.first_failure->relation
                      << "' at n=" << rep.first_failure->n << "\n";
        }
    }
    return rep.ok() ? kExitOk : kExitNegative;
}

int run_fundamental(const std::string& r_text, const std::string& s_text, long long n_from,
                    long long n_to) {
    SeedPair seed = seed_from_flags(r_text, s_text);
    if (n_from > n_to) throw UsageError("--n-from must be <= --n-to");
    for (long long n = n_from; n <= n_to; ++n) {
        EqualityReport rep = fundamental_check(seed, n);
        if (!rep.equal()) {
            if (g_json) {
                emit({{"kind", "fundamental"},
                      {"n", n},
                      {"ok", false},
                      {"lhs", to_string(rep.lhs)},
                      {"rhs", to_string(rep.rhs)}});
            } else {
                std::cout << "fundamental: MISMATCH at n=" << n << " lhs=" << to_string(rep.lhs)
                          << " rhs=" << to_string(rep.rhs) << "\n";
            }
            return kExitNegative;
        }
    }
    if (g_json) {
        emit({{"kind", "fundamental"}, {"n_from", n_from}, {"n_to", n_to}, {"ok", true}});
    } else {
        std::cout << "fundamental: ok for n in [" << n_from << ", " << n_to << "]\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sequences, identities and Pell certificates for A(n) = 6A(n-1) - A(n-2)"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format: table or json-lines")
        ->check(CLI::IsMember({"table", "json-lines"}));

    std::string family, r_text, s_text, d_text, n_text, ident, expr;
    long long from = 0, to = 0, window = 10, n_check = 10;
    long long rel_from = -10, rel_to = 30, n_from = 1, n_to = 40;
    long y_max = 0;
    bool all = false, compare_families = false;
    std::vector<long long> sweep;

    CLI::App* gen = app.add_subcommand("gen", "generate terms of a family or a seeded sequence");
    gen->add_option("--family", family, "family name: T, L, B, C, E, NSW, R");
    gen->add_option("--r", r_text, "seed A_0");
    gen->add_option("--s", s_text, "seed A_1");
    gen->add_option("--from", from, "first index")->required();
    gen->add_option("--to", to, "last index")->required();

    CLI::App* prove_cmd = app.add_subcommand("prove", "prove identities symbolically");
    prove_cmd->add_option("--identity", ident, "corpus identity name");
    prove_cmd->add_flag("--all", all, "prove the whole corpus");
    prove_cmd->add_option("--expr", expr, "identity expression in the DSL");
    prove_cmd->add_option("--sweep", sweep, "numeric sweep range: lo hi")->expected(2);

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a seed into mu * {T, B, C, L}");
    classify_cmd->add_option("--r", r_text, "seed A_0")->required();
    classify_cmd->add_option("--s", s_text, "seed A_1")->required();

    CLI::App* cert_cmd = app.add_subcommand("certificate", "find (m, h, c) with 32A_n^2 + c = h*L(2n+m+2)");
    cert_cmd->add_option("--r", r_text, "seed A_0")->required();
    cert_cmd->add_option("--s", s_text, "seed A_1")->required();
    cert_cmd->add_option("--window", window, "search window for m (default 10)");
    cert_cmd->add_option("--n-check", n_check, "verification range (default 10)");

    CLI::App* pell_cmd = app.add_subcommand("pell", "brute-force x^2 - D y^2 = N");
    pell_cmd->add_option("--d", d_text, "D (>= 2, nonsquare)")->required();
    pell_cmd->add_option("--n-const", n_text, "N")->required();
    pell_cmd->add_option("--y-max", y_max, "largest y to test")->required();
    pell_cmd->add_flag("--compare-families", compare_families,
                       "compare against the family-parameterized solutions");

    CLI::App* rel_cmd = app.add_subcommand("relations", "check the cross-family relations");
    rel_cmd->add_option("--from", rel_from, "first n (default -10)");
    rel_cmd->add_option("--to", rel_to, "last n (default 30)");

    CLI::App* fund_cmd = app.add_subcommand("fundamental", "check the square equation for a seed");
    fund_cmd->add_option("--r", r_text, "seed A_0")->required();
    fund_cmd->add_option("--s", s_text, "seed A_1")->required();
    fund_cmd->add_option("--n-from", n_from, "first n (default 1)");
    fund_cmd->add_option("--n-to", n_to, "last n (default 40)");

    for (CLI::App* sub : {gen, prove_cmd, classify_cmd, cert_cmd, pell_cmd, rel_cmd, fund_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    g_json = (format == "json-lines");
    try {
        if (app.got_subcommand(gen)) return run_gen(family, r_text, s_text, from, to);
        if (app.got_subcommand(prove_cmd)) return run_prove(ident, all, expr, sweep);
        if (app.got_subcommand(classify_cmd)) return run_classify(r_text, s_text);
        if (app.got_subcommand(cert_cmd)) return run_certificate(r_text, s_text, window, n_check);
        if (app.got_subcommand(pell_cmd)) return run_pell(d_text, n_text, y_max, compare_families);
        if (app.got_subcommand(rel_cmd)) return run_relations(rel_from, rel_to);
        if (app.got_subcommand(fund_cmd)) return run_fundamental(r_text, s_text, n_from, n_to);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
