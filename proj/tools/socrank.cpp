// socrank: social ranking solutions over coalition rankings, with
// machine-checked independence axioms.
//
// Exit codes: 0 pass, 1 check failure, 2 input/flag error, 3 usage error
// (unknown rule or axiom name).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "socrank/io.hpp"
#include "socrank/socrank.hpp"

namespace {

using namespace socrank;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUsageError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct PolicyFlags {
    int n = 2;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;      // 0 = default
    std::size_t samples = 0;       // 0 = default
    std::string mode = "auto";

    CheckPolicy policy() const {
        CheckPolicy p;
        p.seed = seed;
        if (budget > 0) p.max_instances = budget;
        if (samples > 0) p.sample_orders = samples;
        if (mode == "exhaustive") p.mode = CheckPolicy::Mode::exhaustive;
        if (mode == "sampled") p.mode = CheckPolicy::Mode::sampled;
        return p;
    }
};

void add_policy_flags(CLI::App* cmd, PolicyFlags& f, bool with_n = true) {
    if (with_n) cmd->add_option("--n", f.n, "universe size (2 or 3)")->check(CLI::Range(2, 3));
    cmd->add_option("--seed", f.seed, "seed for sampled evidence");
    cmd->add_option("--budget", f.budget, "max quantified instances per check");
    cmd->add_option("--samples", f.samples, "sampled base orders per heavy check");
    cmd->add_option("--mode", f.mode, "evidence mode")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
}

/// rank <file> --rule <name> [--tiebreak "3>2>1"]
int cmd_rank(const std::string& file, const std::string& rule, const std::string& tiebreak) {
    static const std::vector<std::string> known = {
        "lexcel", "dual-lexcel", "plurality", "iis", "split-plurality", "plurality-tb", "const"};
    if (std::find(known.begin(), known.end(), rule) == known.end()) {
        std::cerr << "unknown rule: " << rule << "\n";
        return kExitUsageError;
    }
    const PowerRanking r = parse_power_ranking(read_file(file));
    SocialRanking out = [&] {
        if (rule == "lexcel") return lex_cel(r);
        if (rule == "dual-lexcel") return dual_lex_cel(r);
        if (rule == "plurality") return plurality(r);
        if (rule == "iis") return iis(r);
        if (rule == "split-plurality") return split_plurality(r);
        if (rule == "const") return const_x(r);
        const TieBreakOrder tb = tiebreak.empty()
                                     ? TieBreakOrder::ascending(r.universe().n)
                                     : parse_tiebreak(tiebreak, r.universe().n);
        return plurality_tiebreak(r, tb);
    }();
    std::cout << render_social(out) << "\n";
    return kExitPass;
}

/// check <rule> <axiom> [flags]
int cmd_check(const std::string& rule, const std::string& axiom_name, const PolicyFlags& flags,
              bool as_json) {
    const auto handles = roster(flags.n);
    const SrsHandle* srs = find_srs(handles, rule);
    if (!srs) {
        std::cerr << "unknown rule: " << rule << "\n";
        return kExitUsageError;
    }
    const auto axiom = parse_axiom(axiom_name);
    if (!axiom) {
        std::cerr << "unknown axiom: " << axiom_name << "\n";
        return kExitUsageError;
    }
    const Universe u(flags.n);
    const CheckPolicy policy = seeded_policy(flags.policy(), rule, *axiom, flags.n);
    const AxiomVerdict verdict = check_axiom(*axiom, *srs, u, policy);

    if (as_json) {
        std::cout << verdict_to_json(verdict, rule).dump(2) << "\n";
    } else {
        std::cout << axiom_label(verdict.axiom) << " for " << rule << " at n=" << flags.n << ": "
                  << (verdict.holds ? "holds" : "fails") << " (" << to_string(verdict.mode) << ", "
                  << verdict.instances << " instances)\n";
        if (verdict.holds && verdict.mode == EvidenceMode::sampled)
            std::cout << "note: sampled evidence means no violation found, not proof\n";
        if (verdict.witness) {
            const Witness& w = *verdict.witness;
            std::cout << "witness pair: " << w.x + 1 << " vs " << w.y + 1 << ", "
                      << to_string(w.before) << " became " << to_string(w.after) << "\n";
            std::cout << "  " << w.note << "\n";
            std::cout << "ranking:\n" << render_ranking(w.n, w.base);
            if (w.transformed)
                std::cout << "transformed:\n" << render_ranking(w.n, *w.transformed);
            if (w.permutation) {
                std::cout << "permutation:";
                for (int v : *w.permutation) std::cout << " " << v + 1;
                std::cout << "\n";
            }
        }
    }
    return verdict.holds ? kExitPass : kExitCheckFailed;
}

/// table3 [flags] --format text|json|csv
int cmd_table3(const PolicyFlags& flags, const std::string& format) {
    Verifier verifier(flags.n, flags.policy());
    const MatrixReport report = verifier.table3();
    if (format == "json")
        std::cout << table3_to_json(report).dump(2) << "\n";
    else if (format == "csv")
        std::cout << table3_to_csv(report);
    else
        std::cout << table3_to_text(report);
    return report.all_match() ? kExitPass : kExitCheckFailed;
}

/// verify [--n] [--seed]: the full battery.
int cmd_verify(const PolicyFlags& flags) {
    bool ok = true;
    auto section = [&](const std::string& name, bool pass, const std::string& detail = "") {
        std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        ok = ok && pass;
    };

    Verifier verifier(flags.n, flags.policy());

    const RegistryReport reg = verifier.replay_registry();
    section("counterexample replay", reg.all_valid,
            std::to_string(reg.rows.size()) + " stored entries");

    const Proposition1Report prop = verifier.proposition1();
    section("proposition 1 implications", prop.holds,
            std::to_string(prop.orders_checked) + " orders" +
                (prop.holds ? "" : "; " + prop.failure));

    for (Theorem t : {Theorem::iis, Theorem::lexcel, Theorem::plurality}) {
        const SuiteReport suite = verifier.suite(t);
        std::string detail;
        for (const auto& v : suite.verdicts) {
            if (!detail.empty()) detail += ", ";
            detail += std::string(axiom_label(v.axiom)) + (v.holds ? "+" : "-");
        }
        section(std::string("axiom suite for ") + theorem_name(t),
                suite.all_hold && suite.separated, detail);
    }

    for (Theorem t : {Theorem::lexcel, Theorem::plurality}) {
        try {
            const IndependenceReport rep = verifier.logical_independence(t);
            std::string detail;
            for (const auto& s : rep.separators) {
                if (!detail.empty()) detail += ", ";
                detail += std::string(axiom_label(s.axiom)) + " by " + s.srs;
            }
            section(std::string("logical independence for ") + theorem_name(t), rep.complete,
                    detail);
        } catch (const MissingSeparatorError& e) {
            section(std::string("logical independence for ") + theorem_name(t), false, e.what());
        }
    }

    {
        Verifier base2(2, flags.policy());
        const TopSiReport top = base2.topsi_equivalence();
        section("top-slide equivalence at n=2", top.all_agree,
                std::to_string(top.rows.size()) + " rules");
    }

    return ok ? kExitPass : kExitCheckFailed;
}

/// enumerate --m <int> [--max-m cap]
int cmd_enumerate(int m, int max_m) {
    const std::uint64_t count = count_weak_orders(m, max_m);
    std::cout << "weak orders on " << m << " elements: " << count << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"social ranking solutions over coalition rankings"};
    app.require_subcommand(1);

    // rank
    auto* rank = app.add_subcommand("rank", "apply a ranking rule to a ranking file");
    std::string rank_file, rank_rule, rank_tiebreak;
    rank->add_option("file", rank_file, "ranking document")->required();
    rank->add_option("--rule", rank_rule, "rule name")->required();
    rank->add_option("--tiebreak", rank_tiebreak, "fixed order like \"3>2>1\"");

    // check
    auto* check = app.add_subcommand("check", "check one axiom against one rule");
    std::string check_rule, check_axiom_name;
    bool check_json = false;
    PolicyFlags check_flags;
    check->add_option("rule", check_rule, "rule name")->required();
    check->add_option("axiom", check_axiom_name, "axiom name")->required();
    add_policy_flags(check, check_flags);
    check->add_flag("--json", check_json, "machine-readable verdict");

    // table3
    auto* table = app.add_subcommand("table3", "reproduce the satisfaction matrix");
    PolicyFlags table_flags;
    std::string table_format = "text";
    add_policy_flags(table, table_flags);
    table->add_option("--format", table_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run the full verification battery");
    PolicyFlags verify_flags;
    add_policy_flags(verify, verify_flags);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count weak orders on m elements");
    int enum_m = 4;
    int enum_max = socrank::default_enum_cap();
    enumerate->add_option("--m", enum_m, "domain size")->required();
    enumerate->add_option("--max-m", enum_max, "override the enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (rank->parsed()) return cmd_rank(rank_file, rank_rule, rank_tiebreak);
        if (check->parsed())
            return cmd_check(check_rule, check_axiom_name, check_flags, check_json);
        if (table->parsed()) return cmd_table3(table_flags, table_format);
        if (verify->parsed()) return cmd_verify(verify_flags);
        if (enumerate->parsed()) return cmd_enumerate(enum_m, enum_max);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitUsageError;
}
