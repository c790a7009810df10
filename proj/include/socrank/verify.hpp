#pragma once

#include <map>

#include "socrank/axioms.hpp"

namespace socrank {

// ---------------------------------------------------------------------------
// The expected satisfaction matrix: 7 rules x 9 axioms
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& matrix_srs_names() {
    static const std::vector<std::string> names = {
        "iis", "lexcel", "plurality", "dual-lexcel", "const", "split-plurality", "plurality-tb"};
    return names;
}

/// Expected bits, rows in matrix_srs_names order, columns in table_axioms
/// order (NT, WIVIP, IWS, IBS, TO, SI, SSI, INUI, IIC).
inline constexpr std::array<std::array<int, 9>, 7> expected_matrix() {
    return {{
        {1, 1, 1, 1, 0, 0, 0, 1, 0},  // iis
        {1, 1, 1, 0, 0, 1, 1, 0, 1},  // lexcel
        {1, 1, 1, 0, 1, 1, 0, 0, 0},  // plurality
        {1, 1, 0, 1, 0, 1, 1, 0, 1},  // dual-lexcel
        {1, 0, 1, 1, 1, 1, 1, 1, 1},  // const
        {1, 1, 1, 0, 1, 0, 0, 0, 0},  // split-plurality
        {0, 1, 1, 0, 1, 1, 0, 0, 0},  // plurality-tb
    }};
}

inline int expected_bit(const std::string& srs, Axiom axiom) {
    const auto& names = matrix_srs_names();
    const auto cols = table_axioms();
    for (std::size_t r = 0; r < names.size(); ++r) {
        if (names[r] != srs) continue;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (cols[c] == axiom) return expected_matrix()[r][c];
    }
    throw DomainError("no expected bit for " + srs + " / " + axiom_label(axiom));
}

// ---------------------------------------------------------------------------
// Stored counterexamples
// ---------------------------------------------------------------------------

/// A frozen refutation instance. Entries are never trusted as-is: every use
/// replays them through the rule and the axiom's side conditions.
struct CounterexampleEntry {
    std::string id;
    std::string srs;
    std::vector<Axiom> axioms;
    Witness witness;
    std::string note;
};

namespace detail {

/// Ordered partition literal over coalition bitmasks.
inline OrderedPartition op8(const std::vector<std::vector<int>>& classes) {
    return partition_from_classes(8, classes);
}

}  // namespace detail

/// The stock of three-individual counterexamples behind the matrix zeros
/// that two individuals cannot witness. Masks encode coalitions over
/// individuals {0,1,2}: bit i set means individual i is a member.
inline const std::vector<CounterexampleEntry>& registry() {
    static const std::vector<CounterexampleEntry> entries = [] {
        std::vector<CounterexampleEntry> out;

        // Coalition masks at n=3: {} =0, {1}=1, {2}=2, {1,2}=3,
        // {3}=4, {1,3}=5, {2,3}=6, {1,2,3}=7.

        {
            // Sliding the empty coalition one class up collapses the depth
            // structure: before, individual 1 reaches depth 2 and individual
            // 2 only depth 1; after, every depth is 1.
            Witness w;
            w.n = 3;
            w.base = detail::op8({{7}, {5}, {0, 1, 2, 3, 4, 6}});
            w.transformed = detail::op8({{7}, {5, 0}, {1, 2, 3, 4, 6}});
            w.delta = 1u << 0;  // Δ = {∅}
            w.k1 = 2;
            w.k2 = 1;
            w.x = 0;
            w.y = 1;
            w.before = PairRel::first_above;
            w.after = PairRel::tie;
            w.note = "balanced slide of {∅} flattens the excellence depths";
            out.push_back({"iis-depth-collapse", "iis", {Axiom::si, Axiom::ssi, Axiom::iic},
                           std::move(w),
                           "IIS drops a strict pair under a pair-balanced slide that also "
                           "preserves the ceteris-paribus signature"});
        }
        {
            // Promoting {{1},{3}} out of total indifference separates 1 from
            // 2 even though neither belongs to the subfamily's intersection.
            Witness w;
            w.n = 3;
            w.base = detail::op8({{0, 1, 2, 3, 4, 5, 6, 7}});
            w.transformed = detail::op8({{1, 4}, {0, 2, 3, 5, 6, 7}});
            w.delta = (1u << 1) | (1u << 4);  // Δ = {{1},{3}}
            w.k1 = 0;
            w.x = 0;
            w.y = 1;
            w.before = PairRel::tie;
            w.after = PairRel::first_above;
            w.note = "upward split of {{1},{3}} out of the indifferent order";
            out.push_back({"lexcel-upward-split", "lexcel", {Axiom::inui}, std::move(w),
                           "lex-cel reacts to a promotion whose intersection avoids the pair"});
        }
        {
            // Sliding {{1},{2,3}} into the top class {X} hands individual 1
            // a full singleton share against individual 2's half share.
            Witness w;
            w.n = 3;
            w.base = detail::op8({{7}, {0, 1, 2, 3, 4, 5, 6}});
            w.transformed = detail::op8({{7, 1, 6}, {0, 2, 3, 4, 5}});
            w.delta = (1u << 1) | (1u << 6);  // Δ = {{1},{2,3}}
            w.k1 = 1;
            w.k2 = 0;
            w.x = 0;
            w.y = 1;
            w.before = PairRel::tie;
            w.after = PairRel::first_above;
            w.note = "split shares: 1/3+1 for individual 1 vs 1/3+1/2 for individual 2";
            out.push_back({"splitp-share-slide", "split-plurality", {Axiom::si, Axiom::ssi},
                           std::move(w),
                           "split-plurality reacts to a pair-balanced slide into the top class"});
        }
        {
            // Pushing {X} above {{1}} keeps every S∪{x} vs S∪{y} comparison
            // yet dilutes individual 1's singleton score to a shared third.
            Witness w;
            w.n = 3;
            w.base = detail::op8({{1}, {0, 2, 3, 4, 5, 6, 7}});
            w.transformed = detail::op8({{7}, {1}, {0, 2, 3, 4, 5, 6}});
            w.x = 0;
            w.y = 1;
            w.before = PairRel::first_above;
            w.after = PairRel::tie;
            w.note = "the grand coalition overtakes the singleton without touching any "
                     "ceteris-paribus comparison";
            out.push_back({"splitp-grand-dilution", "split-plurality", {Axiom::iic}, std::move(w),
                           "split-plurality depends on more than the pairwise signature"});
        }
        return out;
    }();
    return entries;
}

/// Search-derived three-individual witnesses for the zeros that neither two
/// individuals nor the stock entries cover: decomposing an extreme class can
/// reverse a strict lexicographic pair only once a third individual makes
/// the tail counts diverge.
inline const std::vector<CounterexampleEntry>& derived_witnesses() {
    static const std::vector<CounterexampleEntry> entries = [] {
        std::vector<CounterexampleEntry> out;
        {
            // theta(0)=(1,1,2) beats theta(1)=(1,0,3); promoting {{2}} ahead
            // of {{1}} inside the best class flips the first component.
            Witness w;
            w.n = 3;
            w.base = detail::op8({{1, 2}, {5}, {0, 3, 4, 6, 7}});
            w.transformed = detail::op8({{2}, {1}, {5}, {0, 3, 4, 6, 7}});
            w.x = 0;
            w.y = 1;
            w.before = PairRel::first_above;
            w.after = PairRel::second_above;
            w.note = "resolving the best-class tie in favour of {2} reverses the pair";
            out.push_back({"lexcel-best-split-reversal", "lexcel", {Axiom::ibs}, std::move(w),
                           "lex-cel strict pairs do not survive best-class decompositions"});
        }
        {
            // theta(0)=(1,2,1) dual-beats theta(1)=(0,2,2); pushing {{1}}
            // to the very bottom flips the worst component.
            Witness w;
            w.n = 3;
            w.base = detail::op8({{5}, {0, 3, 4, 7}, {1, 2, 6}});
            w.transformed = detail::op8({{5}, {0, 3, 4, 7}, {2, 6}, {1}});
            w.x = 0;
            w.y = 1;
            w.before = PairRel::first_above;
            w.after = PairRel::second_above;
            w.note = "isolating {1} in the new worst class reverses the dual comparison";
            out.push_back({"dual-lexcel-worst-split-reversal", "dual-lexcel", {Axiom::iws},
                           std::move(w),
                           "dual lex-cel strict pairs do not survive worst-class decompositions"});
        }
        return out;
    }();
    return entries;
}

/// Adds the stored-witness base orders for (srs, axiom) to a policy's seed
/// list, so sampled runs visit the known counterexample families first.
inline CheckPolicy seeded_policy(CheckPolicy p, const std::string& srs, Axiom axiom, int n) {
    for (const auto& list : {registry(), derived_witnesses()})
        for (const auto& entry : list) {
            if (entry.srs != srs || entry.witness.n != n) continue;
            bool relevant = false;
            for (Axiom a : entry.axioms) relevant = relevant || a == axiom;
            if (!relevant) continue;
            p.seed_orders.push_back(entry.witness.base);
            if (entry.witness.transformed) p.seed_orders.push_back(*entry.witness.transformed);
        }
    return p;
}

/// Replays one stored entry against the live rules. True only if every axiom
/// the entry claims to refute is actually refuted by it.
inline bool validate_entry(const CounterexampleEntry& entry) {
    const auto handles = roster(entry.witness.n);
    const SrsHandle* srs = find_srs(handles, entry.srs);
    if (!srs) return false;
    for (Axiom a : entry.axioms)
        if (!replay_witness(a, *srs, entry.witness)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certified matrix cells
// ---------------------------------------------------------------------------

struct Table3Cell {
    std::string srs;
    Axiom axiom = Axiom::nt;
    int expected = 0;
    AxiomVerdict verdict;
    int evidence_n = 0;        // universe the decisive evidence lives in
    bool from_stored = false;  // zero certified by a stored witness
    bool matches = false;
};

struct MatrixReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<Table3Cell> cells;  // row-major, 7 x 9

    bool all_match() const {
        for (const auto& c : cells)
            if (!c.matches) return false;
        return true;
    }

    const Table3Cell& cell(const std::string& srs, Axiom axiom) const {
        for (const auto& c : cells)
            if (c.srs == srs && c.axiom == axiom) return c;
        throw DomainError("no such matrix cell");
    }

    std::vector<const Table3Cell*> discrepancies() const {
        std::vector<const Table3Cell*> out;
        for (const auto& c : cells)
            if (!c.matches) out.push_back(&c);
        return out;
    }

    /// Hard gate used by the test suites.
    void ensure_matches() const {
        std::string msg;
        for (const auto* c : discrepancies())
            msg += std::string(msg.empty() ? "" : "; ") + c->srs + "/" + axiom_label(c->axiom) +
                   " expected " + std::to_string(c->expected) + " got " +
                   (c->verdict.holds ? "holds" : "fails");
        if (!msg.empty()) throw DiscrepancyError("matrix discrepancy: " + msg);
    }
};

// ---------------------------------------------------------------------------
// Verification driver
// ---------------------------------------------------------------------------

enum class Theorem { iis, lexcel, plurality };

inline const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::iis: return "iis";
        case Theorem::lexcel: return "lexcel";
        case Theorem::plurality: return "plurality";
    }
    return "?";
}

inline std::vector<Axiom> theorem_suite(Theorem t) {
    switch (t) {
        case Theorem::iis:
            return {Axiom::nt, Axiom::wivip, Axiom::iws, Axiom::ibs, Axiom::inui};
        case Theorem::lexcel: return {Axiom::wivip, Axiom::iws, Axiom::ssi};
        case Theorem::plurality: return {Axiom::nt, Axiom::wivip, Axiom::to, Axiom::si};
    }
    throw DomainError("unknown theorem");
}

struct SuiteReport {
    Theorem theorem = Theorem::iis;
    std::string srs;
    std::vector<AxiomVerdict> verdicts;
    bool all_hold = false;

    struct Separation {
        std::string srs;
        Axiom failed_axiom = Axiom::nt;
        int evidence_n = 0;
    };
    std::vector<Separation> separations;  // one per other roster rule
    bool separated = false;               // every other rule fails some suite axiom
};

struct IndependenceReport {
    Theorem theorem = Theorem::iis;
    struct Separator {
        Axiom axiom = Axiom::nt;
        std::string srs;  // fails `axiom`, passes the rest of the suite
    };
    std::vector<Separator> separators;
    bool complete = false;
};

struct Proposition1Report {
    int n = 0;
    bool holds = false;
    std::uint64_t orders_checked = 0;
    std::string failure;  // empty when holds
};

struct TopSiReport {
    int n = 0;
    struct Row {
        std::string srs;
        bool si_holds = false;
        bool top_si_holds = false;
        bool agree = false;
    };
    std::vector<Row> rows;
    bool all_agree = false;
};

struct RegistryReport {
    struct Row {
        std::string id;
        std::string srs;
        std::vector<Axiom> axioms;
        bool valid = false;
    };
    std::vector<Row> rows;
    bool all_valid = false;
};

/// Runs the whole verification battery over one universe. Owns the shared
/// enumeration and a cell cache so the matrix, the suites, and the
/// independence report never check the same (rule, axiom) twice.
class Verifier {
public:
    explicit Verifier(int n, CheckPolicy policy = {})
        : universe_(n), policy_(std::move(policy)), roster_(roster(n)) {
        orders_ = FlatOrders::enumerate(universe_.coalition_count(), policy_.max_enum_domain);
        policy_.orders = &orders_;
    }

    const Universe& universe() const { return universe_; }
    const std::vector<SrsHandle>& rules() const { return roster_; }

    /// One certified matrix cell: checker verdict, escalated to a stored
    /// three-individual witness when a zero is out of the run universe's
    /// reach.
    const Table3Cell& cell(const std::string& srs, Axiom axiom) {
        const auto key = std::make_pair(srs, static_cast<int>(axiom));
        auto it = cells_.find(key);
        if (it != cells_.end()) return it->second;

        const SrsHandle* handle = find_srs(roster_, srs);
        if (!handle) throw DomainError("unknown rule " + srs);

        Table3Cell c;
        c.srs = srs;
        c.axiom = axiom;
        c.expected = expected_bit(srs, axiom);
        c.verdict = check_axiom(axiom, *handle, universe_,
                                seeded_policy(policy_, srs, axiom, universe_.n));
        c.evidence_n = universe_.n;
        if (c.expected == 0 && c.verdict.holds) {
            // the zero needs more individuals than this run has
            if (const CounterexampleEntry* entry = stored_witness(srs, axiom)) {
                if (validate_entry(*entry)) {
                    AxiomVerdict v;
                    v.axiom = axiom;
                    v.mode = EvidenceMode::registry;
                    v.holds = false;
                    v.witness = entry->witness;
                    v.instances = 1;
                    v.universe_n = entry->witness.n;
                    c.verdict = std::move(v);
                    c.evidence_n = entry->witness.n;
                    c.from_stored = true;
                }
            }
        }
        c.matches = c.verdict.holds == (c.expected == 1);
        return cells_.emplace(key, std::move(c)).first->second;
    }

    MatrixReport table3() {
        MatrixReport report;
        report.n = universe_.n;
        report.seed = policy_.seed;
        for (const auto& name : matrix_srs_names())
            for (Axiom a : table_axioms()) report.cells.push_back(cell(name, a));
        return report;
    }

    /// Implications (i)-(iv) between lex-cel, plurality and IIS over every
    /// enumerated order and every ordered pair.
    Proposition1Report proposition1() {
        Proposition1Report rep;
        rep.n = universe_.n;
        const int n = universe_.n;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const WeakOrderView v = orders_[i];
            const SocialCode L = lex_cel_code(n, v);
            const SocialCode P = plurality_code(n, v);
            const SocialCode I = iis_code(n, v);
            ++rep.orders_checked;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (x == y) continue;
                    const PairRel rl = pair_rel(L, x, y);
                    const PairRel rp = pair_rel(P, x, y);
                    const PairRel ri = pair_rel(I, x, y);
                    const bool ok =
                        (rl != PairRel::tie || (rp == PairRel::tie && ri == PairRel::tie)) &&
                        (rl != PairRel::first_above || (rp != PairRel::second_above &&
                                                        ri != PairRel::second_above)) &&
                        (rp != PairRel::first_above ||
                         (rl == PairRel::first_above && ri != PairRel::second_above)) &&
                        (ri != PairRel::first_above ||
                         (rl == PairRel::first_above && rp != PairRel::second_above));
                    if (!ok) {
                        rep.holds = false;
                        rep.failure = "implication broken at order " + std::to_string(i) +
                                      " pair (" + std::to_string(x + 1) + "," +
                                      std::to_string(y + 1) + ")";
                        return rep;
                    }
                }
        }
        rep.holds = true;
        return rep;
    }

    /// The "if" direction of one characterization plus the in-roster
    /// separation: the theorem's rule passes its suite, every other roster
    /// rule fails at least one suite axiom.
    SuiteReport suite(Theorem t) {
        SuiteReport rep;
        rep.theorem = t;
        rep.srs = theorem_name(t);
        const SrsHandle* handle = find_srs(roster_, rep.srs);
        CheckPolicy p = policy_;
        rep.all_hold = true;
        for (Axiom a : theorem_suite(t)) {
            AxiomVerdict v = check_axiom(a, *handle, universe_, p);
            rep.all_hold = rep.all_hold && v.holds;
            rep.verdicts.push_back(std::move(v));
        }
        rep.separated = true;
        for (const auto& other : roster_) {
            if (other.name == rep.srs) continue;
            bool found = false;
            for (Axiom a : theorem_suite(t)) {
                const Table3Cell& c = cell(other.name, a);
                if (!c.verdict.holds) {
                    rep.separations.push_back({other.name, a, c.evidence_n});
                    found = true;
                    break;
                }
            }
            if (!found) rep.separated = false;
        }
        return rep;
    }

    /// For each suite axiom, a roster rule failing exactly that axiom while
    /// passing the rest of the suite.
    IndependenceReport logical_independence(Theorem t) {
        IndependenceReport rep;
        rep.theorem = t;
        const auto axioms = theorem_suite(t);
        for (Axiom dropped : axioms) {
            bool found = false;
            for (const auto& candidate : roster_) {
                if (candidate.name == theorem_name(t)) continue;
                bool fits = !cell(candidate.name, dropped).verdict.holds;
                for (Axiom keep : axioms) {
                    if (!fits) break;
                    if (keep == dropped) continue;
                    fits = cell(candidate.name, keep).verdict.holds;
                }
                if (fits) {
                    rep.separators.push_back({dropped, candidate.name});
                    found = true;
                    break;
                }
            }
            if (!found)
                throw MissingSeparatorError(std::string("no roster rule separates ") +
                                            axiom_label(dropped) + " in the " + theorem_name(t) +
                                            " suite");
        }
        rep.complete = rep.separators.size() == axioms.size();
        return rep;
    }

    /// SI and Top-SI verdicts agree on every roster rule.
    TopSiReport topsi_equivalence() {
        TopSiReport rep;
        rep.n = universe_.n;
        rep.all_agree = true;
        for (const auto& handle : roster_) {
            const AxiomVerdict si = check_axiom(Axiom::si, handle, universe_, policy_);
            const AxiomVerdict top = check_axiom(Axiom::top_si, handle, universe_, policy_);
            TopSiReport::Row row{handle.name, si.holds, top.holds, si.holds == top.holds};
            rep.all_agree = rep.all_agree && row.agree;
            rep.rows.push_back(std::move(row));
        }
        return rep;
    }

    RegistryReport replay_registry() {
        RegistryReport rep;
        rep.all_valid = true;
        for (const auto& list : {registry(), derived_witnesses()})
            for (const auto& entry : list) {
                RegistryReport::Row row{entry.id, entry.srs, entry.axioms,
                                        validate_entry(entry)};
                rep.all_valid = rep.all_valid && row.valid;
                rep.rows.push_back(std::move(row));
            }
        return rep;
    }

private:
    static const CounterexampleEntry* stored_witness(const std::string& srs, Axiom axiom) {
        auto scan = [&](const std::vector<CounterexampleEntry>& list)
            -> const CounterexampleEntry* {
            for (const auto& entry : list) {
                if (entry.srs != srs) continue;
                for (Axiom a : entry.axioms)
                    if (a == axiom) return &entry;
            }
            return nullptr;
        };
        if (const CounterexampleEntry* hit = scan(registry())) return hit;
        return scan(derived_witnesses());
    }

    Universe universe_;
    CheckPolicy policy_;
    FlatOrders orders_;
    std::vector<SrsHandle> roster_;
    std::map<std::pair<std::string, int>, Table3Cell> cells_;
};

// ---------------------------------------------------------------------------
// Free functions mirroring the verification surface
// ---------------------------------------------------------------------------

struct Table3Config {
    int n = 2;
    CheckPolicy policy{};
};

inline MatrixReport build_table3(const Table3Config& config) {
    Verifier v(config.n, config.policy);
    return v.table3();
}

inline Proposition1Report check_proposition1(int n, CheckPolicy policy = {}) {
    Verifier v(n, std::move(policy));
    return v.proposition1();
}

inline SuiteReport check_theorem_suite(Theorem t, int n, CheckPolicy policy = {}) {
    Verifier v(n, std::move(policy));
    return v.suite(t);
}

inline IndependenceReport check_logical_independence(Theorem t, int n, CheckPolicy policy = {}) {
    Verifier v(n, std::move(policy));
    return v.logical_independence(t);
}

inline TopSiReport check_topsi_equivalence(int n = 2, CheckPolicy policy = {}) {
    Verifier v(n, std::move(policy));
    return v.topsi_equivalence();
}

}  // namespace socrank
