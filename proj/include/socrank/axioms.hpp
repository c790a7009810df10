#pragma once

#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>

#include "socrank/solutions.hpp"

namespace socrank {

// ---------------------------------------------------------------------------
// Axiom identifiers
// ---------------------------------------------------------------------------

enum class Axiom : int { nt, wivip, iws, ibs, to, si, ssi, inui, iic, top_si };

inline constexpr const char* axiom_label(Axiom a) {
    switch (a) {
        case Axiom::nt: return "NT";
        case Axiom::wivip: return "WIVIP";
        case Axiom::iws: return "IWS";
        case Axiom::ibs: return "IBS";
        case Axiom::to: return "TO";
        case Axiom::si: return "SI";
        case Axiom::ssi: return "SSI";
        case Axiom::inui: return "INUI";
        case Axiom::iic: return "IIC";
        case Axiom::top_si: return "Top-SI";
    }
    return "?";
}

inline constexpr const char* axiom_id(Axiom a) {
    switch (a) {
        case Axiom::nt: return "nt";
        case Axiom::wivip: return "wivip";
        case Axiom::iws: return "iws";
        case Axiom::ibs: return "ibs";
        case Axiom::to: return "to";
        case Axiom::si: return "si";
        case Axiom::ssi: return "ssi";
        case Axiom::inui: return "inui";
        case Axiom::iic: return "iic";
        case Axiom::top_si: return "top-si";
    }
    return "?";
}

inline std::optional<Axiom> parse_axiom(std::string_view id) {
    for (Axiom a : {Axiom::nt, Axiom::wivip, Axiom::iws, Axiom::ibs, Axiom::to, Axiom::si,
                    Axiom::ssi, Axiom::inui, Axiom::iic, Axiom::top_si})
        if (id == axiom_id(a)) return a;
    return std::nullopt;
}

/// The nine matrix columns. Top-SI is checked separately and is not a
/// matrix column.
inline constexpr std::array<Axiom, 9> table_axioms() {
    return {Axiom::nt,  Axiom::wivip, Axiom::iws,  Axiom::ibs, Axiom::to,
            Axiom::si,  Axiom::ssi,   Axiom::inui, Axiom::iic};
}

// ---------------------------------------------------------------------------
// Verdicts, witnesses, budgets
// ---------------------------------------------------------------------------

enum class EvidenceMode : std::uint8_t { exhaustive, sampled, registry };

inline constexpr const char* to_string(EvidenceMode m) {
    switch (m) {
        case EvidenceMode::exhaustive: return "exhaustive";
        case EvidenceMode::sampled: return "sampled";
        case EvidenceMode::registry: return "registry";
    }
    return "?";
}

/// A concrete refutation instance. Everything needed to replay the violation
/// through the public rule surface is stored: the order(s), the transform
/// parameters, the pair, and the observed relations.
struct Witness {
    int n = 0;
    OrderedPartition base;
    std::optional<OrderedPartition> transformed;
    std::optional<std::vector<int>> permutation;  // NT only
    std::uint32_t delta = 0;  // bitset over coalition masks (slide/split family)
    int k1 = -1;              // slide source class / split class (0-based)
    int k2 = -1;              // slide target class (0-based)
    Individual x = 0;
    Individual y = 0;
    PairRel before = PairRel::tie;
    PairRel after = PairRel::tie;
    std::string note;
};

struct AxiomVerdict {
    Axiom axiom = Axiom::nt;
    EvidenceMode mode = EvidenceMode::exhaustive;
    bool holds = true;
    std::optional<Witness> witness;
    std::uint64_t instances = 0;  // quantified instances examined
    int universe_n = 0;
};

/// Evidence policy for one checker run. `automatic` resolves to exhaustive
/// for n <= 2 and for the axioms whose per-order fan-out is bounded; the
/// decomposition-heavy axioms (IWS, IBS, SI, SSI, Top-SI) fall back to a
/// seeded sample at n >= 3.
struct CheckPolicy {
    enum class Mode { automatic, exhaustive, sampled } mode = Mode::automatic;
    std::uint64_t seed = 1;
    std::size_t sample_orders = 3000;
    std::uint64_t max_instances = 400'000'000;
    int max_enum_domain = default_enum_cap();
    std::vector<OrderedPartition> seed_orders;  // tried before the random sample
    const FlatOrders* orders = nullptr;         // shared enumeration, optional
};

inline bool decomposition_heavy(Axiom a) {
    return a == Axiom::iws || a == Axiom::ibs || a == Axiom::si || a == Axiom::ssi ||
           a == Axiom::top_si;
}

// ---------------------------------------------------------------------------
// Transformation generators
// ---------------------------------------------------------------------------
// Each generator feeds the visitor every transformed order the axiom
// quantifies over for one base order. Visitors return false to stop early.

namespace detail {

inline std::vector<std::vector<int>> members_by_class(WeakOrderView v) {
    std::vector<std::vector<int>> members(v.num_classes);
    for (int mask = 0; mask < v.domain_size(); ++mask) members[v.class_of[mask]].push_back(mask);
    return members;
}

inline OrderedPartition copy_view(WeakOrderView v) {
    return OrderedPartition{{v.class_of.begin(), v.class_of.end()}, v.num_classes};
}

}  // namespace detail

/// IWS transformations: every ordered partition of the worst class, the
/// trivial one included. Requires at least two classes.
template <typename F>
void for_each_worst_decomposition(WeakOrderView base, F&& visit) {
    const int l = base.num_classes;
    if (l < 2) return;
    const auto members = detail::members_by_class(base);
    const auto& worst = members[l - 1];
    OrderedPartition t = detail::copy_view(base);
    bool keep_going = true;
    for_each_weak_order(static_cast<int>(worst.size()), [&](const OrderedPartition& dec) {
        if (!keep_going) return;
        for (std::size_t i = 0; i < worst.size(); ++i)
            t.class_of[worst[i]] = static_cast<std::uint8_t>(l - 1 + dec.class_of[i]);
        t.num_classes = l - 1 + dec.num_classes;
        keep_going = visit(const_cast<const OrderedPartition&>(t));
    });
}

/// IBS transformations: every ordered partition of the best class.
template <typename F>
void for_each_best_decomposition(WeakOrderView base, F&& visit) {
    const int l = base.num_classes;
    if (l < 2) return;
    const auto members = detail::members_by_class(base);
    const auto& best = members[0];
    OrderedPartition t = detail::copy_view(base);
    bool keep_going = true;
    for_each_weak_order(static_cast<int>(best.size()), [&](const OrderedPartition& dec) {
        if (!keep_going) return;
        const int shift = dec.num_classes - 1;
        for (int mask = 0; mask < base.domain_size(); ++mask) {
            const int c = base.class_of[mask];
            t.class_of[mask] = static_cast<std::uint8_t>(c == 0 ? 0 : c + shift);
        }
        for (std::size_t i = 0; i < best.size(); ++i)
            t.class_of[best[i]] = static_cast<std::uint8_t>(dec.class_of[i]);
        t.num_classes = l + shift;
        keep_going = visit(const_cast<const OrderedPartition&>(t));
    });
}

/// Slide transformations for SI / SSI / Top-SI: move a subfamily Δ of class
/// k1 into class k2. SI quantifies proper subfamilies only; SSI also allows
/// Δ to be the whole class, in which case the emptied class closes up and
/// the class count drops by one. Top-SI restricts to k1 = 0.
///
/// visit(t, delta_bits, k1, k2) where delta_bits is a bitset over coalition
/// masks. No-op instances (Δ empty or k2 = k1) are emitted too; callers may
/// skip re-evaluating the rule on them.
template <typename F>
void for_each_slide(WeakOrderView base, bool allow_full_class, bool top_only, F&& visit) {
    const int l = base.num_classes;
    const auto members = detail::members_by_class(base);
    OrderedPartition t = detail::copy_view(base);
    const int k1_end = top_only ? 1 : l;
    for (int k1 = 0; k1 < k1_end; ++k1) {
        const auto& cls = members[k1];
        const int s = static_cast<int>(cls.size());
        const std::uint32_t sub_end = 1u << s;
        for (std::uint32_t sub = 0; sub < sub_end; ++sub) {
            const bool full = (sub == sub_end - 1);
            if (full && !allow_full_class) continue;
            std::uint32_t delta_bits = 0;
            for (int i = 0; i < s; ++i)
                if ((sub >> i) & 1) delta_bits |= 1u << cls[i];
            for (int k2 = 0; k2 < l; ++k2) {
                if (sub == 0 || k2 == k1) {
                    // ≿' = ≿; emit without rebuilding.
                    t.class_of.assign(base.class_of.begin(), base.class_of.end());
                    t.num_classes = l;
                    if (!visit(const_cast<const OrderedPartition&>(t), delta_bits, k1, k2))
                        return;
                    continue;
                }
                t.class_of.assign(base.class_of.begin(), base.class_of.end());
                t.num_classes = l;
                for (int i = 0; i < s; ++i)
                    if ((sub >> i) & 1) t.class_of[cls[i]] = static_cast<std::uint8_t>(k2);
                if (full) {
                    // class k1 vanished; close the gap
                    for (auto& c : t.class_of)
                        if (c > k1) --c;
                    t.num_classes = l - 1;
                }
                if (!visit(const_cast<const OrderedPartition&>(t), delta_bits, k1, k2)) return;
            }
        }
    }
}

/// INUI transformations: split class k into Δ ≻ Σk∖Δ for every non-empty
/// proper subfamily Δ. visit(t, delta_bits, k, intersection_mask).
template <typename F>
void for_each_upward_split(WeakOrderView base, F&& visit) {
    const int l = base.num_classes;
    const auto members = detail::members_by_class(base);
    OrderedPartition t;
    t.class_of.resize(base.domain_size());
    for (int k = 0; k < l; ++k) {
        const auto& cls = members[k];
        const int s = static_cast<int>(cls.size());
        if (s < 2) continue;
        for (std::uint32_t sub = 1; sub + 1 < (1u << s); ++sub) {
            std::uint32_t delta_bits = 0;
            std::uint32_t inter = ~0u;
            for (int i = 0; i < s; ++i)
                if ((sub >> i) & 1) {
                    delta_bits |= 1u << cls[i];
                    inter &= static_cast<std::uint32_t>(cls[i]);
                }
            for (int mask = 0; mask < base.domain_size(); ++mask) {
                const int c = base.class_of[mask];
                if (c < k)
                    t.class_of[mask] = static_cast<std::uint8_t>(c);
                else if (c > k)
                    t.class_of[mask] = static_cast<std::uint8_t>(c + 1);
                else
                    t.class_of[mask] =
                        static_cast<std::uint8_t>(((delta_bits >> mask) & 1) ? k : k + 1);
            }
            t.num_classes = l + 1;
            if (!visit(const_cast<const OrderedPartition&>(t), delta_bits, k, inter)) return;
        }
    }
}

// ---------------------------------------------------------------------------
// Checker internals
// ---------------------------------------------------------------------------

namespace detail {

struct RunState {
    EvidenceMode mode = EvidenceMode::exhaustive;
    bool exhaustive_required = false;  // explicit request: over budget is an error
    std::uint64_t instances = 0;
    std::uint64_t max_instances = 0;
    std::optional<Witness> witness;

    /// Returns false when the run must stop (witness found or budget spent).
    /// An explicitly exhaustive run cannot deliver proof past its budget and
    /// errors out; an automatic one degrades to sampled evidence instead.
    bool bump(std::uint64_t count = 1) {
        instances += count;
        if (instances > max_instances) {
            if (mode == EvidenceMode::exhaustive) {
                if (exhaustive_required)
                    throw BudgetError(
                        "exhaustive check exceeds the instance budget; rerun sampled");
                mode = EvidenceMode::sampled;
            }
            return false;
        }
        return true;
    }
};

inline EvidenceMode resolve_mode(Axiom a, int n, const CheckPolicy& p) {
    switch (p.mode) {
        case CheckPolicy::Mode::exhaustive: return EvidenceMode::exhaustive;
        case CheckPolicy::Mode::sampled: return EvidenceMode::sampled;
        case CheckPolicy::Mode::automatic: break;
    }
    if (n <= 2) return EvidenceMode::exhaustive;
    if (a == Axiom::wivip) return EvidenceMode::exhaustive;  // tiny domain regardless of n
    return decomposition_heavy(a) ? EvidenceMode::sampled : EvidenceMode::exhaustive;
}

inline RunState start_run(Axiom a, int n, const CheckPolicy& p) {
    RunState run;
    run.mode = resolve_mode(a, n, p);
    run.exhaustive_required = p.mode == CheckPolicy::Mode::exhaustive;
    run.max_instances = p.max_instances;
    return run;
}

/// Runs `body` over every base order the evidence mode prescribes:
/// all of them (exhaustive) or the seed orders plus a deterministic sample.
/// body(view) returns false to stop.
template <typename Body>
void for_each_base(const Universe& u, EvidenceMode mode, const CheckPolicy& p, Body&& body) {
    const int m = u.coalition_count();
    if (mode == EvidenceMode::exhaustive) {
        if (p.orders && p.orders->domain_size() == m) {
            for (std::size_t i = 0; i < p.orders->size(); ++i)
                if (!body((*p.orders)[i])) return;
            return;
        }
        bool stop = false;
        for_each_weak_order(
            m,
            [&](const OrderedPartition& base) {
                if (stop) return;
                if (!body(view_of(base))) stop = true;
            },
            p.max_enum_domain);
        return;
    }
    for (const OrderedPartition& seed : p.seed_orders) {
        if (seed.domain_size() != m) continue;
        if (!body(view_of(seed))) return;
    }
    FlatOrders local;
    const FlatOrders* orders = p.orders;
    if (!orders || orders->domain_size() != m) {
        local = FlatOrders::enumerate(m, p.max_enum_domain);
        orders = &local;
    }
    std::mt19937_64 rng(p.seed);
    for (std::size_t draw = 0; draw < p.sample_orders; ++draw) {
        const std::size_t i = static_cast<std::size_t>(rng() % orders->size());
        if (!body((*orders)[i])) return;
    }
}

inline Witness make_pair_witness(int n, WeakOrderView base, const OrderedPartition* transformed,
                                 Individual x, Individual y, PairRel before, PairRel after,
                                 std::string note) {
    Witness w;
    w.n = n;
    w.base = copy_view(base);
    if (transformed) w.transformed = *transformed;
    w.x = x;
    w.y = y;
    w.before = before;
    w.after = after;
    w.note = std::move(note);
    return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The nine checkers (plus Top-SI)
// ---------------------------------------------------------------------------

/// NT: relabelling individuals by any permutation relabels the output the
/// same way.
inline AxiomVerdict check_nt(const SrsHandle& srs, const Universe& u,
                             const CheckPolicy& policy = {}) {
    const int n = u.n;
    const int m = u.coalition_count();
    detail::RunState run = detail::start_run(Axiom::nt, n, policy);

    const auto perms = all_permutations(n);
    // mask image tables, one per permutation
    std::vector<std::vector<std::uint8_t>> mask_image(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p) {
        mask_image[p].resize(m);
        for (int mask = 0; mask < m; ++mask)
            mask_image[p][mask] =
                static_cast<std::uint8_t>(perms[p](Coalition{(std::uint32_t)mask}).bits);
    }

    OrderedPartition permuted;
    permuted.class_of.resize(m);
    detail::for_each_base(u, run.mode, policy, [&](WeakOrderView base) {
        const SocialCode out = srs.rule(n, base);
        for (std::size_t p = 0; p < perms.size(); ++p) {
            if (!run.bump()) return false;
            for (int mask = 0; mask < m; ++mask)
                permuted.class_of[mask_image[p][mask]] = base.class_of[mask];
            permuted.num_classes = base.num_classes;
            const SocialCode out_p = srs.rule(n, view_of(permuted));
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    const PairRel before = pair_rel(out, x, y);
                    const PairRel after = pair_rel(out_p, perms[p](x), perms[p](y));
                    if (before != after) {
                        Witness w = detail::make_pair_witness(
                            n, base, &permuted, x, y, before, after,
                            "relabelling by a permutation changed the pair");
                        w.permutation = perms[p].image();
                        run.witness = std::move(w);
                        return false;
                    }
                }
        }
        return true;
    });

    return AxiomVerdict{Axiom::nt, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

/// WIVIP: on a dichotomous order, members of ⋂Σ1 rank strictly above
/// everyone else. The quantification runs over all dichotomous orders
/// directly, so the verdict is exhaustive at any n.
inline AxiomVerdict check_wivip(const SrsHandle& srs, const Universe& u,
                                const CheckPolicy& policy = {}) {
    const int n = u.n;
    const int m = u.coalition_count();
    detail::RunState run = detail::start_run(Axiom::wivip, n, policy);
    run.mode = EvidenceMode::exhaustive;

    OrderedPartition base;
    base.class_of.resize(m);
    base.num_classes = 2;
    const std::uint32_t top_end = 1u << m;
    for (std::uint32_t top = 1; top + 1 < top_end && !run.witness; ++top) {
        if (!run.bump()) break;
        std::uint32_t inter = ~0u;
        for (int mask = 0; mask < m; ++mask) {
            const bool in_top = (top >> mask) & 1;
            base.class_of[mask] = in_top ? 0 : 1;
            if (in_top) inter &= static_cast<std::uint32_t>(mask);
        }
        inter &= u.grand_coalition().bits;
        if (inter == 0) continue;  // empty ⋂Σ1: nothing is demanded
        const SocialCode out = srs.rule(n, view_of(base));
        for (int x = 0; x < n && !run.witness; ++x) {
            if (!((inter >> x) & 1)) continue;
            for (int y = 0; y < n; ++y) {
                if ((inter >> y) & 1) continue;
                const PairRel rel = pair_rel(out, x, y);
                if (rel != PairRel::first_above) {
                    run.witness = detail::make_pair_witness(
                        n, view_of(base), nullptr, x, y, rel, rel,
                        "dichotomous order: x in the intersection of the best class, y outside, "
                        "but x is not strictly above y");
                    break;
                }
            }
        }
    }

    return AxiomVerdict{Axiom::wivip, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

namespace detail {

/// Shared engine for IWS and IBS: decompose one extreme class, demand every
/// strict pair survives.
template <typename Generator>
AxiomVerdict check_strict_preservation(Axiom axiom, const SrsHandle& srs, const Universe& u,
                                       const CheckPolicy& policy, Generator&& generate,
                                       const char* what) {
    const int n = u.n;
    RunState run = start_run(axiom, n, policy);

    for_each_base(u, run.mode, policy, [&](WeakOrderView base) {
        if (base.num_classes < 2) return true;
        const SocialCode out = srs.rule(n, base);
        bool keep_going = true;
        generate(base, [&](const OrderedPartition& t) {
            if (!run.bump()) return keep_going = false;
            const SocialCode out_t = srs.rule(n, view_of(t));
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    PairRel before = pair_rel(out, x, y);
                    if (before == PairRel::tie) continue;
                    // orient so that the recorded x is the strictly better one
                    int wx = x, wy = y;
                    if (before == PairRel::second_above) std::swap(wx, wy);
                    const PairRel after = pair_rel(out_t, wx, wy);
                    if (after != PairRel::first_above) {
                        run.witness = make_pair_witness(n, base, &t, wx, wy,
                                                        PairRel::first_above, after, what);
                        return keep_going = false;
                    }
                }
            return true;
        });
        return keep_going;
    });

    return AxiomVerdict{axiom, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

}  // namespace detail

/// IWS: strict pairs survive any decomposition of the worst class.
inline AxiomVerdict check_iws(const SrsHandle& srs, const Universe& u,
                              const CheckPolicy& policy = {}) {
    return detail::check_strict_preservation(
        Axiom::iws, srs, u, policy,
        [](WeakOrderView base, auto&& visit) { for_each_worst_decomposition(base, visit); },
        "decomposing the worst class dropped a strict pair");
}

/// IBS: strict pairs survive any decomposition of the best class.
inline AxiomVerdict check_ibs(const SrsHandle& srs, const Universe& u,
                              const CheckPolicy& policy = {}) {
    return detail::check_strict_preservation(
        Axiom::ibs, srs, u, policy,
        [](WeakOrderView base, auto&& visit) { for_each_best_decomposition(base, visit); },
        "decomposing the best class dropped a strict pair");
}

/// TO: orders sharing a best class share the whole output. Checked by
/// hashing on the best class, one representative output per group.
inline AxiomVerdict check_to(const SrsHandle& srs, const Universe& u,
                             const CheckPolicy& policy = {}) {
    const int n = u.n;
    detail::RunState run = detail::start_run(Axiom::to, n, policy);

    struct Group {
        SocialCode out;
        OrderedPartition representative;
    };
    std::unordered_map<std::uint32_t, Group> groups;

    detail::for_each_base(u, run.mode, policy, [&](WeakOrderView base) {
        if (!run.bump()) return false;
        std::uint32_t key = 0;
        for (int mask = 0; mask < base.domain_size(); ++mask)
            if (base.class_of[mask] == 0) key |= 1u << mask;
        const SocialCode out = srs.rule(n, base);
        auto [it, inserted] = groups.try_emplace(key, Group{out, {}});
        if (inserted) {
            it->second.representative = detail::copy_view(base);
            return true;
        }
        if (it->second.out == out) return true;
        // same best class, different outputs: locate a differing pair
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                const PairRel before = pair_rel(it->second.out, x, y);
                const PairRel after = pair_rel(out, x, y);
                if (before != after) {
                    Witness w = detail::make_pair_witness(
                        n, view_of(it->second.representative), nullptr, x, y, before, after,
                        "two orders share the best class but the outputs differ");
                    w.transformed = detail::copy_view(base);
                    run.witness = std::move(w);
                    return false;
                }
            }
        return false;  // unreachable: distinct codes must differ on some pair
    });

    return AxiomVerdict{Axiom::to, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

namespace detail {

inline AxiomVerdict check_slide_family(Axiom axiom, const SrsHandle& srs, const Universe& u,
                                       const CheckPolicy& policy, bool allow_full_class,
                                       bool top_only) {
    const int n = u.n;
    RunState run = start_run(axiom, n, policy);

    for_each_base(u, run.mode, policy, [&](WeakOrderView base) {
        const SocialCode out = srs.rule(n, base);
        bool keep_going = true;
        for_each_slide(base, allow_full_class, top_only,
                       [&](const OrderedPartition& t, std::uint32_t delta, int k1, int k2) {
                           if (!run.bump()) return keep_going = false;
                           if (delta == 0 || k1 == k2) return true;  // ≿' = ≿
                           int count[8] = {};
                           for (std::uint32_t b = delta; b != 0; b &= b - 1) {
                               const std::uint32_t mask = std::countr_zero(b);
                               for (std::uint32_t mb = mask; mb != 0; mb &= mb - 1)
                                   ++count[std::countr_zero(mb)];
                           }
                           SocialCode out_t;
                           bool have_out = false;
                           for (int x = 0; x < n; ++x)
                               for (int y = x + 1; y < n; ++y) {
                                   if (count[x] != count[y]) continue;
                                   if (!have_out) {
                                       out_t = srs.rule(n, view_of(t));
                                       have_out = true;
                                   }
                                   const PairRel before = pair_rel(out, x, y);
                                   const PairRel after = pair_rel(out_t, x, y);
                                   if (before != after) {
                                       Witness w = make_pair_witness(
                                           n, base, &t, x, y, before, after,
                                           "sliding a pair-balanced subfamily changed the pair");
                                       w.delta = delta;
                                       w.k1 = k1;
                                       w.k2 = k2;
                                       run.witness = std::move(w);
                                       return keep_going = false;
                                   }
                               }
                           return true;
                       });
        return keep_going;
    });

    return AxiomVerdict{axiom, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

}  // namespace detail

/// SI: sliding a proper subfamily Δ of one class into another leaves every
/// pair with |Δ[x]| = |Δ[y]| unchanged.
inline AxiomVerdict check_si(const SrsHandle& srs, const Universe& u,
                             const CheckPolicy& policy = {}) {
    return detail::check_slide_family(Axiom::si, srs, u, policy, false, false);
}

/// SSI: as SI, but Δ may be the entire class (the class count then drops).
inline AxiomVerdict check_ssi(const SrsHandle& srs, const Universe& u,
                              const CheckPolicy& policy = {}) {
    return detail::check_slide_family(Axiom::ssi, srs, u, policy, true, false);
}

/// Top-SI: SI restricted to slides out of the best class. Equivalent to SI
/// over the full quantification; checked independently for the equivalence
/// report.
inline AxiomVerdict check_top_si(const SrsHandle& srs, const Universe& u,
                                 const CheckPolicy& policy = {}) {
    return detail::check_slide_family(Axiom::top_si, srs, u, policy, false, true);
}

/// INUI: promoting a subfamily Δ of a class above that class's remainder
/// leaves every pair outside ⋂Δ unchanged.
inline AxiomVerdict check_inui(const SrsHandle& srs, const Universe& u,
                               const CheckPolicy& policy = {}) {
    const int n = u.n;
    detail::RunState run = detail::start_run(Axiom::inui, n, policy);

    detail::for_each_base(u, run.mode, policy, [&](WeakOrderView base) {
        const SocialCode out = srs.rule(n, base);
        bool keep_going = true;
        for_each_upward_split(
            base, [&](const OrderedPartition& t, std::uint32_t delta, int k, std::uint32_t inter) {
                if (!run.bump()) return keep_going = false;
                SocialCode out_t;
                bool have_out = false;
                for (int x = 0; x < n; ++x) {
                    if ((inter >> x) & 1) continue;
                    for (int y = x + 1; y < n; ++y) {
                        if ((inter >> y) & 1) continue;
                        if (!have_out) {
                            out_t = srs.rule(n, view_of(t));
                            have_out = true;
                        }
                        const PairRel before = pair_rel(out, x, y);
                        const PairRel after = pair_rel(out_t, x, y);
                        if (before != after) {
                            Witness w = detail::make_pair_witness(
                                n, base, &t, x, y, before, after,
                                "promoting a subfamily avoiding both individuals changed the pair");
                            w.delta = delta;
                            w.k1 = k;
                            run.witness = std::move(w);
                            return keep_going = false;
                        }
                    }
                }
                return true;
            });
        return keep_going;
    });

    return AxiomVerdict{Axiom::inui, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

/// IIC: the pair relation depends only on the ceteris-paribus comparisons of
/// S∪{x} vs S∪{y}. Checked by bucketing all orders on that signature per
/// pair; within a bucket the output relation must be constant.
inline AxiomVerdict check_iic(const SrsHandle& srs, const Universe& u,
                              const CheckPolicy& policy = {}) {
    const int n = u.n;
    const int m = u.coalition_count();
    detail::RunState run = detail::start_run(Axiom::iic, n, policy);

    struct Bucket {
        PairRel rel;
        OrderedPartition representative;
    };
    // one signature table per unordered pair
    std::vector<std::pair<std::pair<int, int>, std::unordered_map<std::uint32_t, Bucket>>> tables;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) tables.push_back({{x, y}, {}});

    detail::for_each_base(u, run.mode, policy, [&](WeakOrderView base) {
        const SocialCode out = srs.rule(n, base);
        for (auto& [pair, buckets] : tables) {
            if (!run.bump()) return false;
            const auto [x, y] = pair;
            const std::uint32_t bx = 1u << x, by = 1u << y;
            std::uint32_t sig = 0;
            for (int s = 0; s < m; ++s) {
                if (s & (bx | by)) continue;
                const int cx = base.class_of[s | bx];
                const int cy = base.class_of[s | by];
                const std::uint32_t rel = cx < cy ? 0 : (cx == cy ? 1 : 2);
                sig = sig * 3 + rel;
            }
            const PairRel rel_out = pair_rel(out, x, y);
            auto [it, inserted] = buckets.try_emplace(sig, Bucket{rel_out, {}});
            if (inserted) {
                it->second.representative = detail::copy_view(base);
                continue;
            }
            if (it->second.rel != rel_out) {
                Witness w = detail::make_pair_witness(
                    n, view_of(it->second.representative), nullptr, x, y, it->second.rel, rel_out,
                    "equal ceteris-paribus signatures, different pair relation");
                w.transformed = detail::copy_view(base);
                run.witness = std::move(w);
                return false;
            }
        }
        return true;
    });

    return AxiomVerdict{Axiom::iic, run.mode, !run.witness.has_value(), std::move(run.witness),
                        run.instances, n};
}

/// Single dispatch over all ten checkable axioms.
inline AxiomVerdict check_axiom(Axiom axiom, const SrsHandle& srs, const Universe& u,
                                const CheckPolicy& policy = {}) {
    switch (axiom) {
        case Axiom::nt: return check_nt(srs, u, policy);
        case Axiom::wivip: return check_wivip(srs, u, policy);
        case Axiom::iws: return check_iws(srs, u, policy);
        case Axiom::ibs: return check_ibs(srs, u, policy);
        case Axiom::to: return check_to(srs, u, policy);
        case Axiom::si: return check_si(srs, u, policy);
        case Axiom::ssi: return check_ssi(srs, u, policy);
        case Axiom::inui: return check_inui(srs, u, policy);
        case Axiom::iic: return check_iic(srs, u, policy);
        case Axiom::top_si: return check_top_si(srs, u, policy);
    }
    throw DomainError("unknown axiom");
}

// ---------------------------------------------------------------------------
// Witness replay
// ---------------------------------------------------------------------------

/// Re-executes a witness through the rule and confirms the recorded violation
/// reproduces, including the structural side conditions of the axiom it
/// refutes. Every stored counterexample goes through this before it is
/// trusted.
inline bool replay_witness(Axiom axiom, const SrsHandle& srs, const Witness& w) {
    const int n = w.n;
    const int m = 1 << n;
    if (w.base.domain_size() != m || !is_valid_partition(w.base)) return false;
    if (w.transformed && (!is_valid_partition(*w.transformed) ||
                          w.transformed->domain_size() != m))
        return false;
    const SocialCode out = srs.rule(n, view_of(w.base));

    auto delta_count = [&](Individual z) {
        int c = 0;
        for (std::uint32_t b = w.delta; b != 0; b &= b - 1)
            if ((std::countr_zero(b) >> z) & 1) ++c;
        return c;
    };

    switch (axiom) {
        case Axiom::nt: {
            if (!w.permutation || !w.transformed) return false;
            const Permutation pi(*w.permutation);
            // transformed must be the relabelled base
            for (int mask = 0; mask < m; ++mask) {
                const int image = static_cast<int>(pi(Coalition{(std::uint32_t)mask}).bits);
                if (w.transformed->class_of[image] != w.base.class_of[mask]) return false;
            }
            const SocialCode out_t = srs.rule(n, view_of(*w.transformed));
            return pair_rel(out, w.x, w.y) == w.before &&
                   pair_rel(out_t, pi(w.x), pi(w.y)) == w.after && w.before != w.after;
        }
        case Axiom::wivip: {
            if (w.base.num_classes != 2) return false;
            std::uint32_t inter = ~0u;
            for (int mask = 0; mask < m; ++mask)
                if (w.base.class_of[mask] == 0) inter &= static_cast<std::uint32_t>(mask);
            if (!((inter >> w.x) & 1) || ((inter >> w.y) & 1)) return false;
            return pair_rel(out, w.x, w.y) == w.before && w.before != PairRel::first_above;
        }
        case Axiom::iws:
        case Axiom::ibs: {
            if (!w.transformed) return false;
            const int shift = w.transformed->num_classes - w.base.num_classes;
            if (shift < 0 || w.base.num_classes < 2) return false;
            const int l = w.base.num_classes;
            for (int mask = 0; mask < m; ++mask) {
                const int b = w.base.class_of[mask];
                const int t = w.transformed->class_of[mask];
                if (axiom == Axiom::iws) {
                    // classes above the worst must be untouched; the worst
                    // class spreads over the new tail
                    if (b < l - 1 ? t != b : t < l - 1) return false;
                } else {
                    // classes below the best shift down uniformly; the best
                    // class spreads over the new head
                    if (b > 0 ? t != b + shift : t > shift) return false;
                }
            }
            const SocialCode out_t = srs.rule(n, view_of(*w.transformed));
            return pair_rel(out, w.x, w.y) == PairRel::first_above &&
                   w.before == PairRel::first_above &&
                   pair_rel(out_t, w.x, w.y) == w.after && w.after != PairRel::first_above;
        }
        case Axiom::to: {
            if (!w.transformed) return false;
            for (int mask = 0; mask < m; ++mask) {
                const bool top_a = w.base.class_of[mask] == 0;
                const bool top_b = w.transformed->class_of[mask] == 0;
                if (top_a != top_b) return false;
            }
            const SocialCode out_t = srs.rule(n, view_of(*w.transformed));
            return pair_rel(out, w.x, w.y) == w.before &&
                   pair_rel(out_t, w.x, w.y) == w.after && w.before != w.after;
        }
        case Axiom::si:
        case Axiom::ssi:
        case Axiom::top_si: {
            if (!w.transformed || w.k1 < 0 || w.k2 < 0) return false;
            if (axiom == Axiom::top_si && w.k1 != 0) return false;
            if (delta_count(w.x) != delta_count(w.y)) return false;
            // every Δ member sits in class k1 of the base and class k2 of
            // the transformed order (modulo the close-up when k1 empties)
            int remaining_in_k1 = 0;
            for (int mask = 0; mask < m; ++mask)
                if (w.base.class_of[mask] == w.k1 && !((w.delta >> mask) & 1))
                    ++remaining_in_k1;
            if (axiom != Axiom::ssi && remaining_in_k1 == 0) return false;
            const bool closed = remaining_in_k1 == 0 && w.k1 != w.k2;
            auto expected_class = [&](int mask) {
                int c = w.base.class_of[mask];
                if ((w.delta >> mask) & 1) c = w.k2;
                if (closed && c > w.k1) --c;
                return c;
            };
            for (int mask = 0; mask < m; ++mask) {
                if (w.base.class_of[mask] == w.k1 && !((w.delta >> mask) & 1)) continue;
                if ((w.delta >> mask) & 1 && w.base.class_of[mask] != w.k1) return false;
            }
            for (int mask = 0; mask < m; ++mask)
                if (w.transformed->class_of[mask] != expected_class(mask)) return false;
            const SocialCode out_t = srs.rule(n, view_of(*w.transformed));
            return pair_rel(out, w.x, w.y) == w.before &&
                   pair_rel(out_t, w.x, w.y) == w.after && w.before != w.after;
        }
        case Axiom::inui: {
            if (!w.transformed || w.k1 < 0) return false;
            std::uint32_t inter = ~0u;
            for (std::uint32_t b = w.delta; b != 0; b &= b - 1) {
                const int mask = std::countr_zero(b);
                if (w.base.class_of[mask] != w.k1) return false;
                inter &= static_cast<std::uint32_t>(mask);
            }
            if (((inter >> w.x) & 1) || ((inter >> w.y) & 1)) return false;
            for (int mask = 0; mask < m; ++mask) {
                const int c = w.base.class_of[mask];
                int expect;
                if (c < w.k1)
                    expect = c;
                else if (c > w.k1)
                    expect = c + 1;
                else
                    expect = ((w.delta >> mask) & 1) ? w.k1 : w.k1 + 1;
                if (w.transformed->class_of[mask] != expect) return false;
            }
            const SocialCode out_t = srs.rule(n, view_of(*w.transformed));
            return pair_rel(out, w.x, w.y) == w.before &&
                   pair_rel(out_t, w.x, w.y) == w.after && w.before != w.after;
        }
        case Axiom::iic: {
            if (!w.transformed) return false;
            const std::uint32_t bx = 1u << w.x, by = 1u << w.y;
            for (int s = 0; s < m; ++s) {
                if (s & (bx | by)) continue;
                const int ax = w.base.class_of[s | bx], ay = w.base.class_of[s | by];
                const int tx = w.transformed->class_of[s | bx], ty = w.transformed->class_of[s | by];
                const int rel_a = ax < ay ? 0 : (ax == ay ? 1 : 2);
                const int rel_t = tx < ty ? 0 : (tx == ty ? 1 : 2);
                if (rel_a != rel_t) return false;
            }
            const SocialCode out_t = srs.rule(n, view_of(*w.transformed));
            return pair_rel(out, w.x, w.y) == w.before &&
                   pair_rel(out_t, w.x, w.y) == w.after && w.before != w.after;
        }
    }
    return false;
}

}  // namespace socrank
