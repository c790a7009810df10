#pragma once

#include <array>
#include <optional>

#include "socrank/order.hpp"
#include "socrank/types.hpp"

namespace socrank {

// ---------------------------------------------------------------------------
// PowerRanking: a weak order on the full power set 2^X
// ---------------------------------------------------------------------------

/// Ordered partition of all 2^n coalitions into indifference classes,
/// best class first. Coalition bitmasks double as indices into the
/// class_of code, so the domain element for coalition S is S.bits.
class PowerRanking {
public:
    const Universe& universe() const { return universe_; }
    int num_classes() const { return code_.num_classes; }

    const std::vector<std::vector<Coalition>>& classes() const { return classes_; }

    /// 0-based index of the class holding S; 0 is the best class.
    int class_index(Coalition s) const {
        if (!universe_.contains(s)) throw DomainError("coalition outside universe");
        return code_.class_of[s.bits];
    }

    const OrderedPartition& code() const { return code_; }
    WeakOrderView view() const { return view_of(code_); }

    bool operator==(const PowerRanking& o) const {
        return universe_ == o.universe_ && code_ == o.code_;
    }

private:
    PowerRanking(Universe u, std::vector<std::vector<Coalition>> classes, OrderedPartition code)
        : universe_(u), classes_(std::move(classes)), code_(std::move(code)) {}

    Universe universe_;
    std::vector<std::vector<Coalition>> classes_;
    OrderedPartition code_;

    friend PowerRanking make_power_ranking(const Universe&,
                                           std::vector<std::vector<Coalition>>);
};

/// Validates and builds a PowerRanking. The classes must partition the full
/// power set: pairwise disjoint, none empty, together covering every subset
/// of X including the empty coalition.
inline PowerRanking make_power_ranking(const Universe& u,
                                       std::vector<std::vector<Coalition>> classes) {
    const int m = u.coalition_count();
    OrderedPartition code;
    code.class_of.assign(m, 0xff);
    code.num_classes = static_cast<int>(classes.size());
    if (classes.empty()) throw PartitionError("a power ranking needs at least one class");
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].empty())
            throw PartitionError("class " + std::to_string(k + 1) + " is empty");
        for (Coalition s : classes[k]) {
            if (!u.contains(s)) throw DomainError("coalition outside universe");
            if (code.class_of[s.bits] != 0xff)
                throw PartitionError("coalition appears in two classes");
            code.class_of[s.bits] = static_cast<std::uint8_t>(k);
        }
    }
    for (int b = 0; b < m; ++b)
        if (code.class_of[b] == 0xff)
            throw PartitionError("classes do not cover the full power set");
    return PowerRanking(u, std::move(classes), std::move(code));
}

/// Builds a PowerRanking from a canonical class_of code over coalition masks.
inline PowerRanking ranking_from_code(const Universe& u, const OrderedPartition& code) {
    std::vector<std::vector<Coalition>> classes(code.num_classes);
    for (int b = 0; b < u.coalition_count(); ++b)
        classes[code.class_of[b]].push_back(Coalition{static_cast<std::uint32_t>(b)});
    return make_power_ranking(u, std::move(classes));
}

/// The relabelled order ≿_π with each coalition S replaced by π(S).
inline PowerRanking apply_permutation(const PowerRanking& r, const Permutation& pi) {
    if (pi.size() != r.universe().n)
        throw DomainError("permutation does not act on this universe");
    std::vector<std::vector<Coalition>> classes;
    classes.reserve(r.classes().size());
    for (const auto& cls : r.classes()) {
        std::vector<Coalition> mapped;
        mapped.reserve(cls.size());
        for (Coalition s : cls) mapped.push_back(pi(s));
        classes.push_back(std::move(mapped));
    }
    return make_power_ranking(r.universe(), std::move(classes));
}

// ---------------------------------------------------------------------------
// SocialRanking: a weak order on the individuals
// ---------------------------------------------------------------------------

/// Compact weak order on individuals, produced by every ranking rule.
/// cls[i] is i's class, 0 best, classes numbered consecutively.
struct SocialCode {
    std::uint8_t n = 0;
    std::uint8_t num_classes = 0;
    std::array<std::uint8_t, 8> cls{};

    bool operator==(const SocialCode& o) const {
        if (n != o.n || num_classes != o.num_classes) return false;
        for (int i = 0; i < n; ++i)
            if (cls[i] != o.cls[i]) return false;
        return true;
    }
};

inline PairRel pair_rel(const SocialCode& c, Individual x, Individual y) {
    if (c.cls[x] < c.cls[y]) return PairRel::first_above;
    if (c.cls[x] > c.cls[y]) return PairRel::second_above;
    return PairRel::tie;
}

class SocialRanking {
public:
    const Universe& universe() const { return universe_; }
    const std::vector<std::vector<Individual>>& classes() const { return classes_; }
    const SocialCode& code() const { return code_; }
    int num_classes() const { return code_.num_classes; }

    int class_index(Individual i) const {
        if (!universe_.contains(i)) throw DomainError("individual outside universe");
        return code_.cls[i];
    }

    /// x weakly above y?
    bool weakly_above(Individual x, Individual y) const {
        return class_index(x) <= class_index(y);
    }

    PairRel relation(Individual x, Individual y) const {
        if (!universe_.contains(x) || !universe_.contains(y))
            throw DomainError("individual outside universe");
        return pair_rel(code_, x, y);
    }

    bool operator==(const SocialRanking& o) const {
        return universe_ == o.universe_ && code_ == o.code_;
    }

private:
    SocialRanking(Universe u, std::vector<std::vector<Individual>> classes, SocialCode code)
        : universe_(u), classes_(std::move(classes)), code_(code) {}

    Universe universe_;
    std::vector<std::vector<Individual>> classes_;
    SocialCode code_;

    friend SocialRanking make_social_ranking(const Universe&,
                                             std::vector<std::vector<Individual>>);
    friend SocialRanking social_from_code(const Universe&, const SocialCode&);
};

inline SocialRanking make_social_ranking(const Universe& u,
                                         std::vector<std::vector<Individual>> classes) {
    SocialCode code;
    code.n = static_cast<std::uint8_t>(u.n);
    code.num_classes = static_cast<std::uint8_t>(classes.size());
    std::array<bool, 8> seen{};
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].empty())
            throw PartitionError("class " + std::to_string(k + 1) + " is empty");
        for (Individual i : classes[k]) {
            if (!u.contains(i)) throw DomainError("individual outside universe");
            if (seen[i]) throw PartitionError("individual appears in two classes");
            seen[i] = true;
            code.cls[i] = static_cast<std::uint8_t>(k);
        }
    }
    for (int i = 0; i < u.n; ++i)
        if (!seen[i]) throw PartitionError("classes do not cover all individuals");
    return SocialRanking(u, std::move(classes), code);
}

inline SocialRanking social_from_code(const Universe& u, const SocialCode& code) {
    std::vector<std::vector<Individual>> classes(code.num_classes);
    for (int i = 0; i < u.n; ++i) classes[code.cls[i]].push_back(i);
    return SocialRanking(u, std::move(classes), code);
}

// ---------------------------------------------------------------------------
// Restriction R|_B = R ∩ (B×B)
// ---------------------------------------------------------------------------

/// A binary relation as an explicit pair list, used for restrictions.
struct Relation {
    std::vector<std::pair<Individual, Individual>> pairs;  // (a,b) means a R b

    bool contains(Individual a, Individual b) const {
        for (auto [p, q] : pairs)
            if (p == a && q == b) return true;
        return false;
    }

    bool operator==(const Relation&) const = default;
};

/// Restriction of the ranking's weak order to a subset of individuals.
/// Contains every pair of the relation with both endpoints in the subset,
/// reflexive pairs included.
inline Relation restrict(const SocialRanking& r, const std::vector<Individual>& subset) {
    for (Individual i : subset)
        if (!r.universe().contains(i)) throw DomainError("restriction subset outside universe");
    Relation out;
    for (Individual a : subset)
        for (Individual b : subset)
            if (r.class_index(a) <= r.class_index(b)) out.pairs.emplace_back(a, b);
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

// ---------------------------------------------------------------------------
// Family helpers: Δ[x] and ⋂Δ
// ---------------------------------------------------------------------------

/// The subfamily of coalitions in delta containing x.
inline std::vector<Coalition> class_members_containing(const std::vector<Coalition>& delta,
                                                       Individual x) {
    std::vector<Coalition> out;
    for (Coalition s : delta)
        if (s.contains(x)) out.push_back(s);
    return out;
}

/// ⋂Δ. The empty family is an error unless the caller opts into a convention
/// value (the lattice top X for most uses).
inline Coalition family_intersection(const std::vector<Coalition>& delta) {
    if (delta.empty())
        throw EmptyFamilyError("intersection of an empty family has no default value");
    Coalition acc = delta.front();
    for (std::size_t i = 1; i < delta.size(); ++i) acc = acc.intersect(delta[i]);
    return acc;
}

inline Coalition family_intersection(const std::vector<Coalition>& delta,
                                     Coalition empty_family_value) {
    if (delta.empty()) return empty_family_value;
    return family_intersection(delta);
}

}  // namespace socrank
