#pragma once

#include <numeric>

#include "socrank/ranking.hpp"

namespace socrank {

// ---------------------------------------------------------------------------
// Theta vectors and their two lexicographic orders
// ---------------------------------------------------------------------------

/// Per-class membership counts for one individual: counts[k] is the number of
/// coalitions in class k+1 that contain the individual. The counts always sum
/// to 2^(n-1), the number of coalitions containing any fixed individual.
struct ThetaVector {
    std::vector<int> counts;

    bool operator==(const ThetaVector&) const = default;
};

enum class Ordering : std::int8_t { less = -1, equal = 0, greater = 1 };

inline ThetaVector theta(WeakOrderView order, Individual x) {
    ThetaVector t;
    t.counts.assign(order.num_classes, 0);
    const int m = order.domain_size();
    for (int mask = 0; mask < m; ++mask)
        if ((mask >> x) & 1) ++t.counts[order.class_of[mask]];
    return t;
}

inline ThetaVector theta(const PowerRanking& r, Individual x) {
    if (!r.universe().contains(x)) throw DomainError("individual outside universe");
    return theta(r.view(), x);
}

/// ≥L on equal-length vectors: first differing component decides, larger wins.
inline Ordering lex_compare(const ThetaVector& a, const ThetaVector& b) {
    if (a.counts.size() != b.counts.size())
        throw LengthMismatchError("theta vectors come from different rankings");
    for (std::size_t k = 0; k < a.counts.size(); ++k) {
        if (a.counts[k] != b.counts[k])
            return a.counts[k] > b.counts[k] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

/// ≥DL: last differing component decides, smaller wins (fewer memberships in
/// worse classes is better).
inline Ordering dual_lex_compare(const ThetaVector& a, const ThetaVector& b) {
    if (a.counts.size() != b.counts.size())
        throw LengthMismatchError("theta vectors come from different rankings");
    for (std::size_t k = a.counts.size(); k-- > 0;) {
        if (a.counts[k] != b.counts[k])
            return a.counts[k] < b.counts[k] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

// ---------------------------------------------------------------------------
// Excellence depth e(x) via the initial segments T_k
// ---------------------------------------------------------------------------

/// e(x): 0 if x misses some coalition of the best class, otherwise the
/// largest k with x contained in every coalition of classes 1..k. Since the
/// empty coalition sits somewhere in every ranking, the depth never reaches
/// past the class holding it.
struct ExcellenceDepth {
    int value = 0;

    auto operator<=>(const ExcellenceDepth&) const = default;
};

/// Per-class AND of coalition masks; x is in every coalition of classes
/// 1..k exactly when bit x survives the cumulative AND through class k.
inline std::vector<std::uint32_t> class_intersections(WeakOrderView order) {
    std::vector<std::uint32_t> acc(order.num_classes, ~0u);
    for (int mask = 0; mask < order.domain_size(); ++mask)
        acc[order.class_of[mask]] &= static_cast<std::uint32_t>(mask);
    return acc;
}

inline ExcellenceDepth excellence_depth(WeakOrderView order, Individual x) {
    std::uint32_t cumulative = ~0u;
    int depth = 0;
    const auto per_class = class_intersections(order);
    for (int k = 0; k < order.num_classes; ++k) {
        cumulative &= per_class[k];
        if ((cumulative >> x) & 1)
            depth = k + 1;
        else
            break;
    }
    return ExcellenceDepth{depth};
}

inline ExcellenceDepth excellence_depth(const PowerRanking& r, Individual x) {
    if (!r.universe().contains(x)) throw DomainError("individual outside universe");
    return excellence_depth(r.view(), x);
}

// ---------------------------------------------------------------------------
// Exact rationals for split-plurality scores
// ---------------------------------------------------------------------------

/// Minimal exact rational. Rule logic never touches floating point; the
/// counterexample hunts need 1/3 + 1/2 style comparisons to be exact.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n_, long long d_) : num(n_), den(d_) {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }

    auto operator<=>(const Rational& o) const {
        const long long lhs = num * o.den;
        const long long rhs = o.num * den;
        return lhs <=> rhs;
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// s_split(x) = sum of 1/|S| over best-class coalitions S containing x.
/// The empty coalition contains nobody, so it never contributes a term.
struct SplitScore {
    Rational value;

    auto operator<=>(const SplitScore&) const = default;
};

inline SplitScore split_score(WeakOrderView order, Individual x) {
    Rational acc(0, 1);
    for (int mask = 0; mask < order.domain_size(); ++mask) {
        if (order.class_of[mask] != 0) continue;
        if (!((mask >> x) & 1)) continue;
        acc = acc + Rational(1, std::popcount(static_cast<std::uint32_t>(mask)));
    }
    return SplitScore{acc};
}

inline SplitScore split_score(const PowerRanking& r, Individual x) {
    if (!r.universe().contains(x)) throw DomainError("individual outside universe");
    return split_score(r.view(), x);
}

// ---------------------------------------------------------------------------
// Fixed tie-break orders
// ---------------------------------------------------------------------------

/// A strict total order on individuals, best priority first.
class TieBreakOrder {
public:
    explicit TieBreakOrder(std::vector<Individual> best_to_worst)
        : order_(std::move(best_to_worst)) {
        std::vector<bool> seen(order_.size(), false);
        for (Individual i : order_) {
            if (i < 0 || i >= static_cast<int>(order_.size()) || seen[i])
                throw DomainError("tie-break order must list every individual exactly once");
            seen[i] = true;
        }
        priority_.resize(order_.size());
        for (std::size_t p = 0; p < order_.size(); ++p) priority_[order_[p]] = static_cast<int>(p);
    }

    /// The default priority 1 ▷ 2 ▷ ... ▷ n.
    static TieBreakOrder ascending(int n) {
        std::vector<Individual> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return TieBreakOrder(std::move(v));
    }

    int size() const { return static_cast<int>(order_.size()); }
    /// Lower value = higher priority.
    int priority(Individual i) const { return priority_[i]; }
    const std::vector<Individual>& best_to_worst() const { return order_; }

    bool operator==(const TieBreakOrder&) const = default;

private:
    std::vector<Individual> order_;
    std::vector<int> priority_;
};

}  // namespace socrank
