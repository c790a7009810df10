#pragma once

#include <functional>
#include <numeric>

#include "socrank/scores.hpp"

namespace socrank {

namespace detail {

/// Buckets individuals into a canonical SocialCode. better(a, b) must be a
/// strict weak ordering meaning "a is ranked strictly above b".
template <typename Score, typename Better>
SocialCode code_from_scores(int n, const std::vector<Score>& score, Better better) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return better(score[a], score[b]); });
    SocialCode c;
    c.n = static_cast<std::uint8_t>(n);
    int cls = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && better(score[idx[i - 1]], score[idx[i]])) ++cls;
        c.cls[idx[i]] = static_cast<std::uint8_t>(cls);
    }
    c.num_classes = static_cast<std::uint8_t>(cls + 1);
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rule cores over the compact representation (checker hot path)
// ---------------------------------------------------------------------------

inline SocialCode lex_cel_code(int n, WeakOrderView order) {
    std::vector<ThetaVector> t;
    t.reserve(n);
    for (int x = 0; x < n; ++x) t.push_back(theta(order, x));
    return detail::code_from_scores(n, t, [](const ThetaVector& a, const ThetaVector& b) {
        return lex_compare(a, b) == Ordering::greater;
    });
}

inline SocialCode dual_lex_cel_code(int n, WeakOrderView order) {
    std::vector<ThetaVector> t;
    t.reserve(n);
    for (int x = 0; x < n; ++x) t.push_back(theta(order, x));
    return detail::code_from_scores(n, t, [](const ThetaVector& a, const ThetaVector& b) {
        return dual_lex_compare(a, b) == Ordering::greater;
    });
}

/// Ranking by the first theta component only: how many best-class coalitions
/// contain each individual.
inline SocialCode plurality_code(int n, WeakOrderView order) {
    std::vector<int> count(n, 0);
    for (int mask = 0; mask < order.domain_size(); ++mask) {
        if (order.class_of[mask] != 0) continue;
        for (std::uint32_t b = static_cast<std::uint32_t>(mask); b != 0; b &= b - 1)
            ++count[std::countr_zero(b)];
    }
    return detail::code_from_scores(n, count, std::greater<int>{});
}

inline SocialCode iis_code(int n, WeakOrderView order) {
    std::vector<int> depth(n, 0);
    const auto per_class = class_intersections(order);
    std::uint32_t cumulative = ~0u;
    for (int k = 0; k < order.num_classes && cumulative != 0; ++k) {
        cumulative &= per_class[k];
        for (std::uint32_t b = cumulative; b != 0; b &= b - 1) depth[std::countr_zero(b)] = k + 1;
    }
    return detail::code_from_scores(n, depth, std::greater<int>{});
}

inline SocialCode const_x_code(int n, WeakOrderView) {
    SocialCode c;
    c.n = static_cast<std::uint8_t>(n);
    c.num_classes = 1;
    return c;
}

inline SocialCode split_plurality_code(int n, WeakOrderView order) {
    std::vector<Rational> score(n, Rational(0, 1));
    for (int mask = 1; mask < order.domain_size(); ++mask) {
        if (order.class_of[mask] != 0) continue;
        const Rational share(1, std::popcount(static_cast<std::uint32_t>(mask)));
        for (std::uint32_t b = static_cast<std::uint32_t>(mask); b != 0; b &= b - 1) {
            const int x = std::countr_zero(b);
            score[x] = score[x] + share;
        }
    }
    return detail::code_from_scores(n, score,
                                    [](const Rational& a, const Rational& b) { return a > b; });
}

/// Plurality with every tie broken by the fixed order ▷: always a strict
/// total order, n singleton classes.
inline SocialCode plurality_tiebreak_code(int n, WeakOrderView order, const TieBreakOrder& tb) {
    std::vector<int> count(n, 0);
    for (int mask = 0; mask < order.domain_size(); ++mask) {
        if (order.class_of[mask] != 0) continue;
        for (std::uint32_t b = static_cast<std::uint32_t>(mask); b != 0; b &= b - 1)
            ++count[std::countr_zero(b)];
    }
    std::vector<std::pair<int, int>> key(n);  // (count, -priority); higher is better
    for (int x = 0; x < n; ++x) key[x] = {count[x], -tb.priority(x)};
    return detail::code_from_scores(n, key, std::greater<std::pair<int, int>>{});
}

// ---------------------------------------------------------------------------
// Public rule surface over validated rankings
// ---------------------------------------------------------------------------

inline SocialRanking lex_cel(const PowerRanking& r) {
    return social_from_code(r.universe(), lex_cel_code(r.universe().n, r.view()));
}

inline SocialRanking dual_lex_cel(const PowerRanking& r) {
    return social_from_code(r.universe(), dual_lex_cel_code(r.universe().n, r.view()));
}

inline SocialRanking plurality(const PowerRanking& r) {
    return social_from_code(r.universe(), plurality_code(r.universe().n, r.view()));
}

inline SocialRanking iis(const PowerRanking& r) {
    return social_from_code(r.universe(), iis_code(r.universe().n, r.view()));
}

inline SocialRanking const_x(const PowerRanking& r) {
    return social_from_code(r.universe(), const_x_code(r.universe().n, r.view()));
}

inline SocialRanking split_plurality(const PowerRanking& r) {
    return social_from_code(r.universe(), split_plurality_code(r.universe().n, r.view()));
}

inline SocialRanking plurality_tiebreak(const PowerRanking& r, const TieBreakOrder& tb) {
    if (tb.size() != r.universe().n)
        throw DomainError("tie-break order does not cover this universe");
    return social_from_code(r.universe(), plurality_tiebreak_code(r.universe().n, r.view(), tb));
}

// ---------------------------------------------------------------------------
// Named rule handles for the checker and verification layers
// ---------------------------------------------------------------------------

/// A social ranking solution as a named deterministic function.
struct SrsHandle {
    std::string name;
    std::function<SocialCode(int n, WeakOrderView)> rule;

    SocialRanking operator()(const PowerRanking& r) const {
        return social_from_code(r.universe(), rule(r.universe().n, r.view()));
    }
};

/// The seven rules in the expected matrix's row order. The tie-break rule
/// uses the fixed default order 1 ▷ 2 ▷ ... ▷ n.
inline std::vector<SrsHandle> roster(int n) {
    const TieBreakOrder tb = TieBreakOrder::ascending(n);
    return {
        {"iis", [](int k, WeakOrderView v) { return iis_code(k, v); }},
        {"lexcel", [](int k, WeakOrderView v) { return lex_cel_code(k, v); }},
        {"plurality", [](int k, WeakOrderView v) { return plurality_code(k, v); }},
        {"dual-lexcel", [](int k, WeakOrderView v) { return dual_lex_cel_code(k, v); }},
        {"const", [](int k, WeakOrderView v) { return const_x_code(k, v); }},
        {"split-plurality", [](int k, WeakOrderView v) { return split_plurality_code(k, v); }},
        {"plurality-tb",
         [tb](int k, WeakOrderView v) { return plurality_tiebreak_code(k, v, tb); }},
    };
}

inline const SrsHandle* find_srs(const std::vector<SrsHandle>& r, const std::string& name) {
    for (const auto& h : r)
        if (h.name == name) return &h;
    return nullptr;
}

}  // namespace socrank
