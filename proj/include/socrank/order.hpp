#pragma once

#include <cstdlib>
#include <functional>
#include <span>
#include <utility>

#include "socrank/types.hpp"

namespace socrank {

// ---------------------------------------------------------------------------
// Ordered set partitions (weak orders) on a generic domain {0..m-1}
// ---------------------------------------------------------------------------

/// A weak order on {0..m-1} in canonical form: class_of[e] is the index of
/// e's indifference class, 0 = best. Every index in 0..num_classes-1 occurs.
struct OrderedPartition {
    std::vector<std::uint8_t> class_of;
    int num_classes = 0;

    int domain_size() const { return static_cast<int>(class_of.size()); }

    bool operator==(const OrderedPartition&) const = default;
};

/// Lightweight non-owning view used on checker hot paths.
struct WeakOrderView {
    std::span<const std::uint8_t> class_of;
    int num_classes = 0;

    int domain_size() const { return static_cast<int>(class_of.size()); }
    int class_index(int element) const { return class_of[element]; }
};

inline WeakOrderView view_of(const OrderedPartition& p) {
    return WeakOrderView{std::span<const std::uint8_t>(p.class_of), p.num_classes};
}

/// Checks the canonical-form invariants: class indices in range, every class
/// 0..num_classes-1 non-empty.
inline bool is_valid_partition(const OrderedPartition& p) {
    if (p.num_classes < 1 || p.num_classes > p.domain_size()) return p.domain_size() == 0 && p.num_classes == 0;
    std::vector<int> count(p.num_classes, 0);
    for (std::uint8_t c : p.class_of) {
        if (c >= p.num_classes) return false;
        ++count[c];
    }
    for (int c : count)
        if (c == 0) return false;
    return true;
}

/// Builds a partition from explicit class lists (best first).
inline OrderedPartition partition_from_classes(int m, const std::vector<std::vector<int>>& classes) {
    OrderedPartition p;
    p.class_of.assign(m, 0xff);
    p.num_classes = static_cast<int>(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].empty()) throw PartitionError("empty class in ordered partition");
        for (int e : classes[k]) {
            if (e < 0 || e >= m) throw DomainError("element outside domain");
            if (p.class_of[e] != 0xff) throw PartitionError("element assigned to two classes");
            p.class_of[e] = static_cast<std::uint8_t>(k);
        }
    }
    for (int e = 0; e < m; ++e)
        if (p.class_of[e] == 0xff) throw PartitionError("element missing from all classes");
    return p;
}

inline std::vector<std::vector<int>> classes_of(WeakOrderView v) {
    std::vector<std::vector<int>> out(v.num_classes);
    for (int e = 0; e < v.domain_size(); ++e) out[v.class_of[e]].push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration of all weak orders on m elements
// ---------------------------------------------------------------------------

/// Enumeration cap on the domain size. SOCRANK_MAX_M overrides the default 8
/// (a(8) = 545835 orders; a(9) is ~7.1M and opt-in).
inline int default_enum_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("SOCRANK_MAX_M")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 8;
    }();
    return cap;
}

namespace detail {

template <typename F>
void enumerate_rec(int m, int next, std::vector<std::vector<int>>& classes, F& emit) {
    if (next == m) {
        OrderedPartition p = partition_from_classes(m, classes);
        emit(p);
        return;
    }
    const int k = static_cast<int>(classes.size());
    // Join an existing class, in class order.
    for (int c = 0; c < k; ++c) {
        classes[c].push_back(next);
        enumerate_rec(m, next + 1, classes, emit);
        classes[c].pop_back();
    }
    // Open a new class at each insertion position.
    for (int pos = 0; pos <= k; ++pos) {
        classes.insert(classes.begin() + pos, {next});
        enumerate_rec(m, next + 1, classes, emit);
        classes.erase(classes.begin() + pos);
    }
}

}  // namespace detail

/// Streams every weak order on {0..m-1} exactly once, in a deterministic
/// order fixed by the recursive construction (element i joins an existing
/// class or opens a new one at each position). The count is the ordered Bell
/// number a(m).
template <typename F>
void for_each_weak_order(int m, F&& f, int max_m = default_enum_cap()) {
    if (m < 1) throw DomainError("enumeration domain must have at least one element");
    if (m > max_m)
        throw BudgetError("weak-order enumeration on " + std::to_string(m) +
                          " elements exceeds the cap of " + std::to_string(max_m));
    std::vector<std::vector<int>> classes;
    classes.reserve(m);
    classes.push_back({0});
    auto& fn = f;
    detail::enumerate_rec(m, 1, classes, fn);
}

inline std::uint64_t count_weak_orders(int m, int max_m = default_enum_cap()) {
    std::uint64_t count = 0;
    for_each_weak_order(m, [&](const OrderedPartition&) { ++count; }, max_m);
    return count;
}

/// Materialized enumeration, stored flat so half a million orders stay cheap
/// to hold and to index into.
class FlatOrders {
public:
    FlatOrders() = default;

    static FlatOrders enumerate(int m, int max_m = default_enum_cap()) {
        FlatOrders out;
        out.m_ = m;
        for_each_weak_order(
            m,
            [&](const OrderedPartition& p) {
                out.class_of_.insert(out.class_of_.end(), p.class_of.begin(), p.class_of.end());
                out.num_classes_.push_back(static_cast<std::uint8_t>(p.num_classes));
            },
            max_m);
        return out;
    }

    std::size_t size() const { return num_classes_.size(); }
    int domain_size() const { return m_; }

    WeakOrderView operator[](std::size_t i) const {
        return WeakOrderView{std::span<const std::uint8_t>(class_of_.data() + i * m_, m_),
                             num_classes_[i]};
    }

    OrderedPartition owned(std::size_t i) const {
        WeakOrderView v = (*this)[i];
        return OrderedPartition{{v.class_of.begin(), v.class_of.end()}, v.num_classes};
    }

private:
    int m_ = 0;
    std::vector<std::uint8_t> class_of_;
    std::vector<std::uint8_t> num_classes_;
};

}  // namespace socrank
