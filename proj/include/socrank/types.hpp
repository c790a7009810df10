#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace socrank {

// ---------------------------------------------------------------------------
// Error taxonomy. Everything user-facing throws one of these; the CLI maps
// them onto its exit-code contract.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Class lists that overlap, contain an empty class, or fail to cover the domain.
struct PartitionError : Error {
    using Error::Error;
};

/// An individual or coalition outside the universe.
struct DomainError : Error {
    using Error::Error;
};

/// Comparing score vectors of different lengths (cross-ranking comparison).
struct LengthMismatchError : Error {
    using Error::Error;
};

/// Intersection of an empty family requested without an explicit convention.
struct EmptyFamilyError : Error {
    using Error::Error;
};

/// An enumeration or check would exceed the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

/// Verification output contradicts the expected matrix.
struct DiscrepancyError : Error {
    using Error::Error;
};

/// No roster rule separates an axiom in a logical-independence run.
struct MissingSeparatorError : Error {
    using Error::Error;
};

/// Positioned failure while reading a ranking document.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + what_),
          line(line_),
          column(column_) {}
};

// ---------------------------------------------------------------------------
// Universe and coalitions
// ---------------------------------------------------------------------------

using Individual = int;  // 0-indexed internally; the CLI speaks 1-indexed

/// A coalition is a subset of the individuals, stored as a bitmask.
/// Bit i set means individual i is a member.
struct Coalition {
    std::uint32_t bits = 0;

    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t mask) : bits(mask) {}

    static constexpr Coalition empty_set() { return Coalition{0}; }

    constexpr bool contains(Individual i) const { return (bits >> i) & 1u; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    constexpr Coalition with(Individual i) const { return Coalition{bits | (1u << i)}; }
    constexpr Coalition without(Individual i) const { return Coalition{bits & ~(1u << i)}; }
    constexpr Coalition intersect(Coalition o) const { return Coalition{bits & o.bits}; }

    std::vector<Individual> members() const {
        std::vector<Individual> out;
        for (std::uint32_t b = bits; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    auto operator<=>(const Coalition&) const = default;
};

/// The fixed set of individuals X = {0, ..., n-1}. The coalition domain is
/// always the full power set, empty coalition included.
struct Universe {
    int n = 1;

    explicit Universe(int n_) : n(n_) {
        if (n < 1 || n > 8)
            throw DomainError("universe size must be in 1..8, got " + std::to_string(n));
    }

    int coalition_count() const { return 1 << n; }
    Coalition grand_coalition() const { return Coalition{(1u << n) - 1}; }

    bool contains(Individual i) const { return 0 <= i && i < n; }
    bool contains(Coalition s) const { return (s.bits & ~grand_coalition().bits) == 0; }

    bool operator==(const Universe&) const = default;
};

// ---------------------------------------------------------------------------
// Permutations of individuals
// ---------------------------------------------------------------------------

/// A bijection on {0..n-1}. image[i] is where individual i goes.
class Permutation {
public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
                throw DomainError("permutation image is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i;
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(Individual i) const { return image_[i]; }

    Coalition operator()(Coalition s) const {
        std::uint32_t out = 0;
        for (std::uint32_t b = s.bits; b != 0; b &= b - 1)
            out |= 1u << image_[std::countr_zero(b)];
        return Coalition{out};
    }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
        return Permutation(std::move(inv));
    }

    /// (a.then(b))(x) == b(a(x))
    Permutation then(const Permutation& b) const {
        std::vector<int> im(image_.size());
        for (int i = 0; i < size(); ++i) im[i] = b(image_[i]);
        return Permutation(std::move(im));
    }

    const std::vector<int>& image() const { return image_; }
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// All n! permutations in lexicographic image order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Pairwise relation of two individuals inside a weak order
// ---------------------------------------------------------------------------

enum class PairRel : std::uint8_t {
    first_above,   // x ≻ y
    tie,           // x ∼ y
    second_above,  // y ≻ x
};

inline PairRel flip(PairRel r) {
    switch (r) {
        case PairRel::first_above: return PairRel::second_above;
        case PairRel::second_above: return PairRel::first_above;
        default: return PairRel::tie;
    }
}

inline const char* to_string(PairRel r) {
    switch (r) {
        case PairRel::first_above: return ">";
        case PairRel::second_above: return "<";
        default: return "~";
    }
}

}  // namespace socrank
