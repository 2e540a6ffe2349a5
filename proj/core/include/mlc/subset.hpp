#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mlc {

/// Hard cap on ground-set size. Subsets are single 64-bit words, so every
/// set operation the solvers perform is O(1).
inline constexpr int kMaxGroundSize = 64;

/// A subset of a ground set {0, ..., n-1}, n <= 64, stored as a bit mask.
/// Value type; bit e set <=> element e present.
class Subset {
public:
    constexpr Subset() = default;

    static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }

    static Subset full(int n) {
        assert(n >= 0 && n <= kMaxGroundSize);
        if (n == 0) return Subset();
        return Subset(~std::uint64_t{0} >> (kMaxGroundSize - n));
    }

    static Subset single(int e) { return Subset().with(e); }

    static Subset of(std::initializer_list<int> ids) {
        Subset s;
        for (int e : ids) s.add(e);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }

    bool contains(int e) const {
        assert(e >= 0 && e < kMaxGroundSize);
        return (bits_ >> e) & 1u;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    Subset& add(int e) {
        assert(e >= 0 && e < kMaxGroundSize);
        bits_ |= std::uint64_t{1} << e;
        return *this;
    }

    Subset& remove(int e) {
        assert(e >= 0 && e < kMaxGroundSize);
        bits_ &= ~(std::uint64_t{1} << e);
        return *this;
    }

    Subset with(int e) const { return Subset(*this).add(e); }
    Subset without(int e) const { return Subset(*this).remove(e); }

    bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

    /// Lowest element; undefined on the empty set.
    int min_element() const {
        assert(!empty());
        return std::countr_zero(bits_);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int e : *this) out.push_back(e);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : *this) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    // Iterates set bits in ascending order.
    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
    friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
    /// Set difference.
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }

    Subset& operator|=(Subset o) {
        bits_ |= o.bits_;
        return *this;
    }
    Subset& operator&=(Subset o) {
        bits_ &= o.bits_;
        return *this;
    }

    friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }
    /// Numeric mask order; used for deterministic tie-breaking.
    friend constexpr bool operator<(Subset a, Subset b) { return a.bits_ < b.bits_; }

private:
    explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

}  // namespace mlc
