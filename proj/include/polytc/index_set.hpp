#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polytc {

/// Subset of [n] = {1, ..., n} with n <= 31, element i stored in bit i-1.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
    IndexSet(std::initializer_list<int> elements) {
        for (int e : elements)
            insert(e);
    }
    static IndexSet from_elements(const std::vector<int>& elements) {
        IndexSet s;
        for (int e : elements)
            s.insert(e);
        return s;
    }
    /// {1, ..., r}
    static constexpr IndexSet range(int r) { return IndexSet(r <= 0 ? 0U : (r >= 32 ? ~0U : (1U << r) - 1U)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int i) const { return i >= 1 && i <= 31 && ((bits_ >> (i - 1)) & 1U); }
    /// Largest element, 0 for the empty set.
    constexpr int max() const { return 32 - std::countl_zero(bits_); }
    constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    void insert(int i) {
        if (i < 1 || i > 31)
            throw std::out_of_range("index-set element out of range: " + std::to_string(i));
        bits_ |= 1U << (i - 1);
    }
    constexpr IndexSet with(int i) const { return IndexSet(bits_ | (1U << (i - 1))); }
    constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(1U << (i - 1))); }

    constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    constexpr IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
    constexpr bool disjoint(IndexSet o) const { return (bits_ & o.bits_) == 0; }
    constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

    /// Elements in increasing order.
    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }
    int sum() const {
        int s = 0;
        for (int e : elements())
            s += e;
        return s;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first)
                s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint32_t bits_ = 0;
};

}  // namespace polytc
