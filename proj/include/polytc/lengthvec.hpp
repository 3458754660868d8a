#pragma once

// Length vectors of planar polygon spaces and their short subsets.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytc/index_set.hpp"

namespace polytc {

class GeneticCode;

/// Positive integer side lengths, sorted non-decreasingly on construction.
class LengthVector {
public:
    explicit LengthVector(std::vector<std::int64_t> entries);

    /// Parses "1,1,1,3" or "1 1 1 3".
    static LengthVector parse(const std::string& text);

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<std::int64_t>& entries() const { return entries_; }
    /// 1-based access.
    std::int64_t operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    std::int64_t perimeter() const { return perimeter_; }
    std::int64_t sum(IndexSet s) const;

    LengthVector scaled(std::int64_t factor) const;
    std::string to_string() const;

    friend bool operator==(const LengthVector&, const LengthVector&) = default;

private:
    std::vector<std::int64_t> entries_;
    std::int64_t perimeter_ = 0;
};

/// Raised when an operation needs a generic length vector; carries a subset
/// whose signed sum vanishes.
class NotGenericError : public std::invalid_argument {
public:
    explicit NotGenericError(IndexSet balanced);
    IndexSet balanced() const { return balanced_; }

private:
    IndexSet balanced_;
};

/// A subset I of [n] whose complement has the same side-length sum, if any.
std::optional<IndexSet> find_balanced_subset(const LengthVector& alpha);

bool is_generic(const LengthVector& alpha);

/// sum over I < sum over complement. Throws for non-generic alpha.
bool is_short(IndexSet subset, const LengthVector& alpha);

/// Maximal short sets containing n under the dominance order.
GeneticCode genetic_code(const LengthVector& alpha);

}  // namespace polytc
