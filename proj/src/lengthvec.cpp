#include "polytc/lengthvec.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "polytc/genetics.hpp"

namespace polytc {

LengthVector::LengthVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("length vector must be non-empty");
    if (entries_.size() > 31)
        throw std::invalid_argument("length vectors with more than 31 sides are not supported");
    for (auto e : entries_)
        if (e <= 0)
            throw std::invalid_argument("side lengths must be positive integers");
    std::sort(entries_.begin(), entries_.end());
    for (auto e : entries_) {
        if (perimeter_ > INT64_MAX / 4 - e)
            throw std::invalid_argument("side lengths too large");
        perimeter_ += e;
    }
}

LengthVector LengthVector::parse(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']')
            c = ' ';
    std::istringstream in(cleaned);
    std::vector<std::int64_t> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer side length: " + token);
        }
        if (used != token.size())
            throw std::invalid_argument("not an integer side length: " + token);
        values.push_back(v);
    }
    return LengthVector(std::move(values));
}

std::int64_t LengthVector::sum(IndexSet s) const {
    std::int64_t total = 0;
    for (int i : s.elements()) {
        if (i > n())
            throw std::out_of_range("index " + std::to_string(i) + " exceeds n=" + std::to_string(n()));
        total += entries_[static_cast<std::size_t>(i - 1)];
    }
    return total;
}

LengthVector LengthVector::scaled(std::int64_t factor) const {
    if (factor <= 0)
        throw std::invalid_argument("scale factor must be positive");
    std::vector<std::int64_t> out = entries_;
    for (auto& e : out)
        e *= factor;
    return LengthVector(std::move(out));
}

std::string LengthVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

NotGenericError::NotGenericError(IndexSet balanced)
    : std::invalid_argument("length vector is not generic: the sides " + balanced.to_string() +
                            " sum to half the perimeter (zero signed sum)"),
      balanced_(balanced) {}

std::optional<IndexSet> find_balanced_subset(const LengthVector& alpha) {
    if (alpha.perimeter() % 2 != 0)
        return std::nullopt;
    const std::int64_t target = alpha.perimeter() / 2;
    const int n = alpha.n();
    const int left = n / 2;
    const int right = n - left;

    // Meet in the middle: sums of subsets of the first half, looked up from
    // subsets of the second half.
    std::unordered_map<std::int64_t, std::uint32_t> left_sums;
    left_sums.reserve(std::size_t{1} << left);
    for (std::uint32_t mask = 0; mask < (1U << left); ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < left; ++i)
            if (mask >> i & 1U)
                s += alpha[i + 1];
        left_sums.emplace(s, mask);
    }
    for (std::uint32_t mask = 0; mask < (1U << right); ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < right; ++i)
            if (mask >> i & 1U)
                s += alpha[left + i + 1];
        if (auto it = left_sums.find(target - s); it != left_sums.end())
            return IndexSet(it->second | (mask << left));
    }
    return std::nullopt;
}

bool is_generic(const LengthVector& alpha) { return !find_balanced_subset(alpha).has_value(); }

namespace {

void require_generic(const LengthVector& alpha) {
    if (auto b = find_balanced_subset(alpha))
        throw NotGenericError(*b);
}

bool short_unchecked(IndexSet s, const LengthVector& alpha) {
    return 2 * alpha.sum(s) < alpha.perimeter();
}

}  // namespace

bool is_short(IndexSet subset, const LengthVector& alpha) {
    require_generic(alpha);
    return short_unchecked(subset, alpha);
}

GeneticCode genetic_code(const LengthVector& alpha) {
    require_generic(alpha);
    const int n = alpha.n();
    if (n > 24)
        throw std::invalid_argument("genetic codes are only computed for n <= 24");

    // Shortness is monotone for dominance, so J is maximal iff each upper
    // cover (raise one element by one, or adjoin 1) is long.
    std::vector<IndexSet> genes;
    const std::uint32_t rest = (1U << (n - 1));
    for (std::uint32_t low = 0; low < rest; ++low) {
        const IndexSet j = IndexSet(low).with(n);
        if (!short_unchecked(j, alpha))
            continue;
        bool maximal = true;
        if (!j.contains(1) && short_unchecked(j.with(1), alpha))
            maximal = false;
        for (int i = 1; maximal && i < n; ++i)
            if (j.contains(i) && !j.contains(i + 1) && short_unchecked(j.without(i).with(i + 1), alpha))
                maximal = false;
        if (maximal)
            genes.push_back(j);
    }
    if (genes.empty())
        throw std::invalid_argument("the polygon space of " + alpha.to_string() +
                                    " is empty: {n} is long");
    return GeneticCode(n, std::move(genes));
}

}  // namespace polytc
