#pragma once

// Dense bit-packed linear algebra over GF(2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polytc::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    static BitVector from_string(const std::string& bits);  // "0110" -> bits 0..3

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) {
        const Word mask = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    // Index of the first set bit, or size() when empty.
    std::size_t first() const;
    // GF(2) inner product.
    bool dot(const BitVector& other) const;

    std::vector<std::size_t> ones() const;
    std::string to_string() const;

    const std::vector<Word>& words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix from_rows(const std::vector<std::string>& rows);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    void append_row(BitVector row);

    BitVector multiply(const BitVector& x) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct Echelon {
    BitMatrix reduced;                // RREF; zero rows removed
    std::vector<std::size_t> pivots;  // pivot column of each reduced row
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// One solution of m*x = b with free variables set to zero; nullopt if inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Kernel basis, one vector per free column (in increasing column order).
std::vector<BitVector> nullspace(const BitMatrix& m);

// Incrementally maintained reduced row space. Used for normal forms modulo a
// relation span: reduce() returns the unique representative with zeros in
// every pivot column.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols = 0) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<BitVector>& rows() const { return rows_; }
    bool is_pivot(std::size_t col) const;

    // Returns true if v was independent of the span.
    bool insert(BitVector v);
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;  // fully reduced against each other
    std::vector<std::size_t> pivots_;
    std::vector<int> pivot_row_;   // column -> row, or -1
};

}  // namespace polytc::gf2
