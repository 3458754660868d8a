#include "polytc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace polytc::gf2 {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may only contain 0 and 1: " + bits);
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_)
        throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::any() const {
    for (Word w : words_)
        if (w != 0)
            return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t total = 0;
    for (Word w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitVector::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_)
        throw std::invalid_argument("BitVector size mismatch");
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty())
        return {};
    BitMatrix m;
    m.cols_ = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != m.cols_)
            throw std::invalid_argument("ragged bit matrix");
        m.rows_.push_back(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (rows_.empty() && cols_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw std::invalid_argument("row width mismatch");
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        out.set(r, rows_[r].dot(x));
    return out;
}

Echelon rref(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));

    Echelon out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(c))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c))
                rows[r] ^= rows[next];
        out.pivots.push_back(c);
        ++next;
    }
    out.reduced = BitMatrix(0, m.cols());
    for (std::size_t r = 0; r < next; ++r)
        out.reduced.append_row(std::move(rows[r]));
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank(); }

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("right-hand side length must equal row count");
    // Augment with b as the last column.
    BitMatrix aug(0, m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector row(m.cols() + 1);
        for (std::size_t c : m.row(r).ones())
            row.set(c);
        row.set(m.cols(), b.get(r));
        aug.append_row(std::move(row));
    }
    const Echelon e = rref(aug);
    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols())
            return std::nullopt;
        x.set(e.pivots[i], e.reduced.get(i, m.cols()));
    }
    return x;
}

std::vector<BitVector> nullspace(const BitMatrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced.get(i, free))
                v.set(e.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowSpace::is_pivot(std::size_t col) const {
    return col < pivot_row_.size() && pivot_row_[col] >= 0;
}

BitVector RowSpace::reduce(BitVector v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("RowSpace::reduce width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool RowSpace::insert(BitVector v) {
    v = reduce(std::move(v));
    const std::size_t p = v.first();
    if (p == v.size())
        return false;
    // Keep the basis fully reduced so reduce() yields canonical representatives.
    for (auto& row : rows_)
        if (row.get(p))
            row ^= v;
    if (pivot_row_.size() < cols_)
        pivot_row_.assign(cols_, -1);
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace polytc::gf2
