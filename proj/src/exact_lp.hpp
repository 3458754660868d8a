#pragma once

// Exact two-phase simplex for small systems  A x >= b, x >= 0.
//
// Entries of A are small integers, so tableau entries stay small rationals;
// the fast path uses int64 rationals with overflow detection and callers fall
// back to arbitrary precision when it trips.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polytc::lp {

struct RationalOverflow : std::overflow_error {
    RationalOverflow() : std::overflow_error("int64 rational overflow") {}
};

class SmallRational {
public:
    SmallRational() = default;
    SmallRational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator-(const SmallRational& a, const SmallRational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
        if (b.num_ == 0)
            throw std::domain_error("division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    friend bool operator==(const SmallRational& a, const SmallRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const SmallRational& a, const SmallRational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const SmallRational& a, const SmallRational& b) { return b < a; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static SmallRational make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 kMax = INT64_MAX;
        if (n > kMax || n < -kMax || d > kMax)
            throw RationalOverflow();
        SmallRational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        if (r.num_ == 0)
            r.den_ = 1;
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

using BigRational = boost::multiprecision::cpp_rational;

inline int sign_of(const SmallRational& r) { return r.sign(); }
inline int sign_of(const BigRational& r) { return r.sign(); }

struct Problem {
    int vars = 0;
    std::vector<std::vector<std::int64_t>> rows;  // a . x >= rhs
    std::vector<std::int64_t> rhs;
    std::vector<std::int64_t> objective;          // minimize c . x, c >= 0; empty = feasibility only

    void add(std::vector<std::int64_t> row, std::int64_t b) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
    }
};

template <class Num>
class Simplex {
public:
    explicit Simplex(const Problem& p) : problem_(p) {}

    std::optional<std::vector<Num>> solve() {
        build();
        // Phase 1: minimize the sum of artificials.
        std::vector<Num> phase1(cols_, Num(0));
        for (int a = art_begin_; a < art_end_; ++a)
            phase1[static_cast<std::size_t>(a)] = Num(1);
        set_objective(phase1);
        optimize(/*allow_artificial=*/true);
        if (sign_of(objective_value()) != 0)
            return std::nullopt;
        drive_out_artificials();

        if (!problem_.objective.empty()) {
            std::vector<Num> c(cols_, Num(0));
            for (int j = 0; j < problem_.vars; ++j)
                c[static_cast<std::size_t>(j)] = Num(problem_.objective[static_cast<std::size_t>(j)]);
            set_objective(c);
            optimize(/*allow_artificial=*/false);
        }

        std::vector<Num> x(static_cast<std::size_t>(problem_.vars), Num(0));
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] < problem_.vars)
                x[static_cast<std::size_t>(basis_[r])] = rhs_[r];
        return x;
    }

private:
    void build() {
        const int m = static_cast<int>(problem_.rows.size());
        const int nv = problem_.vars;
        int arts = 0;
        for (auto b : problem_.rhs)
            if (b > 0)
                ++arts;
        art_begin_ = nv + m;
        art_end_ = art_begin_ + arts;
        cols_ = static_cast<std::size_t>(art_end_);
        tab_.assign(static_cast<std::size_t>(m), std::vector<Num>(cols_, Num(0)));
        rhs_.assign(static_cast<std::size_t>(m), Num(0));
        basis_.assign(static_cast<std::size_t>(m), -1);
        int next_art = art_begin_;
        for (int r = 0; r < m; ++r) {
            const auto& row = problem_.rows[static_cast<std::size_t>(r)];
            const std::int64_t b = problem_.rhs[static_cast<std::size_t>(r)];
            auto& t = tab_[static_cast<std::size_t>(r)];
            if (b > 0) {
                // a.x - s + art = b
                for (int j = 0; j < nv; ++j)
                    t[static_cast<std::size_t>(j)] = Num(row[static_cast<std::size_t>(j)]);
                t[static_cast<std::size_t>(nv + r)] = Num(-1);
                t[static_cast<std::size_t>(next_art)] = Num(1);
                rhs_[static_cast<std::size_t>(r)] = Num(b);
                basis_[static_cast<std::size_t>(r)] = next_art++;
            } else {
                // -a.x + s = -b >= 0
                for (int j = 0; j < nv; ++j)
                    t[static_cast<std::size_t>(j)] = Num(-row[static_cast<std::size_t>(j)]);
                t[static_cast<std::size_t>(nv + r)] = Num(1);
                rhs_[static_cast<std::size_t>(r)] = Num(-b);
                basis_[static_cast<std::size_t>(r)] = nv + r;
            }
        }
    }

    void set_objective(const std::vector<Num>& c) {
        // Reduced costs d_j = c_j - c_B B^{-1} A_j; the tableau already holds B^{-1}A.
        reduced_ = c;
        obj_ = Num(0);
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const Num cb = c[static_cast<std::size_t>(basis_[r])];
            if (sign_of(cb) == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign_of(tab_[r][j]) != 0)
                    reduced_[j] = reduced_[j] - cb * tab_[r][j];
            obj_ = obj_ + cb * rhs_[r];
        }
    }

    Num objective_value() const { return obj_; }

    void optimize(bool allow_artificial) {
        for (;;) {
            // Bland's rule: smallest index with negative reduced cost.
            int enter = -1;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allow_artificial && static_cast<int>(j) >= art_begin_)
                    continue;
                if (sign_of(reduced_[j]) < 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0)
                return;
            int leave = -1;
            Num best(0);
            for (std::size_t r = 0; r < basis_.size(); ++r) {
                const Num& a = tab_[r][static_cast<std::size_t>(enter)];
                if (sign_of(a) <= 0)
                    continue;
                const Num ratio = rhs_[r] / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[static_cast<std::size_t>(leave)])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0)
                throw std::logic_error("unbounded objective in feasibility LP");
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Num p = tab_[r][c];
        for (std::size_t j = 0; j < cols_; ++j)
            if (sign_of(tab_[r][j]) != 0)
                tab_[r][j] = tab_[r][j] / p;
        rhs_[r] = rhs_[r] / p;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == r)
                continue;
            const Num f = tab_[i][c];
            if (sign_of(f) == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign_of(tab_[r][j]) != 0)
                    tab_[i][j] = tab_[i][j] - f * tab_[r][j];
            rhs_[i] = rhs_[i] - f * rhs_[r];
        }
        const Num f = reduced_[c];
        if (sign_of(f) != 0) {
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign_of(tab_[r][j]) != 0)
                    reduced_[j] = reduced_[j] - f * tab_[r][j];
            obj_ = obj_ + f * rhs_[r];
        }
        basis_[r] = static_cast<int>(c);
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if (basis_[r] < art_begin_)
                continue;
            for (int j = 0; j < art_begin_; ++j) {
                if (sign_of(tab_[r][static_cast<std::size_t>(j)]) != 0) {
                    pivot(r, static_cast<std::size_t>(j));
                    break;
                }
            }
            // A row with no non-artificial entry is redundant; its artificial
            // stays basic at level zero and never re-enters.
        }
    }

    const Problem& problem_;
    std::size_t cols_ = 0;
    int art_begin_ = 0;
    int art_end_ = 0;
    std::vector<std::vector<Num>> tab_;
    std::vector<Num> rhs_;
    std::vector<int> basis_;
    std::vector<Num> reduced_;
    Num obj_{0};
};

/// Exact solve; returns x as big rationals, or nullopt if infeasible.
inline std::optional<std::vector<BigRational>> solve(const Problem& p) {
    try {
        Simplex<SmallRational> fast(p);
        auto x = fast.solve();
        if (!x)
            return std::nullopt;
        std::vector<BigRational> out;
        out.reserve(x->size());
        for (const auto& v : *x)
            out.emplace_back(BigRational(v.num()) / BigRational(v.den()));
        return out;
    } catch (const RationalOverflow&) {
        Simplex<BigRational> slow(p);
        return slow.solve();
    }
}

}  // namespace polytc::lp
