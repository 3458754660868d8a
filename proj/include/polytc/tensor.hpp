#pragma once

// Exact arithmetic in H^{(x)k} for the ring of a polygon space: sparse sums of
// basis tensors, zero-divisor factors, certificates and a budgeted search for
// long nonzero products of zero divisors.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytc/cohomology.hpp"

namespace polytc {

inline constexpr int kMaxTensorFactors = 8;

/// One basis id per tensor factor (ids index the concatenated bases of
/// H^0, ..., H^m).
using TensorKey = std::array<std::uint16_t, kMaxTensorFactors>;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear combination sum_t gen_t placed at position pos_t (1-based).
struct LinearTerm {
    int pos;
    Generator gen;
    friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};
using LinearForm = std::vector<LinearTerm>;

class TensorPower;

/// Element of the k-fold tensor power; terms are sorted and distinct.
class TensorClass {
public:
    TensorClass() = default;
    TensorClass(int k, std::vector<TensorKey> terms) : k_(k), terms_(std::move(terms)) {}

    int k() const { return k_; }
    const std::vector<TensorKey>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    TensorClass& operator+=(const TensorClass& other);
    friend TensorClass operator+(TensorClass a, const TensorClass& b) { return a += b; }
    friend bool operator==(const TensorClass&, const TensorClass&) = default;

private:
    int k_ = 0;
    std::vector<TensorKey> terms_;
};

class TensorPower {
public:
    TensorPower(const CohomologyRing& ring, int k, std::size_t max_terms = 4'000'000);

    const CohomologyRing& ring() const { return *ring_; }
    int k() const { return k_; }
    std::size_t max_terms() const { return max_terms_; }

    TensorClass one() const;
    TensorClass zero() const { return TensorClass(k_, {}); }
    /// p_j^*(x).
    TensorClass embed(int j, const CohoClass& x) const;
    /// g_j + g_{j-1}, or g_j + g_with when given.
    TensorClass bar(int j, Generator g, std::optional<int> with = std::nullopt) const;
    TensorClass linear(const LinearForm& form) const;
    /// x1 (x) ... (x) xk.
    TensorClass pure(const std::vector<CohoClass>& factors) const;

    TensorClass multiply(const TensorClass& x, const TensorClass& y) const;
    TensorClass multiply(const TensorClass& x, const LinearForm& form) const;
    TensorClass power(const TensorClass& x, int e) const;

    /// Degree of each factor of a key.
    std::vector<int> multidegree(const TensorKey& key) const;
    int total_degree(const TensorKey& key) const;
    /// Image under the diagonal pullback (the k-fold cup product).
    CohoClass diagonal(const TensorClass& x) const;
    /// Factors of a key as basis monomials.
    std::vector<Monomial> factors(const TensorKey& key) const;
    std::string to_string(const TensorClass& x, std::size_t max_terms = 8) const;

private:
    std::uint16_t id(int degree, std::size_t local) const {
        return static_cast<std::uint16_t>(offset_[static_cast<std::size_t>(degree)] + local);
    }
    TensorClass normalize(std::vector<TensorKey> keys) const;
    void check_pos(int j) const;

    const CohomologyRing* ring_;
    int k_;
    std::size_t max_terms_;
    std::vector<std::size_t> offset_;   // degree -> first id
    std::vector<int> degree_of_;        // id -> degree
    std::vector<std::uint16_t> local_;  // id -> index within its degree
};

/// A product of degree-one factors, each raised to a power.
struct CertificateFactor {
    enum class Kind { Bar, Embed, Sum };
    Kind kind = Kind::Bar;
    int pos = 0;                 // Bar/Embed
    std::optional<int> with;     // Bar: partner position, default pos-1
    Generator gen = 0;           // Bar/Embed
    std::vector<LinearTerm> terms;  // Sum
    int exp = 1;

    bool is_zero_divisor() const { return kind != Kind::Embed; }
    LinearForm form() const;
    std::string to_string() const;
    friend bool operator==(const CertificateFactor&, const CertificateFactor&) = default;
};

struct Certificate {
    GeneticCode code{4, {IndexSet{4}}};
    std::optional<LengthVector> witness;
    int k = 2;
    std::vector<CertificateFactor> factors;
    int length = 0;  // claimed: total exponent of zero-divisor factors
    std::string label;

    /// Total exponent of the zero-divisor factors.
    int computed_length() const;
    std::string to_string() const;
};

struct CertificateResult {
    bool nonzero = false;
    std::vector<int> witness_multidegree;  // empty when zero
    std::size_t terms = 0;
};

/// Throws std::invalid_argument for malformed certificates (bad positions,
/// generators, a factor outside the kernel of the diagonal, a length claim
/// that disagrees with the exponents) and BudgetExceeded when intermediate
/// products outgrow the term budget.
CertificateResult evaluate_certificate(const CohomologyRing& ring, const Certificate& cert,
                                       std::size_t max_terms = 4'000'000);

/// The product itself, without validation; tp.k() must equal cert.k.
TensorClass certificate_product(const TensorPower& tp, const Certificate& cert);

struct ZclSearch {
    int length = 0;
    Certificate certificate;
    bool exhaustive = false;  // the whole degree-one kernel was searched
    std::size_t nodes = 0;
};

/// Longest nonzero product of degree-one zero divisors found within the node
/// budget.  When the degree-one kernel has at most 2^max_exhaustive_rank
/// elements every element is in the pool; otherwise the pool is the bars of
/// the generators.
ZclSearch zcl_lower_bound(const CohomologyRing& ring, int k, std::size_t node_budget = 200'000,
                          int max_exhaustive_rank = 8);

std::string generator_name(Generator g);
Generator parse_generator(const std::string& name, int n);

}  // namespace polytc
