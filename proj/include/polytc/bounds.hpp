#pragma once

// Lower and upper bounds for the sequential topological complexity TC_k of a
// planar polygon space, assembled from code-shape templates, parity tests and
// machine-checked zero-divisor certificates.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polytc/cohomology.hpp"
#include "polytc/genetics.hpp"
#include "polytc/tensor.hpp"

namespace polytc {

/// binom(N, K) mod 2 via Lucas: K's binary digits must lie under N's.
bool lucas_binom_mod2(long long n, long long k);
bool is_power_of_two(long long x);

/// Literal parity criteria for R^m != 0 in the template families.
bool lemma_size3(int a, int b);
bool lemma_size4(int a, int b, int c);
bool lemma_two3genes(int a, int b, int c, int d);

/// Closed-form parities of phi(R^m) for the same families.
bool phi0_size3(int a, int b);
bool phi0_size4(int a, int b, int c);
bool phi0_two3genes(int a, int b, int c, int d);

/// What a functional psi on H^{m-1} must satisfy.
struct PsiConstraints {
    /// Interval lengths of the uniformity blocks I_1, I_2, ...; psi is constant
    /// on subgees with the same size and block counts.  Empty: no uniformity.
    std::vector<int> blocks;
    /// psi(R^{m-1-|S|} V_S) = value.
    std::map<IndexSet, bool> fixed;
    /// When present, psi vanishes on every subgee outside this list.
    std::optional<std::vector<IndexSet>> support;
    /// k = 2 products X with (phi (x) psi)(X) = 1 required.
    std::vector<Certificate> pairing_targets;
};

struct PsiSolution {
    std::map<IndexSet, bool> values;  // psi_S for every subgee with |S| <= m-1
    std::vector<int> blocks;
    std::size_t unknowns = 0;
    std::size_t equations = 0;

    bool operator()(IndexSet s) const;
};

/// A psi vanishing on the degree-(m-1) relations and meeting the constraints, or
/// nullopt when the system is inconsistent.
std::optional<PsiSolution> solve_psi(const CohomologyRing& ring, const PsiConstraints& want);

/// (phi (x) psi) applied to the (m, m-1) part of a class in H^{(x)2}.
bool phi_psi(const TensorPower& tp, const TensorClass& x, const PsiSolution& psi);

struct HypothesisCheck {
    std::string name;
    bool holds = false;
    bool required = true;  // false: logged for the audit only
};

enum class CertStatus { NotAttempted, Verified, Failed, OverBudget };
std::string to_string(CertStatus s);

struct BoundClaim {
    std::string method;  // e.g. "size-2 gene, sharp"
    int lower = 0;
    std::vector<HypothesisCheck> hypotheses;
    std::optional<Certificate> certificate;
    CertStatus status = CertStatus::NotAttempted;
};

struct TCBoundReport {
    GeneticCode code{4, {IndexSet{4}}};
    int k = 2;
    int m = 1;
    int lower = 0;
    int upper = 0;
    std::string method;
    CertStatus status = CertStatus::NotAttempted;
    std::optional<Certificate> certificate;
    std::vector<BoundClaim> claims;  // every applicable template, in order tried
    std::vector<std::string> caveats;
};

struct BoundsOptions {
    bool certify = true;
    std::size_t max_terms = 2'000'000;  // tensor term budget per certificate
};

/// Throws std::invalid_argument for k < 1.  k = 1 yields the trivial report.
TCBoundReport tc_bounds(const CohomologyRing& ring, int k, const BoundsOptions& options = {});

/// Certificate builders for the template families; nullopt when an exponent
/// would be negative or the shape does not match.
namespace certificates {

std::optional<Certificate> generic(const CohomologyRing& ring, int k);
std::optional<Certificate> size2_gene(const GeneticCode& code, int k, int m, bool sharp);
std::optional<Certificate> gene_an(const GeneticCode& code, int k, int m, IndexSet s);
std::optional<Certificate> r_power(const GeneticCode& code, int k, int m);
std::optional<Certificate> size3(const GeneticCode& code, int k, int m, int a, int b);
std::optional<Certificate> type2(const GeneticCode& code, int k, int m, bool last_case);
std::optional<Certificate> size4(const GeneticCode& code, int k, int m, int a, int b, int c);
std::optional<Certificate> two_size3(const GeneticCode& code, int k, int m, int a, int b, int c);
std::optional<Certificate> type1(const GeneticCode& code, int k, int m, int b, int c);

}  // namespace certificates

}  // namespace polytc
