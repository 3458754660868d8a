#pragma once

// Genetic codes: the dominance order on index sets, subgees, realizability by
// integer length vectors, enumeration for small n, and shape classification.

#include <optional>
#include <string>
#include <vector>

#include "polytc/index_set.hpp"
#include "polytc/lengthvec.hpp"

namespace polytc {

/// I <= J iff the top |I| elements of J dominate I elementwise.
bool dominance_leq(IndexSet lhs, IndexSet rhs);

/// Antichain of genes (subsets of [n] containing n), kept in canonical order:
/// larger genes first, equal sizes in decreasing lexicographic order.
class GeneticCode {
public:
    GeneticCode(int n, std::vector<IndexSet> genes);

    /// Accepts "<{1,2,7},{3,4,7}>", "{1,2,7},{3,4,7}" or "1,2,7;3,4,7".
    static GeneticCode parse(const std::string& text);

    int n() const { return n_; }
    int m() const { return n_ - 3; }
    const std::vector<IndexSet>& genes() const { return genes_; }
    /// Genes with n removed, same order.
    std::vector<IndexSet> gees() const;
    std::vector<int> gene_sizes() const;

    /// True when s u {n} is dominated by some gene (s may or may not contain n).
    bool covers(IndexSet s) const;

    std::string to_string() const;

    friend bool operator==(const GeneticCode&, const GeneticCode&) = default;
    friend auto operator<=>(const GeneticCode& a, const GeneticCode& b) {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        return a.genes_ <=> b.genes_;
    }

private:
    int n_;
    std::vector<IndexSet> genes_;
};

/// Subsets S of [n-1] with S u {n} dominated by a gene, ordered by size and
/// then colexicographically (as bitmasks).
class SubgeeFamily {
public:
    explicit SubgeeFamily(const GeneticCode& code);

    int n() const { return n_; }
    const std::vector<IndexSet>& all() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    /// Position of s in all(), or -1 when s is not a subgee.
    int index_of(IndexSet s) const;
    bool contains(IndexSet s) const { return index_of(s) >= 0; }
    std::vector<IndexSet> of_size(int k) const;
    int max_size() const;

private:
    int n_;
    std::vector<IndexSet> sets_;
    std::vector<int> lookup_;  // bitmask -> index or -1
};

SubgeeFamily subgees(const GeneticCode& code);

struct Realization {
    bool realizable = false;
    std::optional<LengthVector> witness;
};

/// Exact feasibility of the short/long pattern prescribed by the candidate.
/// On success the witness is a small integer vector whose genetic code is the
/// candidate.
Realization realizable(const GeneticCode& candidate);

enum class Template {
    Point,            // <{n}>
    Monogenic2,       // <{a,n}>                          params a
    Monogenic3,       // <{a,a+b,n}>                      params a,b
    Monogenic4,       // <{a,a+b,a+b+c,n}>                params a,b,c
    HasGeneSize2,     // several genes, one equal to {a,n} params a
    Genes24A,         // <{2,4,n},{a,n}>                  params a
    TwoSize3,         // <{a+b,a+b+c,n},{a,a+b+c+d,n}>    params a,b,c,d
    Type1,            // <{1,1+b,1+b+c,n},{1,1+b+c+d,n}>  params b,c,d
    Type2,            // params: 1 for <{3,4,n},{2,5,n},{1,6,n}>, else 0
};

std::string to_string(Template t);

struct TemplateMatch {
    Template kind;
    std::vector<int> params;
    friend bool operator==(const TemplateMatch&, const TemplateMatch&) = default;
};

struct CodeSignature {
    std::vector<int> sizes;  // gene sizes, decreasing
    bool type1 = false;
    bool type2 = false;
    std::vector<TemplateMatch> templates;

    std::optional<TemplateMatch> find(Template kind) const;
    std::string sizes_string() const;  // "4,3,3"
    friend bool operator==(const CodeSignature&, const CodeSignature&) = default;
};

CodeSignature classify(const GeneticCode& code);

/// The gee families of all realizable codes with n = 7 (Type 2 reference).
bool gees_occur_at_n7(const GeneticCode& code);

struct EnumeratedCode {
    GeneticCode code;
    LengthVector witness;
    CodeSignature signature;
};

inline constexpr int kMinEnumerateN = 4;
inline constexpr int kMaxEnumerateN = 9;

/// All realizable genetic codes for n (4 <= n <= 9), sorted canonically.
/// Results are memoized per process.
const std::vector<EnumeratedCode>& enumerate_genetic_codes(int n);

/// Same enumeration without classification or memoization.
std::vector<EnumeratedCode> enumerate_genetic_codes_uncached(int n);

}  // namespace polytc
