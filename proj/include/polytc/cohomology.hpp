#pragma once

// Mod-2 cohomology ring of a planar polygon space, presented by generators
// R, V_1, ..., V_{n-1} in degree 1 and the relations attached to the genetic
// code.  Degrees 0..m+1 are materialized; classes are stored as coordinates in
// a fixed monomial basis of each H^d.

#include <optional>
#include <string>
#include <vector>

#include "polytc/genetics.hpp"
#include "polytc/gf2.hpp"
#include "polytc/index_set.hpp"

namespace polytc {

/// R^r V_S.
struct Monomial {
    int r = 0;
    IndexSet s;

    int degree() const { return r + s.size(); }
    std::string to_string() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class CohomologyRing;

/// Element of H^d in normal form: a bit per basis monomial of degree d.
class CohoClass {
public:
    CohoClass() = default;
    CohoClass(int degree, gf2::BitVector coords) : degree_(degree), coords_(std::move(coords)) {}

    int degree() const { return degree_; }
    const gf2::BitVector& coords() const { return coords_; }
    bool is_zero() const { return coords_.none(); }

    CohoClass& operator+=(const CohoClass& other);
    friend CohoClass operator+(CohoClass a, const CohoClass& b) { return a += b; }
    friend bool operator==(const CohoClass&, const CohoClass&) = default;

private:
    int degree_ = 0;
    gf2::BitVector coords_;
};

/// Generator index: 0 is R, i in [1, n-1] is V_i.
using Generator = int;

class CohomologyRing {
public:
    /// Builds and self-checks the presentation; throws std::logic_error when
    /// H^{m+1} != 0, dim H^0 != 1 or dim H^m != 1.
    explicit CohomologyRing(GeneticCode code);

    const GeneticCode& code() const { return code_; }
    int n() const { return code_.n(); }
    int m() const { return code_.m(); }
    const SubgeeFamily& subgees() const { return subgees_; }

    /// dim H^d; zero outside 0..m.
    int dim(int d) const;
    std::vector<int> dims() const;
    /// Monomials representing the basis of H^d.
    const std::vector<Monomial>& basis(int d) const;
    /// All monomials R^{d-|S|} V_S with S a subgee, in column order.
    const std::vector<Monomial>& monomials(int d) const;
    /// Rank of the degree-d relations (3) alone and with ideal closure.
    int relation_rank(int d, bool with_closure) const;

    CohoClass zero(int d) const;
    CohoClass one() const { return monomial({0, IndexSet()}); }
    CohoClass gen(Generator g) const;
    CohoClass R() const { return gen(0); }
    CohoClass V(int i) const { return gen(i); }
    /// Normal form of R^r V_S after V_i^2 = R V_i; zero when S is not a
    /// subgee or the degree exceeds m.
    CohoClass monomial(Monomial mono) const;
    CohoClass basis_class(int d, std::size_t index) const;

    CohoClass multiply(const CohoClass& x, const CohoClass& y) const;
    CohoClass power(const CohoClass& x, int e) const;

    /// Coordinate on H^m; throws std::invalid_argument for other degrees.
    bool phi(const CohoClass& x) const;
    /// phi(R^{m-|S|} V_S); throws when S is not a subgee or |S| > m.
    bool phi_S(IndexSet s) const;

    /// Basis indices of g * basis(d)[b] in degree d+1 (empty when d+1 > m).
    const std::vector<std::uint16_t>& times_generator(int d, Generator g, std::size_t b) const;
    /// Product of two basis monomials, as basis indices of degree d1+d2.
    std::vector<std::uint16_t> basis_product(int d1, std::size_t b1, int d2, std::size_t b2) const;

    /// Rank of the pairing H^d x H^{m-d} -> Z_2 equals dim H^d = dim H^{m-d}.
    bool pairing_nondegenerate(int d) const;

    /// Sum of monomials (each reduced).
    CohoClass from_support(int degree, const std::vector<Monomial>& support) const;
    /// Basis monomials with nonzero coordinate.
    std::vector<Monomial> support(const CohoClass& x) const;
    std::string to_string(const CohoClass& x) const;

private:
    struct Degree {
        std::vector<Monomial> monomials;  // columns
        std::vector<int> column_of;       // subgee index -> column, or -1
        gf2::RowSpace relations;
        int rank_without_closure = 0;
        std::vector<Monomial> basis;
        std::vector<gf2::BitVector> normal_form;  // column -> coords over basis
        std::vector<std::vector<std::vector<std::uint16_t>>> gen_table;  // [g][b]
    };

    gf2::BitVector times_generator_columns(int d, Generator g, const gf2::BitVector& v) const;
    std::optional<std::size_t> column(int d, Monomial mono) const;
    void check_degree(int d) const;

    GeneticCode code_;
    SubgeeFamily subgees_;
    std::vector<Degree> degrees_;  // 0..m+1
};

/// Longest nonzero product of degree-one classes, with a witness monomial of
/// that degree.
struct CupLength {
    int length = 0;
    Monomial witness;
};

CupLength cup_length(const CohomologyRing& ring);
inline int ls_category(const CohomologyRing& ring) { return cup_length(ring).length + 1; }

/// Block profile of a V-support against consecutive intervals
/// I_1 = [1, a], I_2 = (a, a+b], I_3 = (a+b, a+b+c], ...
struct MonomialType {
    std::vector<int> blocks;  // block of each element, increasing
    std::vector<int> counts;  // counts[i] = number of elements in block i+1
    friend bool operator==(const MonomialType&, const MonomialType&) = default;
    friend auto operator<=>(const MonomialType&, const MonomialType&) = default;
};

/// Elements beyond the last interval are placed in an extra final block.
MonomialType monomial_type(IndexSet s, const std::vector<int>& interval_lengths);

}  // namespace polytc
