#include "polytc/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytc {

std::string Monomial::to_string() const {
    std::string out;
    if (r == 1)
        out = "R";
    else if (r > 1)
        out = "R^" + std::to_string(r);
    if (!s.empty()) {
        out += "V_{";
        bool first = true;
        for (int i : s.elements()) {
            if (!first)
                out += ",";
            out += std::to_string(i);
            first = false;
        }
        out += "}";
    }
    return out.empty() ? "1" : out;
}

CohoClass& CohoClass::operator+=(const CohoClass& other) {
    if (degree_ != other.degree_)
        throw std::invalid_argument("adding classes of degrees " + std::to_string(degree_) + " and " +
                                    std::to_string(other.degree_));
    coords_ ^= other.coords_;
    return *this;
}

CohomologyRing::CohomologyRing(GeneticCode code) : code_(std::move(code)), subgees_(code_) {
    const int n = code_.n();
    const int m = code_.m();
    if (m < 1)
        throw std::invalid_argument("cohomology needs n >= 4, got n=" + std::to_string(n));

    const auto& all = subgees_.all();
    degrees_.resize(static_cast<std::size_t>(m + 2));
    for (int d = 0; d <= m + 1; ++d) {
        Degree& deg = degrees_[static_cast<std::size_t>(d)];
        deg.column_of.assign(all.size(), -1);
        // Largest supports first so that R^d and small V-supports survive as
        // non-pivot (basis) columns.
        for (std::size_t k = all.size(); k-- > 0;) {
            if (all[k].size() > d)
                continue;
            deg.column_of[k] = static_cast<int>(deg.monomials.size());
            deg.monomials.push_back({d - all[k].size(), all[k]});
        }
        const std::size_t cols = deg.monomials.size();
        deg.relations = gf2::RowSpace(cols);

        gf2::RowSpace plain(cols);
        for (IndexSet s : all) {
            if (s.size() < n - d - 2)
                continue;
            gf2::BitVector row(cols);
            for (std::size_t k = 0; k < all.size(); ++k)
                if (all[k].disjoint(s) && deg.column_of[k] >= 0)
                    row.set(static_cast<std::size_t>(deg.column_of[k]));
            plain.insert(row);
            deg.relations.insert(std::move(row));
        }
        deg.rank_without_closure = static_cast<int>(plain.rank());
        if (d > 0) {
            // The relation ideal in degree d also contains degree-one
            // multiples of the relations one degree lower.
            const auto& lower = degrees_[static_cast<std::size_t>(d - 1)].relations.rows();
            for (const auto& row : lower)
                for (Generator g = 0; g < n; ++g)
                    deg.relations.insert(times_generator_columns(d - 1, g, row));
        }

        std::vector<int> basis_index(cols, -1);
        for (std::size_t c = 0; c < cols; ++c) {
            if (!deg.relations.is_pivot(c)) {
                basis_index[c] = static_cast<int>(deg.basis.size());
                deg.basis.push_back(deg.monomials[c]);
            }
        }
        deg.normal_form.reserve(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            gf2::BitVector unit(cols);
            unit.set(c);
            const gf2::BitVector reduced = deg.relations.reduce(std::move(unit));
            gf2::BitVector coords(deg.basis.size());
            for (std::size_t j : reduced.ones())
                coords.set(static_cast<std::size_t>(basis_index[j]));
            deg.normal_form.push_back(std::move(coords));
        }
    }

    if (dim(0) != 1)
        throw std::logic_error("dim H^0 = " + std::to_string(dim(0)) + " for " + code_.to_string());
    if (dim(m) != 1)
        throw std::logic_error("dim H^m = " + std::to_string(dim(m)) + " for " + code_.to_string());
    if (!degrees_.back().basis.empty())
        throw std::logic_error("H^{m+1} does not vanish for " + code_.to_string());

    for (int d = 0; d < m; ++d) {
        Degree& deg = degrees_[static_cast<std::size_t>(d)];
        deg.gen_table.assign(static_cast<std::size_t>(n), {});
        for (Generator g = 0; g < n; ++g) {
            auto& table = deg.gen_table[static_cast<std::size_t>(g)];
            table.resize(deg.basis.size());
            for (std::size_t b = 0; b < deg.basis.size(); ++b) {
                const std::size_t col = *column(d, deg.basis[b]);
                gf2::BitVector v(deg.monomials.size());
                v.set(col);
                const gf2::BitVector prod = times_generator_columns(d, g, v);
                gf2::BitVector coords(static_cast<std::size_t>(dim(d + 1)));
                for (std::size_t c : prod.ones())
                    coords ^= degrees_[static_cast<std::size_t>(d + 1)].normal_form[c];
                for (std::size_t j : coords.ones())
                    table[b].push_back(static_cast<std::uint16_t>(j));
            }
        }
    }
}

void CohomologyRing::check_degree(int d) const {
    if (d < 0)
        throw std::invalid_argument("negative degree");
}

int CohomologyRing::dim(int d) const {
    if (d < 0 || d > m())
        return 0;
    return static_cast<int>(degrees_[static_cast<std::size_t>(d)].basis.size());
}

std::vector<int> CohomologyRing::dims() const {
    std::vector<int> out;
    for (int d = 0; d <= m(); ++d)
        out.push_back(dim(d));
    return out;
}

const std::vector<Monomial>& CohomologyRing::basis(int d) const {
    if (d < 0 || d > m() + 1)
        throw std::out_of_range("degree " + std::to_string(d) + " is not materialized");
    return degrees_[static_cast<std::size_t>(d)].basis;
}

const std::vector<Monomial>& CohomologyRing::monomials(int d) const {
    if (d < 0 || d > m() + 1)
        throw std::out_of_range("degree " + std::to_string(d) + " is not materialized");
    return degrees_[static_cast<std::size_t>(d)].monomials;
}

int CohomologyRing::relation_rank(int d, bool with_closure) const {
    if (d < 0 || d > m() + 1)
        throw std::out_of_range("degree " + std::to_string(d) + " is not materialized");
    const Degree& deg = degrees_[static_cast<std::size_t>(d)];
    return with_closure ? static_cast<int>(deg.relations.rank()) : deg.rank_without_closure;
}

std::optional<std::size_t> CohomologyRing::column(int d, Monomial mono) const {
    if (d < 0 || d > m() + 1 || mono.degree() != d)
        return std::nullopt;
    const int k = subgees_.index_of(mono.s);
    if (k < 0)
        return std::nullopt;
    const int c = degrees_[static_cast<std::size_t>(d)].column_of[static_cast<std::size_t>(k)];
    if (c < 0)
        return std::nullopt;
    return static_cast<std::size_t>(c);
}

gf2::BitVector CohomologyRing::times_generator_columns(int d, Generator g, const gf2::BitVector& v) const {
    const Degree& src = degrees_[static_cast<std::size_t>(d)];
    gf2::BitVector out(degrees_[static_cast<std::size_t>(d + 1)].monomials.size());
    for (std::size_t c : v.ones()) {
        Monomial mono = src.monomials[c];
        if (g == 0 || mono.s.contains(g))
            mono.r += 1;  // V_i^2 = R V_i
        else
            mono.s = mono.s.with(g);
        if (auto col = column(d + 1, mono))
            out.flip(*col);
    }
    return out;
}

CohoClass CohomologyRing::zero(int d) const {
    check_degree(d);
    return CohoClass(d, gf2::BitVector(static_cast<std::size_t>(dim(d))));
}

CohoClass CohomologyRing::gen(Generator g) const {
    if (g < 0 || g >= n())
        throw std::out_of_range("generator index " + std::to_string(g) + " outside [0, n-1]");
    return g == 0 ? monomial({1, IndexSet()}) : monomial({0, IndexSet{g}});
}

CohoClass CohomologyRing::monomial(Monomial mono) const {
    if (mono.r < 0)
        throw std::invalid_argument("negative power of R");
    if (mono.s.max() >= n())
        throw std::invalid_argument("V-support " + mono.s.to_string() + " exceeds [n-1]");
    const int d = mono.degree();
    if (d > m())
        return zero(d);
    const auto col = column(d, mono);
    if (!col)
        return zero(d);
    return CohoClass(d, degrees_[static_cast<std::size_t>(d)].normal_form[*col]);
}

CohoClass CohomologyRing::basis_class(int d, std::size_t index) const {
    gf2::BitVector coords(static_cast<std::size_t>(dim(d)));
    coords.set(index);
    return CohoClass(d, std::move(coords));
}

std::vector<std::uint16_t> CohomologyRing::basis_product(int d1, std::size_t b1, int d2, std::size_t b2) const {
    const int d = d1 + d2;
    if (d > m())
        return {};
    const Monomial& x = basis(d1)[b1];
    const Monomial& y = basis(d2)[b2];
    const Monomial prod{x.r + y.r + (x.s & y.s).size(), x.s | y.s};
    const auto col = column(d, prod);
    if (!col)
        return {};
    std::vector<std::uint16_t> out;
    for (std::size_t j : degrees_[static_cast<std::size_t>(d)].normal_form[*col].ones())
        out.push_back(static_cast<std::uint16_t>(j));
    return out;
}

CohoClass CohomologyRing::multiply(const CohoClass& x, const CohoClass& y) const {
    const int d = x.degree() + y.degree();
    CohoClass out = zero(d);
    if (d > m())
        return out;
    gf2::BitVector acc(static_cast<std::size_t>(dim(d)));
    for (std::size_t i : x.coords().ones())
        for (std::size_t j : y.coords().ones())
            for (std::uint16_t k : basis_product(x.degree(), i, y.degree(), j))
                acc.flip(k);
    return CohoClass(d, std::move(acc));
}

CohoClass CohomologyRing::power(const CohoClass& x, int e) const {
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    CohoClass out = one();
    for (int i = 0; i < e; ++i)
        out = multiply(out, x);
    return out;
}

bool CohomologyRing::phi(const CohoClass& x) const {
    if (x.degree() != m())
        throw std::invalid_argument("phi needs a class of degree m=" + std::to_string(m()) + ", got degree " +
                                    std::to_string(x.degree()));
    return x.coords().get(0);
}

bool CohomologyRing::phi_S(IndexSet s) const {
    if (!subgees_.contains(s))
        throw std::invalid_argument(s.to_string() + " is not a subgee of " + code_.to_string());
    if (s.size() > m())
        throw std::invalid_argument("subgee " + s.to_string() + " is larger than m");
    return phi(monomial({m() - s.size(), s}));
}

const std::vector<std::uint16_t>& CohomologyRing::times_generator(int d, Generator g, std::size_t b) const {
    static const std::vector<std::uint16_t> kEmpty;
    if (d >= m())
        return kEmpty;
    return degrees_[static_cast<std::size_t>(d)].gen_table[static_cast<std::size_t>(g)][b];
}

bool CohomologyRing::pairing_nondegenerate(int d) const {
    if (d < 0 || d > m())
        throw std::out_of_range("degree outside 0..m");
    const int e = m() - d;
    if (dim(d) != dim(e))
        return false;
    gf2::BitMatrix pairing(static_cast<std::size_t>(dim(d)), static_cast<std::size_t>(dim(e)));
    for (std::size_t i = 0; i < static_cast<std::size_t>(dim(d)); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(dim(e)); ++j) {
            const auto prod = basis_product(d, i, e, j);
            pairing.set(i, j, !prod.empty() && prod.front() == 0);
        }
    return gf2::rank(pairing) == static_cast<std::size_t>(dim(d));
}

CohoClass CohomologyRing::from_support(int degree, const std::vector<Monomial>& support) const {
    CohoClass out = zero(degree);
    for (const Monomial& mono : support) {
        if (mono.degree() != degree)
            throw std::invalid_argument("monomial " + mono.to_string() + " is not of degree " + std::to_string(degree));
        out += monomial(mono);
    }
    return out;
}

std::vector<Monomial> CohomologyRing::support(const CohoClass& x) const {
    std::vector<Monomial> out;
    if (x.degree() > m())
        return out;
    for (std::size_t i : x.coords().ones())
        out.push_back(basis(x.degree())[i]);
    return out;
}

std::string CohomologyRing::to_string(const CohoClass& x) const {
    const auto terms = support(x);
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            out += " + ";
        out += terms[i].to_string();
    }
    return out;
}

CupLength cup_length(const CohomologyRing& ring) {
    // H* is generated in degree one and H^{m+1} = 0, so the cup length is the
    // top degree m as soon as some top-degree monomial survives.
    const int m = ring.m();
    for (int size = 0; size <= m; ++size)
        for (IndexSet s : ring.subgees().of_size(size))
            if (ring.phi_S(s))
                return {m, Monomial{m - size, s}};
    throw std::logic_error("no monomial of degree m is nonzero");
}

MonomialType monomial_type(IndexSet s, const std::vector<int>& interval_lengths) {
    MonomialType t;
    t.counts.assign(interval_lengths.size() + 1, 0);
    for (int e : s.elements()) {
        int block = 0;
        int upper = 0;
        while (block < static_cast<int>(interval_lengths.size())) {
            upper += interval_lengths[static_cast<std::size_t>(block)];
            if (e <= upper)
                break;
            ++block;
        }
        t.blocks.push_back(block + 1);
        ++t.counts[static_cast<std::size_t>(block)];
    }
    while (!t.counts.empty() && t.counts.back() == 0 && t.counts.size() > interval_lengths.size())
        t.counts.pop_back();
    return t;
}

}  // namespace polytc
