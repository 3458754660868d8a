#include "polytc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytc {

bool lucas_binom_mod2(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        throw std::out_of_range("binomial needs 0 <= K <= N");
    return (k & ~n) == 0;
}

bool is_power_of_two(long long x) { return x > 0 && (x & (x - 1)) == 0; }

namespace {

int mod4(long long x) { return static_cast<int>(((x % 4) + 4) % 4); }

void require_positive(std::initializer_list<int> params) {
    for (int p : params)
        if (p < 1)
            throw std::out_of_range("template parameters must be positive");
}

// binom(x, 2) mod 2, valid for any x >= 0.
int c2(long long x) { return x < 2 ? 0 : static_cast<int>((x * (x - 1) / 2) % 2); }

}  // namespace

bool lemma_size3(int a, int b) {
    require_positive({a, b});
    const int r = mod4(a);
    return r == 3 || (r == 0 && b % 2 == 0) || (r == 2 && b % 2 == 1);
}

bool lemma_size4(int a, int b, int c) {
    require_positive({a, b, c});
    const bool bc_even = (b + c) % 2 == 0;
    const bool a_even = a % 2 == 0;
    return (bc_even && a_even && mod4(a + b) == 0) ||
           (bc_even && a_even && mod4(c) == 1) ||
           (!bc_even && mod4(a) == 3) ||
           (!bc_even && (mod4(b) == 2 || mod4(b) == 3) && (mod4(a) == 0 || mod4(a) == 2)) ||
           (mod4(a) == 2 && mod4(b) == 2);
}

bool lemma_two3genes(int a, int b, int c, int d) {
    require_positive({a, b, c, d});
    const bool first = mod4(a + b) == 1 || mod4(a + b + 2 * c) == 2;
    const bool second = mod4(static_cast<long long>(a + 1) * d) == 0;
    return (first && second) || (!first && !second);
}

bool phi0_size3(int a, int b) {
    require_positive({a, b});
    return ((static_cast<long long>(a - 1) * b) % 2 + c2(a - 1)) % 2 == 1;
}

bool phi0_size4(int a, int b, int c) {
    require_positive({a, b, c});
    const long long t1 = c2(a) * static_cast<long long>(a + b + c - 1);
    const long long t2 = static_cast<long long>(a - 1) * (c2(b) + static_cast<long long>(b - 1) * (c - 1));
    return (t1 + t2) % 2 == 1;
}

bool phi0_two3genes(int a, int b, int c, int d) {
    require_positive({a, b, c, d});
    const long long v = c2(a - 1) + c2(b) + static_cast<long long>(b) * c +
                        static_cast<long long>(a + 1) * (b + c + d);
    return v % 2 == 1;
}

// ---------------------------------------------------------------------------
// psi

bool PsiSolution::operator()(IndexSet s) const {
    auto it = values.find(s);
    return it != values.end() && it->second;
}

std::optional<PsiSolution> solve_psi(const CohomologyRing& ring, const PsiConstraints& want) {
    const int m = ring.m();
    if (m < 2)
        return std::nullopt;
    const int d = m - 1;
    const auto dim = static_cast<std::size_t>(ring.dim(d));

    // Unknowns are the values of psi on the basis of H^{m-1}; any such choice
    // kills the relations, and psi_S is the dot product with the normal form.
    std::vector<IndexSet> sets;
    std::vector<gf2::BitVector> forms;
    for (IndexSet s : ring.subgees().all()) {
        if (s.size() > d)
            continue;
        sets.push_back(s);
        forms.push_back(ring.monomial({d - s.size(), s}).coords());
    }
    auto form_of = [&](IndexSet s) -> const gf2::BitVector& {
        auto it = std::find(sets.begin(), sets.end(), s);
        if (it == sets.end())
            throw std::invalid_argument("psi constraint on " + s.to_string() + ", which is not a subgee of size <= m-1");
        return forms[static_cast<std::size_t>(it - sets.begin())];
    };

    gf2::BitMatrix a(0, dim);
    std::vector<bool> rhs;
    auto add = [&](gf2::BitVector row, bool value) {
        a.append_row(std::move(row));
        rhs.push_back(value);
    };

    if (!want.blocks.empty()) {
        std::map<std::pair<int, std::vector<int>>, std::size_t> first_of_class;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            auto key = std::make_pair(sets[i].size(), monomial_type(sets[i], want.blocks).counts);
            auto [it, inserted] = first_of_class.emplace(key, i);
            if (!inserted)
                add(forms[i] ^ forms[it->second], false);
        }
    }
    for (const auto& [s, v] : want.fixed)
        add(form_of(s), v);
    if (want.support) {
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (std::find(want.support->begin(), want.support->end(), sets[i]) == want.support->end())
                add(forms[i], false);
    }
    if (!want.pairing_targets.empty()) {
        TensorPower tp(ring, 2);
        for (const auto& cert : want.pairing_targets) {
            const TensorClass x = certificate_product(tp, cert);
            gf2::BitVector row(dim);
            for (const TensorKey& key : x.terms()) {
                const auto md = tp.multidegree(key);
                if (md[0] != m || md[1] != d)
                    continue;
                const Monomial mono = tp.factors(key)[1];
                const auto& basis = ring.basis(d);
                const auto b = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), mono) - basis.begin());
                row.flip(b);
            }
            add(std::move(row), true);
        }
    }

    gf2::BitVector b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        b.set(i, rhs[i]);
    std::optional<gf2::BitVector> u;
    if (a.rows() == 0)
        u = gf2::BitVector(dim);
    else
        u = gf2::solve(a, b);
    if (!u)
        return std::nullopt;

    PsiSolution sol;
    sol.blocks = want.blocks;
    sol.unknowns = dim;
    sol.equations = a.rows();
    for (std::size_t i = 0; i < sets.size(); ++i)
        sol.values[sets[i]] = forms[i].dot(*u);
    return sol;
}

bool phi_psi(const TensorPower& tp, const TensorClass& x, const PsiSolution& psi) {
    if (tp.k() != 2)
        throw std::invalid_argument("phi (x) psi is defined on the second tensor power");
    const int m = tp.ring().m();
    bool total = false;
    for (const TensorKey& key : x.terms()) {
        const auto md = tp.multidegree(key);
        if (md[0] == m && md[1] == m - 1)
            total ^= psi(tp.factors(key)[1].s);
    }
    return total;
}

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::NotAttempted: return "not-attempted";
        case CertStatus::Verified: return "verified";
        case CertStatus::Failed: return "failed";
        case CertStatus::OverBudget: return "over-budget";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// certificate builders

namespace certificates {

namespace {

struct Part {
    Generator g;
    int exp;
};
using Block = std::vector<Part>;

// Block at every even position 2j (partner 2j-1), the odd block at position k
// when k is odd, and optionally the chain g_{2j+1} + g_{2j-1}.
std::optional<Certificate> assemble(const GeneticCode& code, int k, const Block& pair, const Block& odd,
                                    std::string label, std::optional<Generator> chain = std::nullopt) {
    if (k < 2 || k > kMaxTensorFactors)
        return std::nullopt;
    for (const auto& p : pair)
        if (p.exp < 0)
            return std::nullopt;
    if (k % 2 == 1)
        for (const auto& p : odd)
            if (p.exp < 0)
                return std::nullopt;
    Certificate cert;
    cert.code = code;
    cert.k = k;
    cert.label = std::move(label);
    auto push = [&](int pos, Generator g, int exp, std::optional<int> with = std::nullopt) {
        if (exp == 0)
            return;
        CertificateFactor f;
        f.kind = CertificateFactor::Kind::Bar;
        f.pos = pos;
        f.with = with;
        f.gen = g;
        f.exp = exp;
        cert.factors.push_back(f);
    };
    const int l = k / 2;
    for (int j = 1; j <= l; ++j)
        for (const auto& p : pair)
            push(2 * j, p.g, p.exp);
    if (chain)
        for (int j = 1; j < l; ++j)
            push(2 * j + 1, *chain, 1, 2 * j - 1);
    if (k % 2 == 1)
        for (const auto& p : odd)
            push(k, p.g, p.exp);
    cert.length = cert.computed_length();
    return cert;
}

}  // namespace

std::optional<Certificate> generic(const CohomologyRing& ring, int k) {
    if (k < 2 || k > kMaxTensorFactors)
        return std::nullopt;
    const Monomial w = cup_length(ring).witness;
    Certificate cert;
    cert.code = ring.code();
    cert.k = k;
    cert.label = "generic";
    for (int j = 2; j <= k; ++j) {
        auto push = [&](Generator g, int exp) {
            if (exp == 0)
                return;
            CertificateFactor f;
            f.pos = j;
            f.with = 1;
            f.gen = g;
            f.exp = exp;
            cert.factors.push_back(f);
        };
        push(0, w.r);
        for (int i : w.s.elements())
            push(i, 1);
    }
    cert.length = cert.computed_length();
    return cert;
}

std::optional<Certificate> size2_gene(const GeneticCode& code, int k, int m, bool sharp) {
    const Block pair{{1, m}, {0, m - 1}};
    const Block odd{{1, 1}, {0, m - 1}};
    if (sharp)
        return assemble(code, k, pair, odd, "size-2 gene, m a power of 2", Generator{1});
    return assemble(code, k, pair, odd, "size-2 gene");
}

std::optional<Certificate> gene_an(const GeneticCode& code, int k, int m, IndexSet s) {
    const auto e = s.elements();
    const int t = static_cast<int>(e.size());
    if (t == 0 || t > m)
        return std::nullopt;
    Block pair{{e[0], m + 1 - t}};
    Block odd;
    for (int i = 1; i < t; ++i)
        pair.push_back({e[static_cast<std::size_t>(i)], 1});
    pair.push_back({0, m - 1});
    for (int i : e)
        odd.push_back({i, 1});
    odd.push_back({0, m - t});
    return assemble(code, k, pair, odd, "gene {a,n}, S=" + s.to_string());
}

std::optional<Certificate> r_power(const GeneticCode& code, int k, int m) {
    return assemble(code, k, {{0, 2 * m - 1}}, {{0, m}}, "power of R", Generator{0});
}

std::optional<Certificate> size3(const GeneticCode& code, int k, int m, int a, int b) {
    const Generator w = 1;
    const Generator x = a + b;
    int t = 0;
    while ((1 << t) < m)
        ++t;
    const int p = 1 << t;  // 2^{t-1} < m <= 2^t
    if (a % 2 == 0)
        return assemble(code, k, {{w, 2 * m - 1 - p}, {x, 1}, {0, p - 1}}, {{x, 1}, {0, m - 1}},
                        "size-3 gene, a even");
    if (t >= 1 && m == p / 2 + 1)
        return assemble(code, k, {{w, m}, {x, m - 1}}, {{w, 1}, {x, 1}, {0, m - 2}},
                        "size-3 gene, a odd, m = 2^(t-1)+1");
    return assemble(code, k, {{w, m - 1}, {x, 2}, {0, m - 2}}, {{w, 1}, {x, 1}, {0, m - 2}},
                    "size-3 gene, a odd");
}

std::optional<Certificate> type2(const GeneticCode& code, int k, int m, bool last_case) {
    const Generator w = 1, u = 2, v = 3;
    if (m < 4)
        return std::nullopt;
    if (!is_power_of_two(m - 1) || last_case) {
        const Block odd = last_case ? Block{{w, 1}, {u, 2}, {0, m - 3}} : Block{{w, 1}, {u, 1}, {v, 1}, {0, m - 3}};
        return assemble(code, k, {{w, m - 1}, {u, 2}, {v, 1}, {0, m - 3}}, odd, "type 2");
    }
    return assemble(code, k, {{w, m}, {u, 2}, {v, 1}, {0, m - 4}}, {{w, 1}, {u, 1}, {v, 1}, {0, m - 3}},
                    "type 2, m-1 a power of 2");
}

std::optional<Certificate> size4(const GeneticCode& code, int k, int m, int a, int b, int c) {
    const Generator w = 1, x = a + b, y = a + b + c;
    if (m > 4 && mod4(a) == 1 && mod4(b) == 1 && c % 2 == 1) {
        const Block odd{{w, 1}, {x, 2}, {y, 1}, {0, m - 4}};
        if (!is_power_of_two(m - 2))
            return assemble(code, k, {{w, m - 2}, {x, 2}, {y, 3}, {0, m - 4}}, odd, "size-4 gene, a,b = 1 mod 4");
        return assemble(code, k, {{w, m - 1}, {x, 2}, {y, 3}, {0, m - 5}}, odd,
                        "size-4 gene, a,b = 1 mod 4, m-2 a power of 2");
    }
    if (m > 3 && mod4(a) == 2 && mod4(b) == 0 && c % 2 == 1) {
        const Block odd{{x, 2}, {y, 1}, {0, m - 3}};
        if (is_power_of_two(m - 2))
            return assemble(code, k, {{w, 2}, {x, 2}, {y, m - 1}, {0, m - 4}}, odd,
                            "size-4 gene, a = 2, b = 0 mod 4, m-2 a power of 2");
        return assemble(code, k, {{w, 2}, {x, 2}, {y, m - 2}, {0, m - 3}}, odd, "size-4 gene, a = 2, b = 0 mod 4");
    }
    return std::nullopt;
}

std::optional<Certificate> two_size3(const GeneticCode& code, int k, int m, int a, int b, int c) {
    const Generator w = 1, x = a + b, y = a + b + c;
    for (int t = 1; (1 << t) + 2 <= m; ++t) {
        const int mp = m - (1 << t);
        if (mp >= 2 && mp <= (1 << t) + 1)
            return assemble(code, k, {{w, 2 * mp - 3}, {x, 2}, {y, 1}, {0, (2 << t) - 1}},
                            {{w, 1}, {x, 1}, {0, m - 2}}, "two size-3 genes");
    }
    return std::nullopt;
}

std::optional<Certificate> type1(const GeneticCode& code, int k, int m, int b, int c) {
    const Generator w = 1, x = 1 + b, y = 1 + b + c;
    return assemble(code, k, {{w, m - 1}, {x, 2}, {y, 1}, {0, m - 3}}, {{w, 1}, {x, 1}, {y, 1}, {0, m - 3}},
                    "type 1");
}

}  // namespace certificates

// ---------------------------------------------------------------------------
// dispatch

namespace {

int lower_from(const std::optional<Certificate>& cert) { return cert ? cert->length + 1 : 0; }

class Dispatcher {
public:
    Dispatcher(const CohomologyRing& ring, int k, const BoundsOptions& options)
        : ring_(ring), k_(k), m_(ring.m()), options_(options) {}

    void add(std::string method, std::vector<HypothesisCheck> hyps, std::optional<Certificate> cert) {
        BoundClaim claim;
        claim.method = std::move(method);
        claim.hypotheses = std::move(hyps);
        const bool holds = std::all_of(claim.hypotheses.begin(), claim.hypotheses.end(),
                                       [](const HypothesisCheck& h) { return h.holds || !h.required; });
        if (!holds || !cert) {
            claim.lower = 0;
            claims_.push_back(std::move(claim));
            return;
        }
        claim.lower = lower_from(cert);
        claim.certificate = std::move(cert);
        claims_.push_back(std::move(claim));
    }

    // Certifies claims strongest first until one survives.
    TCBoundReport finish(std::vector<std::string> caveats) {
        TCBoundReport r;
        r.code = ring_.code();
        r.k = k_;
        r.m = m_;
        r.upper = k_ * m_ + 1;
        r.caveats = std::move(caveats);
        std::vector<std::size_t> order(claims_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return claims_[a].lower > claims_[b].lower; });
        std::optional<std::size_t> chosen;
        for (std::size_t i : order) {
            BoundClaim& c = claims_[i];
            if (!c.certificate)
                continue;
            if (chosen && claims_[*chosen].lower > c.lower)
                break;
            if (options_.certify) {
                try {
                    c.status = evaluate_certificate(ring_, *c.certificate, options_.max_terms).nonzero
                                   ? CertStatus::Verified
                                   : CertStatus::Failed;
                } catch (const BudgetExceeded&) {
                    c.status = CertStatus::OverBudget;
                }
                if (c.status == CertStatus::Failed)
                    continue;
            }
            // An over-budget claim stands unless an equally strong one verifies.
            if (!chosen || c.status == CertStatus::Verified)
                chosen = i;
            if (c.status != CertStatus::OverBudget)
                break;
        }
        if (chosen) {
            const BoundClaim& c = claims_[*chosen];
            r.lower = c.lower;
            r.method = c.method;
            r.status = c.status;
            r.certificate = c.certificate;
        }
        const int floor = (k_ - 1) * m_ + 1;
        if (r.lower < floor) {
            r.lower = floor;
            r.method = "product inequality";
            r.status = CertStatus::NotAttempted;
            r.certificate.reset();
        }
        r.claims = std::move(claims_);
        return r;
    }

private:
    const CohomologyRing& ring_;
    int k_;
    int m_;
    BoundsOptions options_;
    std::vector<BoundClaim> claims_;
};

HypothesisCheck hyp(std::string name, bool holds) { return {std::move(name), holds, true}; }
HypothesisCheck note(std::string name, bool holds) { return {std::move(name), holds, false}; }

bool r_power_nonzero(const CohomologyRing& ring) { return ring.phi_S(IndexSet{}); }

}  // namespace

TCBoundReport tc_bounds(const CohomologyRing& ring, int k, const BoundsOptions& options) {
    if (k < 1)
        throw std::invalid_argument("TC_k needs k >= 1");
    const int m = ring.m();
    const GeneticCode& code = ring.code();
    if (k == 1) {
        TCBoundReport r;
        r.code = code;
        r.k = 1;
        r.m = m;
        r.lower = r.upper = 1;
        r.method = "TC_1 = 1";
        return r;
    }
    if (k > kMaxTensorFactors)
        throw std::invalid_argument("k > " + std::to_string(kMaxTensorFactors) + " is not supported");
    if (options.max_terms == 0)
        throw std::invalid_argument("term budget must be positive");

    const CodeSignature sig = classify(code);
    Dispatcher dispatch(ring, k, options);
    std::vector<std::string> caveats;
    const bool pow2 = is_power_of_two(m);
    const bool r_nonzero = r_power_nonzero(ring);

    dispatch.add("categorical sandwich", {}, certificates::generic(ring, k));

    // Every gene of size two gives the size-2 argument.
    for (const auto& t : sig.templates) {
        if (t.kind != Template::Monogenic2 && t.kind != Template::HasGeneSize2)
            continue;
        const int a = t.params[0];
        if (t.kind == Template::Monogenic2) {
            dispatch.add("monogenic {a,n}, a=" + std::to_string(a), {},
                         certificates::size2_gene(code, k, m, false));
            dispatch.add("monogenic {a,n}, m a power of 2", {hyp("m = 2^t", pow2)},
                         certificates::size2_gene(code, k, m, true));
            caveats.push_back("sharp size-2 bound is stated for M_alpha; computed for the planar space");
        }
        // Any nonempty subgee S with phi(R^{m-|S|} V_S) = 1 will do; with
        // certification on, the first S whose product survives is used.
        std::optional<IndexSet> chosen;
        for (IndexSet s : ring.subgees().all()) {
            if (s.empty() || s.size() > m || !ring.phi_S(s))
                continue;
            if (!chosen)
                chosen = s;
            if (!options.certify)
                break;
            try {
                if (evaluate_certificate(ring, *certificates::gene_an(code, k, m, s), options.max_terms).nonzero) {
                    chosen = s;
                    break;
                }
            } catch (const BudgetExceeded&) {
                break;
            }
        }
        if (chosen)
            dispatch.add("gene {a,n}, a=" + std::to_string(a), {hyp("phi_S = 1 for S=" + chosen->to_string(), true)},
                         certificates::gene_an(code, k, m, *chosen));
        else
            dispatch.add("gene {a,n}", {hyp("nonempty S with phi_S = 1", false)}, std::nullopt);
    }

    auto add_r_power = [&](const std::string& name, std::vector<HypothesisCheck> hyps) {
        hyps.push_back(hyp("m = 2^t", pow2));
        hyps.push_back(hyp("R^m != 0", r_nonzero));
        dispatch.add(name, std::move(hyps), certificates::r_power(code, k, m));
    };

    for (const auto& t : sig.templates) {
        const auto& p = t.params;
        switch (t.kind) {
            case Template::Genes24A: {
                const int a = p[0];
                add_r_power("genes {2,4,n},{a,n}", {hyp("a >= 5", a >= 5), hyp("a odd", a % 2 == 1)});
                break;
            }
            case Template::Monogenic3: {
                const int a = p[0], b = p[1];
                const bool lemma = lemma_size3(a, b);
                add_r_power("size-3 gene, R^m != 0",
                            {note("parity lemma (size 3)", lemma), note("lemma agrees with phi(R^m)", lemma == r_nonzero)});
                dispatch.add("size-3 gene {a,a+b,n}", {hyp("n >= 6", code.n() >= 6), note(a % 2 == 0 ? "a even" : "a odd", true)},
                             certificates::size3(code, k, m, a, b));
                break;
            }
            case Template::Monogenic4: {
                const int a = p[0], b = p[1], c = p[2];
                const bool lemma = lemma_size4(a, b, c);
                add_r_power("size-4 gene, R^m != 0",
                            {note("parity lemma (size 4)", lemma), note("lemma agrees with phi(R^m)", lemma == r_nonzero)});
                if (lemma != r_nonzero)
                    caveats.push_back("size-4 parity lemma disagrees with the computed phi(R^m); the computed value is used");
                caveats.push_back("size-4 sharp bound is stated for M_alpha; computed for the planar space");
                const bool s1 = m > 4 && mod4(a) == 1 && mod4(b) == 1 && c % 2 == 1;
                const bool s2 = m > 3 && mod4(a) == 2 && mod4(b) == 0 && c % 2 == 1;
                dispatch.add("size-4 gene {a,a+b,a+b+c,n}",
                             {note("m > 4, a = b = 1 mod 4, c odd", s1),
                              note("m > 3, a = 2 mod 4, b = 0 mod 4, c odd", s2),
                              hyp("one of the two situations", s1 || s2)},
                             certificates::size4(code, k, m, a, b, c));
                break;
            }
            case Template::TwoSize3: {
                const int a = p[0], b = p[1], c = p[2], d = p[3];
                const bool lemma = lemma_two3genes(a, b, c, d);
                add_r_power("two size-3 genes, R^m != 0",
                            {note("parity lemma (two size-3 genes)", lemma),
                             note("lemma agrees with phi(R^m)", lemma == r_nonzero)});
                if (lemma != r_nonzero)
                    caveats.push_back(
                        "two-size-3 parity lemma disagrees with the computed phi(R^m); the computed value is used");
                bool split = false;
                for (int s = 1; (1 << s) + 2 <= m; ++s)
                    split = split || (m - (1 << s) <= (1 << s) + 1);
                dispatch.add("two size-3 genes", {hyp("m = 2^t + m', 2 <= m' <= 2^t + 1", split)},
                             certificates::two_size3(code, k, m, a, b, c));
                break;
            }
            case Template::Type1: {
                const int b = p[0], c = p[1], d = p[2];
                const bool e1 = mod4(b) == 1 && c % 2 == 1 && d % 2 == 0;
                const bool e2 = is_power_of_two(m - 1);
                const bool e3 = pow2 && mod4(b) == 2 && c % 2 == 1 && d % 2 == 0;
                if (e1 || e2 || e3)
                    caveats.push_back("type 1 exception case: the type-1 argument does not apply, no claim it fails");
                dispatch.add("type 1",
                             {hyp("not (b = 1 mod 4, c odd, d even)", !e1), hyp("m-1 not a power of 2", !e2),
                              hyp("not (m = 2^t, b = 2 mod 4, c odd, d even)", !e3)},
                             certificates::type1(code, k, m, b, c));
                break;
            }
            case Template::Type2: {
                const bool last = p[0] == 1;
                dispatch.add(last ? "type 2, code {3,4},{2,5},{1,6}" : "type 2", {hyp("m >= 4", m >= 4)},
                             certificates::type2(code, k, m, last));
                break;
            }
            default: break;
        }
    }
    std::sort(caveats.begin(), caveats.end());
    caveats.erase(std::unique(caveats.begin(), caveats.end()), caveats.end());
    return dispatch.finish(std::move(caveats));
}

}  // namespace polytc
