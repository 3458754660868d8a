// Acceptance run: one PASS/FAIL line per criterion, with the evidence for
// every failure.  Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polytc/bounds.hpp"
#include "polytc/io.hpp"
#include "polytc/table1.hpp"

using namespace polytc;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 25)
            notes.push_back(why);
    }
    void check(bool ok, const std::string& why) {
        if (!ok)
            fail(why);
    }
};

// Realizable template instances with 5 <= n <= 10.
std::vector<std::pair<GeneticCode, std::vector<int>>> instances(Template kind) {
    std::vector<std::pair<GeneticCode, std::vector<int>>> out;
    for (int n = 5; n <= 10; ++n) {
        auto add = [&](std::vector<IndexSet> genes, std::vector<int> params) {
            try {
                GeneticCode code(n, std::move(genes));
                if (realizable(code).realizable)
                    out.emplace_back(code, std::move(params));
            } catch (const std::invalid_argument&) {
            }
        };
        for (int a = 1; a < n; ++a)
            for (int b = 1; a + b < n; ++b) {
                if (kind == Template::Monogenic3)
                    add({IndexSet{a, a + b, n}}, {a, b});
                for (int c = 1; a + b + c < n; ++c) {
                    if (kind == Template::Monogenic4)
                        add({IndexSet{a, a + b, a + b + c, n}}, {a, b, c});
                    for (int d = 1; a + b + c + d < n; ++d)
                        if (kind == Template::TwoSize3)
                            add({IndexSet{a + b, a + b + c, n}, IndexSet{a, a + b + c + d, n}}, {a, b, c, d});
                }
            }
    }
    return out;
}

Outcome table1_reproduction() {
    Outcome o;
    for (int n = 5; n <= 8; ++n)
        for (const auto& row : shape_counts(n, enumerate_genetic_codes(n)))
            if (row.published)
                o.check(row.matches(), "n=" + std::to_string(n) + " row '" + row.label + "': enumerated " +
                                           std::to_string(row.count) + ", published " +
                                           std::to_string(*row.published));
    // Show the codes behind the mismatching size-4 cell at n = 7.
    for (const auto& e : enumerate_genetic_codes(7))
        if (in_shape_row("4", e) && o.notes.size() < 25)
            o.notes.push_back("  n=7 size-4 code " + e.code.to_string() + " witness " + e.witness.to_string());
    return o;
}

Outcome ring_sanity() {
    Outcome o;
    std::size_t codes = 0;
    for (int n = 4; n <= 8; ++n)
        for (const auto& e : enumerate_genetic_codes(n)) {
            ++codes;
            const CohomologyRing ring(e.code);
            const int m = ring.m();
            const std::string c = e.code.to_string();
            o.check(ring.dim(0) == 1 && ring.dim(m) == 1 && ring.dim(m + 1) == 0, c + ": bad end dimensions");
            for (int d = 0; d <= m; ++d)
                o.check(ring.pairing_nondegenerate(d), c + ": degenerate pairing in degree " + std::to_string(d));
            o.check(cup_length(ring).length == m, c + ": cup length differs from m");
            o.check(ls_category(ring) == m + 1, c + ": category differs from m+1");
        }
    o.notes.push_back("checked " + std::to_string(codes) + " codes");
    return o;
}

Outcome phi_formulas() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& [code, p] : instances(Template::Monogenic3)) {
        const CohomologyRing ring(code);
        const int a = p[0], b = p[1];
        const std::string c = code.to_string();
        ++count;
        if (a >= 2)
            o.check(ring.phi_S(IndexSet{1, 2}), c + ": phi_11 != 1");
        o.check(ring.phi_S(IndexSet{1, a + 1}), c + ": phi_12 != 1");
        o.check(ring.phi_S(IndexSet{a + 1}) == ((a - 1) % 2 == 1), c + ": phi_2 != a-1");
        o.check(ring.phi_S(IndexSet{1}) == ((a + b) % 2 == 1), c + ": phi_1 != a+b");
        o.check(ring.phi_S(IndexSet{}) == phi0_size3(a, b), c + ": phi_0 formula");
    }
    for (const auto& [code, p] : instances(Template::Monogenic4)) {
        const CohomologyRing ring(code);
        ++count;
        o.check(ring.phi_S(IndexSet{}) == phi0_size4(p[0], p[1], p[2]), code.to_string() + ": phi_0 formula");
    }
    for (const auto& [code, p] : instances(Template::TwoSize3)) {
        const CohomologyRing ring(code);
        ++count;
        o.check(ring.phi_S(IndexSet{}) == phi0_two3genes(p[0], p[1], p[2], p[3]),
                code.to_string() + ": phi_0 formula");
    }
    o.notes.push_back("checked " + std::to_string(count) + " realizable instances");
    return o;
}

Outcome parity_lemmas() {
    Outcome o;
    struct Tally {
        const char* name;
        std::size_t total = 0, disagree = 0;
    };
    Tally t3{"size 3"}, t4{"size 4"}, t33{"two size-3 genes"};
    auto record = [&](Tally& t, const GeneticCode& code, const std::vector<int>& p, bool lemma, bool direct) {
        ++t.total;
        if (lemma != direct) {
            ++t.disagree;
            std::ostringstream s;
            s << t.name << " lemma " << lemma << " vs phi(R^m) " << direct << " at " << code.to_string() << " (params";
            for (int x : p)
                s << ' ' << x;
            s << ")";
            o.fail(s.str());
        }
    };
    for (const auto& [code, p] : instances(Template::Monogenic3))
        if (code.n() >= 6)
            record(t3, code, p, lemma_size3(p[0], p[1]), CohomologyRing(code).phi_S(IndexSet{}));
    for (const auto& [code, p] : instances(Template::Monogenic4))
        record(t4, code, p, lemma_size4(p[0], p[1], p[2]), CohomologyRing(code).phi_S(IndexSet{}));
    for (const auto& [code, p] : instances(Template::TwoSize3))
        record(t33, code, p, lemma_two3genes(p[0], p[1], p[2], p[3]), CohomologyRing(code).phi_S(IndexSet{}));
    for (const Tally* t : {&t3, &t4, &t33})
        o.notes.push_back(std::string(t->name) + ": " + std::to_string(t->disagree) + " disagreements out of " +
                          std::to_string(t->total));
    return o;
}

Outcome desk_certificates() {
    Outcome o;
    for (int a = 1; a <= 4; ++a) {
        const GeneticCode code(7, {IndexSet{a, 7}});
        const CohomologyRing ring(code);
        for (int k = 2; k <= 4; ++k) {
            const auto plain = *certificates::size2_gene(code, k, 4, false);
            const auto sharp = *certificates::size2_gene(code, k, 4, true);
            const std::string c = code.to_string() + " k=" + std::to_string(k);
            o.check(plain.length == 4 * k - k / 2, c + ": plain length");
            o.check(sharp.length == 4 * k - 1, c + ": sharp length");
            o.check(evaluate_certificate(ring, plain).nonzero, c + ": plain certificate vanishes");
            o.check(evaluate_certificate(ring, sharp).nonzero, c + ": sharp certificate vanishes");
        }
    }
    const GeneticCode g(7, {IndexSet{2, 4, 7}, IndexSet{5, 7}});
    o.check(realizable(g).realizable, g.to_string() + " not realizable");
    const CohomologyRing ring(g);
    o.check(ring.phi_S(IndexSet{}), g.to_string() + ": R^m = 0");
    for (int k = 2; k <= 4; ++k) {
        const auto c = *certificates::r_power(g, k, 4);
        o.check(c.length == 4 * k - 1 && evaluate_certificate(ring, c).nonzero,
                g.to_string() + " k=" + std::to_string(k) + ": R-bar certificate");
    }
    return o;
}

bool phi_or_zero(const CohomologyRing& ring, IndexSet s) {
    return ring.subgees().contains(s) && s.size() <= ring.m() && ring.phi_S(s);
}

Outcome type2_psi() {
    Outcome o;
    int first = 0, last = 0;
    for (const auto& e : enumerate_genetic_codes(7)) {
        const auto t = e.signature.find(Template::Type2);
        if (!t)
            continue;
        const CohomologyRing ring(e.code);
        const bool is_last = t->params[0] == 1;
        const std::string c = e.code.to_string();
        PsiConstraints want;
        want.pairing_targets.push_back(*certificates::type2(e.code, 2, ring.m(), is_last));
        if (is_last) {
            ++last;
            want.support = std::vector<IndexSet>{IndexSet{1}, IndexSet{1, 6}};
            for (IndexSet s : ring.subgees().all())
                if (s.size() == 2)
                    o.check(ring.phi_S(s), c + ": phi of pair " + s.to_string() + " is 0");
            o.check(!phi_or_zero(ring, IndexSet{1, 2, 3}), c + ": phi_123 != 0");
        } else {
            ++first;
            want.fixed = {{IndexSet{1}, true}, {IndexSet{2, 3}, false}, {IndexSet{1, 2, 3}, false}};
            o.check(phi_or_zero(ring, IndexSet{1, 2, 3}), c + ": phi_123 != 1");
            o.check(!phi_or_zero(ring, IndexSet{1, 3}), c + ": phi_13 != 0");
            o.check(!phi_or_zero(ring, IndexSet{2, 3}), c + ": phi_23 != 0");
        }
        const auto sol = solve_psi(ring, want);
        o.check(sol.has_value(), c + ": no psi");
        if (sol) {
            const TensorPower tp(ring, 2);
            o.check(phi_psi(tp, certificate_product(tp, want.pairing_targets[0]), *sol), c + ": (phi x psi) != 1");
            if (is_last)
                for (const auto& [s, v] : sol->values)
                    o.check(!v || s == IndexSet{1} || s == IndexSet{1, 6}, c + ": psi nonzero on " + s.to_string());
        }
        for (int k = 2; k <= 3; ++k) {
            const auto cert = *certificates::type2(e.code, k, ring.m(), is_last);
            o.check(cert.length == 4 * k - k / 2 && evaluate_certificate(ring, cert).nonzero,
                    c + " k=" + std::to_string(k) + ": certificate");
        }
    }
    o.check(first == 26 && last == 1, "expected 26 + 1 Type 2 codes, found " + std::to_string(first) + " + " +
                                          std::to_string(last));
    return o;
}

Outcome small_oracles() {
    Outcome o;
    const CohomologyRing circle(GeneticCode(4, {IndexSet{4}}));
    for (int k = 2; k <= 5; ++k) {
        const ZclSearch z = zcl_lower_bound(circle, k);
        o.check(z.exhaustive && z.length == k - 1,
                "<{4}> k=" + std::to_string(k) + ": zcl " + std::to_string(z.length));
        o.check(tc_bounds(circle, k).lower == k, "<{4}>: TC_k lower bound is not k");
    }
    for (int n = 4; n <= 10; ++n) {
        const CohomologyRing ring(GeneticCode(n, {IndexSet{n}}));
        for (int d = 0; d <= ring.m(); ++d)
            o.check(ring.dim(d) == 1 && ring.basis(d)[0] == Monomial{d, IndexSet{}},
                    "<{" + std::to_string(n) + "}>: degree " + std::to_string(d));
        o.check(ring.dim(ring.m() + 1) == 0, "<{n}>: nonzero above the top degree");
        for (int i = 1; i < n; ++i)
            o.check(ring.V(i).is_zero(), "<{n}>: V_i != 0");
    }
    return o;
}

Outcome report_properties() {
    Outcome o;
    std::size_t reports = 0, verified = 0;
    for (int n = 4; n <= 8; ++n)
        for (const auto& e : enumerate_genetic_codes(n)) {
            const CohomologyRing ring(e.code);
            const int m = ring.m();
            int prev = 0;
            for (int k = 2; k <= 5; ++k) {
                const auto r = tc_bounds(ring, k);
                ++reports;
                const std::string c = e.code.to_string() + " k=" + std::to_string(k);
                o.check(r.lower <= r.upper, c + ": lower > upper");
                o.check(r.lower >= (k - 1) * m + 1, c + ": below (k-1)m+1");
                o.check(r.upper == k * m + 1, c + ": upper != km+1");
                o.check(r.lower >= prev, c + ": not monotone in k");
                prev = r.lower;
                if (r.status == CertStatus::Verified && r.certificate) {
                    const Certificate back =
                        io::certificate_from_json(io::json::parse(io::to_json(*r.certificate).dump()));
                    const bool again = evaluate_certificate(ring, back).nonzero;
                    o.check(again && back.length + 1 == r.lower, c + ": stored certificate does not re-verify");
                    verified += again ? 1 : 0;
                }
            }
        }
    o.notes.push_back(std::to_string(reports) + " reports, " + std::to_string(verified) +
                      " certificates re-verified from JSON");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 Table 1 reproduction (n = 5..8)", table1_reproduction},
        {"2 ring sanity for every code with n <= 8", ring_sanity},
        {"3 closed-form phi values (n <= 10)", phi_formulas},
        {"4 parity lemmas vs phi(R^m) (n <= 10)", parity_lemmas},
        {"5 desk-scale certificates", desk_certificates},
        {"6 Type 2 psi solutions and certificates (n = 7)", type2_psi},
        {"7 small-space oracles", small_oracles},
        {"8 bound report properties and certificate round trip", report_properties},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %s  (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs);
        for (const auto& note : o.notes)
            std::printf("      %s\n", note.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
