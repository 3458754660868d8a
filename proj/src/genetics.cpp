#include "polytc/genetics.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "exact_lp.hpp"

namespace polytc {

bool dominance_leq(IndexSet lhs, IndexSet rhs) {
    const std::vector<int> a = lhs.elements();
    const std::vector<int> b = rhs.elements();
    if (a.size() > b.size())
        return false;
    const std::size_t shift = b.size() - a.size();
    for (std::size_t s = 0; s < a.size(); ++s)
        if (a[s] > b[s + shift])
            return false;
    return true;
}

namespace {

bool canonical_less(IndexSet a, IndexSet b) {
    if (a.size() != b.size())
        return a.size() > b.size();
    return a.elements() > b.elements();
}

}  // namespace

GeneticCode::GeneticCode(int n, std::vector<IndexSet> genes) : n_(n), genes_(std::move(genes)) {
    if (n_ < 1 || n_ > 31)
        throw std::invalid_argument("genetic code needs 1 <= n <= 31");
    if (genes_.empty())
        throw std::invalid_argument("a genetic code has at least one gene");
    for (IndexSet g : genes_) {
        if (!g.contains(n_))
            throw std::invalid_argument("gene " + g.to_string() + " does not contain n=" + std::to_string(n_));
        if (g.max() > n_)
            throw std::invalid_argument("gene " + g.to_string() + " is not a subset of [n]");
    }
    for (std::size_t i = 0; i < genes_.size(); ++i)
        for (std::size_t j = 0; j < genes_.size(); ++j)
            if (i != j && dominance_leq(genes_[i], genes_[j]))
                throw std::invalid_argument("genes " + genes_[i].to_string() + " and " + genes_[j].to_string() +
                                            " are comparable; a genetic code is an antichain");
    std::sort(genes_.begin(), genes_.end(), canonical_less);
}

GeneticCode GeneticCode::parse(const std::string& text) {
    std::string body;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x80 || c == '<' || c == '>' || c == ' ' || c == '\t' || c == '\n')
            continue;  // angle brackets, including UTF-8 ones
        body += c;
    }
    std::vector<std::string> groups;
    if (body.find('{') != std::string::npos) {
        std::size_t pos = 0;
        while ((pos = body.find('{', pos)) != std::string::npos) {
            const std::size_t end = body.find('}', pos);
            if (end == std::string::npos)
                throw std::invalid_argument("unbalanced braces in genetic code: " + text);
            groups.push_back(body.substr(pos + 1, end - pos - 1));
            pos = end + 1;
        }
    } else {
        std::stringstream ss(body);
        std::string g;
        while (std::getline(ss, g, ';'))
            if (!g.empty())
                groups.push_back(g);
    }
    if (groups.empty())
        throw std::invalid_argument("empty genetic code: " + text);

    std::vector<IndexSet> genes;
    int n = 0;
    for (const auto& g : groups) {
        IndexSet gene;
        std::stringstream ss(g);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad gene element '" + item + "' in " + text);
            }
            if (used != item.size())
                throw std::invalid_argument("bad gene element '" + item + "' in " + text);
            gene.insert(v);
        }
        if (gene.empty())
            throw std::invalid_argument("empty gene in " + text);
        n = std::max(n, gene.max());
        genes.push_back(gene);
    }
    return GeneticCode(n, std::move(genes));
}

std::vector<IndexSet> GeneticCode::gees() const {
    std::vector<IndexSet> out;
    out.reserve(genes_.size());
    for (IndexSet g : genes_)
        out.push_back(g.without(n_));
    return out;
}

std::vector<int> GeneticCode::gene_sizes() const {
    std::vector<int> out;
    for (IndexSet g : genes_)
        out.push_back(g.size());
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool GeneticCode::covers(IndexSet s) const {
    const IndexSet j = s.with(n_);
    return std::any_of(genes_.begin(), genes_.end(), [&](IndexSet g) { return dominance_leq(j, g); });
}

std::string GeneticCode::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < genes_.size(); ++i) {
        if (i)
            s += ",";
        s += genes_[i].to_string();
    }
    return s + ">";
}

SubgeeFamily::SubgeeFamily(const GeneticCode& code) : n_(code.n()) {
    const std::uint32_t limit = 1U << (n_ - 1);
    lookup_.assign(limit, -1);
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (code.covers(IndexSet(mask)))
            sets_.emplace_back(mask);
    std::stable_sort(sets_.begin(), sets_.end(), [](IndexSet a, IndexSet b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.bits() < b.bits();
    });
    for (std::size_t i = 0; i < sets_.size(); ++i)
        lookup_[sets_[i].bits()] = static_cast<int>(i);
}

int SubgeeFamily::index_of(IndexSet s) const {
    if (s.bits() >= lookup_.size())
        return -1;
    return lookup_[s.bits()];
}

std::vector<IndexSet> SubgeeFamily::of_size(int k) const {
    std::vector<IndexSet> out;
    for (IndexSet s : sets_)
        if (s.size() == k)
            out.push_back(s);
    return out;
}

int SubgeeFamily::max_size() const { return sets_.empty() ? -1 : sets_.back().size(); }

SubgeeFamily subgees(const GeneticCode& code) { return SubgeeFamily(code); }

namespace {

using Row = std::vector<std::int64_t>;

/// 2*sum(J) < perimeter written as  sum(comp) - sum(J) >= 1, or its reverse.
Row short_row(int n, IndexSet j, bool is_short) {
    Row row(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::int64_t c = j.contains(i) ? -1 : 1;
        row[static_cast<std::size_t>(i - 1)] = is_short ? c : -c;
    }
    return row;
}

lp::Problem base_problem(int n) {
    lp::Problem p;
    p.vars = n;
    Row first(static_cast<std::size_t>(n), 0);
    first[0] = 1;
    p.add(first, 1);
    for (int i = 1; i < n; ++i) {
        Row r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        r[static_cast<std::size_t>(i - 1)] = -1;
        p.add(r, 0);
    }
    return p;
}

std::optional<std::vector<std::int64_t>> integer_point(const lp::Problem& p) {
    auto x = lp::solve(p);
    if (!x)
        return std::nullopt;
    using boost::multiprecision::cpp_int;
    cpp_int scale = 1;
    for (const auto& v : *x) {
        const cpp_int d = boost::multiprecision::denominator(v);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    std::vector<std::int64_t> out;
    for (const auto& v : *x) {
        const cpp_int value = boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v));
        if (value > INT64_MAX / 64)
            throw std::overflow_error("witness entries do not fit in 64 bits");
        out.push_back(static_cast<std::int64_t>(value));
    }
    return out;
}

/// Lower covers of J = S u {n} inside the sets containing n, as gee masks.
std::vector<std::uint32_t> lower_covers(std::uint32_t s, int n) {
    std::vector<std::uint32_t> out;
    const IndexSet set(s);
    if (set.contains(1))
        out.push_back(set.without(1).bits());
    for (int i = 2; i <= n - 1; ++i)
        if (set.contains(i) && !set.contains(i - 1))
            out.push_back(set.without(i).with(i - 1).bits());
    return out;
}

/// The short/long system for the down-set generated by the candidate genes.
lp::Problem code_problem(const GeneticCode& code) {
    const int n = code.n();
    lp::Problem p = base_problem(n);
    for (IndexSet g : code.genes())
        p.add(short_row(n, g, true), 1);
    const std::uint32_t limit = 1U << (n - 1);
    for (std::uint32_t s = 0; s < limit; ++s) {
        if (code.covers(IndexSet(s)))
            continue;
        const auto covers = lower_covers(s, n);
        const bool minimal = std::all_of(covers.begin(), covers.end(),
                                         [&](std::uint32_t c) { return code.covers(IndexSet(c)); });
        if (minimal)
            p.add(short_row(n, IndexSet(s).with(n), false), 1);
    }
    return p;
}

}  // namespace

Realization realizable(const GeneticCode& candidate) {
    lp::Problem p = code_problem(candidate);
    p.objective.assign(static_cast<std::size_t>(candidate.n()), 1);
    auto x = integer_point(p);
    if (!x)
        return {};
    LengthVector witness(*x);
    if (genetic_code(witness) != candidate)
        throw std::logic_error("realizability witness " + witness.to_string() + " does not reproduce " +
                               candidate.to_string());
    return {true, witness};
}

namespace {

constexpr std::size_t kMaxElements = 256;  // 2^(n-1) for n <= 9
using ElementSet = std::bitset<kMaxElements>;

class CodeEnumerator {
public:
    explicit CodeEnumerator(int n) : n_(n), count_(1U << (n - 1)) {
        order_.resize(count_);
        std::iota(order_.begin(), order_.end(), 0U);
        std::stable_sort(order_.begin(), order_.end(), [](std::uint32_t a, std::uint32_t b) {
            return IndexSet(a).sum() < IndexSet(b).sum();
        });
        below_.resize(count_);
        covers_.resize(count_);
        for (std::uint32_t e = 0; e < count_; ++e) {
            covers_[e] = lower_covers(e, n_);
            for (std::uint32_t f = 0; f < count_; ++f)
                if (dominance_leq(IndexSet(f), IndexSet(e)))
                    below_[e].set(f);
        }
    }

    std::vector<EnumeratedCode> run() {
        // {n} must be short, otherwise the space is empty.
        state_.assign(count_, 0);
        in_.reset();
        out_.reset();
        decide(0, true);
        lp::Problem p = problem();
        auto w = integer_point(p);
        if (!w)
            throw std::logic_error("no length vector makes {n} short");
        recurse(1, *w);
        std::sort(results_.begin(), results_.end(),
                  [](const EnumeratedCode& a, const EnumeratedCode& b) { return a.code < b.code; });
        return std::move(results_);
    }

private:
    void decide(std::uint32_t e, bool in) {
        state_[e] = in ? 1 : -1;
        (in ? in_ : out_).set(e);
    }
    void undo(std::uint32_t e) {
        in_.reset(e);
        out_.reset(e);
        state_[e] = 0;
    }

    lp::Problem problem() const {
        lp::Problem p = base_problem(n_);
        for (std::uint32_t e = 0; e < count_; ++e) {
            if (in_.test(e)) {
                bool maximal = true;
                for (std::uint32_t f = 0; f < count_ && maximal; ++f)
                    if (f != e && in_.test(f) && below_[f].test(e))
                        maximal = false;
                if (maximal)
                    p.add(short_row(n_, IndexSet(e).with(n_), true), 1);
            } else if (out_.test(e)) {
                if ((below_[e] & out_).count() == 1)
                    p.add(short_row(n_, IndexSet(e).with(n_), false), 1);
            }
        }
        return p;
    }

    int side(const std::vector<std::int64_t>& w, std::uint32_t e) const {
        std::int64_t total = 0;
        std::int64_t inside = w[static_cast<std::size_t>(n_ - 1)];
        for (int i = 0; i < n_; ++i)
            total += w[static_cast<std::size_t>(i)];
        for (int i : IndexSet(e).elements())
            inside += w[static_cast<std::size_t>(i - 1)];
        const std::int64_t diff = total - 2 * inside;
        return (diff > 0) - (diff < 0);  // +1 short, -1 long
    }

    void recurse(std::size_t pos, const std::vector<std::int64_t>& witness) {
        if (pos == count_) {
            emit();
            return;
        }
        const std::uint32_t e = order_[pos];
        const bool forced_out = std::any_of(covers_[e].begin(), covers_[e].end(),
                                            [&](std::uint32_t c) { return state_[c] < 0; });
        if (forced_out) {
            decide(e, false);
            recurse(pos + 1, witness);
            undo(e);
            return;
        }
        const int s = side(witness, e);
        if (s != 0) {
            const bool first_in = s > 0;
            decide(e, first_in);
            recurse(pos + 1, witness);
            undo(e);
            decide(e, !first_in);
            if (auto w = integer_point(problem()))
                recurse(pos + 1, *w);
            undo(e);
        } else {
            for (bool in : {true, false}) {
                decide(e, in);
                if (auto w = integer_point(problem()))
                    recurse(pos + 1, *w);
                undo(e);
            }
        }
    }

    void emit() {
        std::vector<IndexSet> genes;
        for (std::uint32_t e = 0; e < count_; ++e) {
            if (!in_.test(e))
                continue;
            bool maximal = true;
            for (std::uint32_t f = 0; f < count_ && maximal; ++f)
                if (f != e && in_.test(f) && below_[f].test(e))
                    maximal = false;
            if (maximal)
                genes.push_back(IndexSet(e).with(n_));
        }
        GeneticCode code(n_, std::move(genes));
        Realization r = realizable(code);
        if (!r.realizable)
            throw std::logic_error("enumerated code " + code.to_string() + " failed its realizability check");
        results_.push_back(EnumeratedCode{std::move(code), *r.witness, CodeSignature{}});
    }

    int n_;
    std::uint32_t count_;
    std::vector<std::uint32_t> order_;
    std::vector<ElementSet> below_;
    std::vector<std::vector<std::uint32_t>> covers_;
    std::vector<signed char> state_;
    ElementSet in_;
    ElementSet out_;
    std::vector<EnumeratedCode> results_;
};

}  // namespace

std::vector<EnumeratedCode> enumerate_genetic_codes_uncached(int n) {
    if (n < kMinEnumerateN || n > kMaxEnumerateN)
        throw std::out_of_range("genetic code enumeration supports " + std::to_string(kMinEnumerateN) +
                                " <= n <= " + std::to_string(kMaxEnumerateN) + ", got " + std::to_string(n));
    return CodeEnumerator(n).run();
}

const std::vector<EnumeratedCode>& enumerate_genetic_codes(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<EnumeratedCode>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto codes = enumerate_genetic_codes_uncached(n);
    for (auto& c : codes)
        c.signature = classify(c.code);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(codes)).first->second;
}

namespace {

using GeeFamily = std::vector<IndexSet>;

GeeFamily sorted_gees(const GeneticCode& code) {
    GeeFamily g = code.gees();
    std::sort(g.begin(), g.end());
    return g;
}

const std::set<GeeFamily>& n7_catalog() {
    static const std::set<GeeFamily> catalog = [] {
        std::set<GeeFamily> out;
        for (const auto& c : enumerate_genetic_codes_uncached(7))
            out.insert(sorted_gees(c.code));
        return out;
    }();
    return catalog;
}

bool is_type2_size_pattern(const std::vector<int>& sizes) {
    static const std::vector<std::vector<int>> patterns = {{4, 3}, {3, 3, 3}, {4, 3, 3}, {4, 3, 3, 3}};
    return std::find(patterns.begin(), patterns.end(), sizes) != patterns.end();
}

}  // namespace

bool gees_occur_at_n7(const GeneticCode& code) { return n7_catalog().count(sorted_gees(code)) > 0; }

std::string to_string(Template t) {
    switch (t) {
        case Template::Point: return "point";
        case Template::Monogenic2: return "monogenic-2";
        case Template::Monogenic3: return "monogenic-3";
        case Template::Monogenic4: return "monogenic-4";
        case Template::HasGeneSize2: return "has-gene-size-2";
        case Template::Genes24A: return "genes-24-a";
        case Template::TwoSize3: return "two-size-3";
        case Template::Type1: return "type-1";
        case Template::Type2: return "type-2";
    }
    return "?";
}

std::optional<TemplateMatch> CodeSignature::find(Template kind) const {
    for (const auto& t : templates)
        if (t.kind == kind)
            return t;
    return std::nullopt;
}

std::string CodeSignature::sizes_string() const {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(sizes[i]);
    }
    return s;
}

CodeSignature classify(const GeneticCode& code) {
    CodeSignature sig;
    sig.sizes = code.gene_sizes();
    const int n = code.n();
    const auto& genes = code.genes();

    sig.type1 = genes.size() == 2 && genes[0].contains(1) && genes[1].contains(1) && n > 1;
    sig.type2 = !sig.type1 && n >= 7 && is_type2_size_pattern(sig.sizes) && gees_occur_at_n7(code);

    auto elems = [](IndexSet g) { return g.elements(); };
    if (genes.size() == 1) {
        const auto e = elems(genes[0]);
        switch (e.size()) {
            case 1: sig.templates.push_back({Template::Point, {}}); break;
            case 2: sig.templates.push_back({Template::Monogenic2, {e[0]}}); break;
            case 3: sig.templates.push_back({Template::Monogenic3, {e[0], e[1] - e[0]}}); break;
            case 4:
                sig.templates.push_back({Template::Monogenic4, {e[0], e[1] - e[0], e[2] - e[1]}});
                break;
            default: break;
        }
    } else {
        for (IndexSet g : genes)
            if (g.size() == 2)
                sig.templates.push_back({Template::HasGeneSize2, {g.min()}});
        if (genes.size() == 2 && genes[0] == IndexSet{2, 4, n} && genes[1].size() == 2)
            sig.templates.push_back({Template::Genes24A, {genes[1].min()}});
        if (genes.size() == 2 && genes[0].size() == 3 && genes[1].size() == 3) {
            const auto x = elems(genes[0]);
            const auto y = elems(genes[1]);
            if (y[0] < x[0] && x[1] < y[1])
                sig.templates.push_back({Template::TwoSize3, {y[0], x[0] - y[0], x[1] - x[0], y[1] - x[1]}});
        }
        if (sig.type1 && genes[0].size() == 4 && genes[1].size() == 3) {
            const auto x = elems(genes[0]);
            const auto y = elems(genes[1]);
            if (x[0] == 1 && y[0] == 1 && y[1] > x[2])
                sig.templates.push_back({Template::Type1, {x[1] - 1, x[2] - x[1], y[1] - x[2]}});
        }
        if (sig.type2) {
            const GeeFamily last = {IndexSet{1, 6}, IndexSet{2, 5}, IndexSet{3, 4}};
            GeeFamily mine = sorted_gees(code);
            GeeFamily last_sorted = last;
            std::sort(last_sorted.begin(), last_sorted.end());
            sig.templates.push_back({Template::Type2, {mine == last_sorted ? 1 : 0}});
        }
    }
    return sig;
}

}  // namespace polytc
