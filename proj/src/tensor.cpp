#include "polytc/tensor.hpp"

#include <algorithm>
#include <functional>

namespace polytc {

namespace {

void sort_cancel(std::vector<TensorKey>& keys) {
    std::sort(keys.begin(), keys.end());
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        if ((j - i) % 2 == 1)
            keys[out++] = keys[i];
        i = j;
    }
    keys.resize(out);
}

}  // namespace

TensorClass& TensorClass::operator+=(const TensorClass& other) {
    if (k_ != other.k_)
        throw std::invalid_argument("adding tensor classes with different k");
    std::vector<TensorKey> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

TensorPower::TensorPower(const CohomologyRing& ring, int k, std::size_t max_terms)
    : ring_(&ring), k_(k), max_terms_(max_terms) {
    if (k < 1 || k > kMaxTensorFactors)
        throw std::invalid_argument("tensor powers need 1 <= k <= " + std::to_string(kMaxTensorFactors));
    if (max_terms == 0)
        throw std::invalid_argument("term budget must be positive");
    std::size_t next = 0;
    for (int d = 0; d <= ring.m(); ++d) {
        offset_.push_back(next);
        for (int b = 0; b < ring.dim(d); ++b) {
            degree_of_.push_back(d);
            local_.push_back(static_cast<std::uint16_t>(b));
        }
        next += static_cast<std::size_t>(ring.dim(d));
    }
    if (next > 0xFFFF)
        throw std::invalid_argument("ring too large for 16-bit tensor keys");
}

void TensorPower::check_pos(int j) const {
    if (j < 1 || j > k_)
        throw std::out_of_range("tensor position " + std::to_string(j) + " outside [1, " + std::to_string(k_) + "]");
}

TensorClass TensorPower::normalize(std::vector<TensorKey> keys) const {
    sort_cancel(keys);
    if (keys.size() > max_terms_)
        throw BudgetExceeded("tensor product has " + std::to_string(keys.size()) + " terms, budget " +
                             std::to_string(max_terms_));
    return TensorClass(k_, std::move(keys));
}

TensorClass TensorPower::one() const { return TensorClass(k_, {TensorKey{}}); }

TensorClass TensorPower::embed(int j, const CohoClass& x) const {
    check_pos(j);
    std::vector<TensorKey> keys;
    if (x.degree() <= ring_->m())
        for (std::size_t b : x.coords().ones()) {
            TensorKey key{};
            key[static_cast<std::size_t>(j - 1)] = id(x.degree(), b);
            keys.push_back(key);
        }
    return normalize(std::move(keys));
}

TensorClass TensorPower::bar(int j, Generator g, std::optional<int> with) const {
    const int partner = with.value_or(j - 1);
    if (!with && j < 2)
        throw std::out_of_range("bar needs position >= 2");
    check_pos(j);
    check_pos(partner);
    if (partner == j)
        throw std::invalid_argument("bar partner must differ from its position");
    return linear({{j, g}, {partner, g}});
}

TensorClass TensorPower::linear(const LinearForm& form) const { return multiply(one(), form); }

TensorClass TensorPower::pure(const std::vector<CohoClass>& factors) const {
    if (static_cast<int>(factors.size()) != k_)
        throw std::invalid_argument("pure tensor needs exactly k factors");
    TensorClass out = one();
    for (int j = 1; j <= k_; ++j)
        out = multiply(out, embed(j, factors[static_cast<std::size_t>(j - 1)]));
    return out;
}

TensorClass TensorPower::multiply(const TensorClass& x, const LinearForm& form) const {
    for (const auto& t : form) {
        check_pos(t.pos);
        if (t.gen < 0 || t.gen >= ring_->n())
            throw std::out_of_range("generator index " + std::to_string(t.gen) + " outside [0, n-1]");
    }
    std::vector<TensorKey> keys;
    for (const TensorKey& key : x.terms()) {
        for (const auto& t : form) {
            const auto p = static_cast<std::size_t>(t.pos - 1);
            const int d = degree_of_[key[p]];
            for (std::uint16_t b : ring_->times_generator(d, t.gen, local_[key[p]])) {
                TensorKey next = key;
                next[p] = id(d + 1, b);
                keys.push_back(next);
            }
        }
        if (keys.size() > 4 * max_terms_)
            sort_cancel(keys);
        if (keys.size() > 4 * max_terms_)
            throw BudgetExceeded("tensor product exceeded " + std::to_string(max_terms_) + " terms");
    }
    return normalize(std::move(keys));
}

TensorClass TensorPower::multiply(const TensorClass& x, const TensorClass& y) const {
    if (x.k() != k_ || y.k() != k_)
        throw std::invalid_argument("tensor classes from a different power");
    std::vector<TensorKey> keys;
    for (const TensorKey& a : x.terms()) {
        for (const TensorKey& b : y.terms()) {
            // Expand position by position.
            std::vector<TensorKey> partial{TensorKey{}};
            for (int j = 0; j < k_ && !partial.empty(); ++j) {
                const auto p = static_cast<std::size_t>(j);
                const int da = degree_of_[a[p]];
                const int db = degree_of_[b[p]];
                const auto prod = ring_->basis_product(da, local_[a[p]], db, local_[b[p]]);
                std::vector<TensorKey> next;
                for (const TensorKey& key : partial)
                    for (std::uint16_t c : prod) {
                        TensorKey extended = key;
                        extended[p] = id(da + db, c);
                        next.push_back(extended);
                    }
                partial = std::move(next);
            }
            keys.insert(keys.end(), partial.begin(), partial.end());
        }
        if (keys.size() > 4 * max_terms_)
            sort_cancel(keys);
        if (keys.size() > 4 * max_terms_)
            throw BudgetExceeded("tensor product exceeded " + std::to_string(max_terms_) + " terms");
    }
    return normalize(std::move(keys));
}

TensorClass TensorPower::power(const TensorClass& x, int e) const {
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    TensorClass out = one();
    for (int i = 0; i < e; ++i)
        out = multiply(out, x);
    return out;
}

std::vector<int> TensorPower::multidegree(const TensorKey& key) const {
    std::vector<int> out;
    for (int j = 0; j < k_; ++j)
        out.push_back(degree_of_[key[static_cast<std::size_t>(j)]]);
    return out;
}

int TensorPower::total_degree(const TensorKey& key) const {
    int total = 0;
    for (int d : multidegree(key))
        total += d;
    return total;
}

CohoClass TensorPower::diagonal(const TensorClass& x) const {
    if (x.is_zero())
        return ring_->zero(0);
    CohoClass out = ring_->zero(total_degree(x.terms().front()));
    for (const TensorKey& key : x.terms()) {
        CohoClass prod = ring_->one();
        for (int j = 0; j < k_; ++j) {
            const auto id_j = key[static_cast<std::size_t>(j)];
            prod = ring_->multiply(prod, ring_->basis_class(degree_of_[id_j], local_[id_j]));
        }
        if (prod.degree() != out.degree())
            throw std::invalid_argument("diagonal of an inhomogeneous tensor class");
        out += prod;
    }
    return out;
}

std::vector<Monomial> TensorPower::factors(const TensorKey& key) const {
    std::vector<Monomial> out;
    for (int j = 0; j < k_; ++j) {
        const auto id_j = key[static_cast<std::size_t>(j)];
        out.push_back(ring_->basis(degree_of_[id_j])[local_[id_j]]);
    }
    return out;
}

std::string TensorPower::to_string(const TensorClass& x, std::size_t max_terms) const {
    if (x.is_zero())
        return "0";
    std::string out;
    std::size_t shown = 0;
    for (const TensorKey& key : x.terms()) {
        if (shown == max_terms) {
            out += " + ... (" + std::to_string(x.size()) + " terms)";
            break;
        }
        if (shown++)
            out += " + ";
        const auto f = factors(key);
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (j)
                out += "(x)";
            out += f[j].to_string();
        }
    }
    return out;
}

std::string generator_name(Generator g) { return g == 0 ? "R" : "V" + std::to_string(g); }

Generator parse_generator(const std::string& name, int n) {
    if (name == "R")
        return 0;
    std::string digits;
    if (name.size() >= 2 && name[0] == 'V')
        digits = name.substr(name[1] == '_' ? 2 : 1);
    Generator g = -1;
    try {
        std::size_t used = 0;
        g = std::stoi(digits, &used);
        if (used != digits.size())
            g = -1;
    } catch (const std::exception&) {
        g = -1;
    }
    if (g < 1 || g >= n)
        throw std::invalid_argument("unknown generator '" + name + "' (expected R or V1..V" + std::to_string(n - 1) + ")");
    return g;
}

LinearForm CertificateFactor::form() const {
    switch (kind) {
        case Kind::Embed: return {{pos, gen}};
        case Kind::Bar: return {{pos, gen}, {with.value_or(pos - 1), gen}};
        case Kind::Sum: return terms;
    }
    return {};
}

std::string CertificateFactor::to_string() const {
    std::string base;
    switch (kind) {
        case Kind::Embed: base = generator_name(gen) + "_" + std::to_string(pos); break;
        case Kind::Bar:
            base = "bar(" + generator_name(gen) + "_" + std::to_string(pos);
            if (with)
                base += "+" + generator_name(gen) + "_" + std::to_string(*with);
            base += ")";
            break;
        case Kind::Sum:
            base = "(";
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i)
                    base += "+";
                base += generator_name(terms[i].gen) + "_" + std::to_string(terms[i].pos);
            }
            base += ")";
            break;
    }
    return exp == 1 ? base : base + "^" + std::to_string(exp);
}

int Certificate::computed_length() const {
    int total = 0;
    for (const auto& f : factors)
        if (f.is_zero_divisor())
            total += f.exp;
    return total;
}

std::string Certificate::to_string() const {
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty())
            out += " ";
        out += f.to_string();
    }
    return out.empty() ? "1" : out;
}

CertificateResult evaluate_certificate(const CohomologyRing& ring, const Certificate& cert, std::size_t max_terms) {
    if (cert.code != ring.code())
        throw std::invalid_argument("certificate is for " + cert.code.to_string() + " but the ring is for " +
                                    ring.code().to_string());
    if (cert.k < 1 || cert.k > kMaxTensorFactors)
        throw std::invalid_argument("certificate k outside [1, " + std::to_string(kMaxTensorFactors) + "]");
    if (cert.length != cert.computed_length())
        throw std::invalid_argument("certificate claims length " + std::to_string(cert.length) +
                                    " but its zero-divisor exponents sum to " + std::to_string(cert.computed_length()));
    TensorPower tp(ring, cert.k, max_terms);
    for (const auto& f : cert.factors) {
        if (f.exp < 0)
            throw std::invalid_argument("negative exponent in factor " + f.to_string());
        const LinearForm form = f.form();
        if (form.empty())
            throw std::invalid_argument("empty factor");
        for (const auto& t : form) {
            if (t.pos < 1 || t.pos > cert.k)
                throw std::invalid_argument("factor " + f.to_string() + " has position outside [1, k]");
            if (t.gen < 0 || t.gen >= ring.n())
                throw std::invalid_argument("factor " + f.to_string() + " uses a generator outside the ring");
        }
        if (f.kind == CertificateFactor::Kind::Bar && form[0].pos == form[1].pos)
            throw std::invalid_argument("bar factor " + f.to_string() + " pairs a position with itself");
        if (f.is_zero_divisor()) {
            CohoClass image = ring.zero(1);
            for (const auto& t : form)
                image += ring.gen(t.gen);
            if (!image.is_zero())
                throw std::invalid_argument("factor " + f.to_string() + " is not a zero divisor");
        }
    }

    const TensorClass acc = certificate_product(tp, cert);
    CertificateResult result;
    result.terms = acc.size();
    result.nonzero = !acc.is_zero();
    if (result.nonzero)
        result.witness_multidegree = tp.multidegree(acc.terms().front());
    return result;
}

TensorClass certificate_product(const TensorPower& tp, const Certificate& cert) {
    if (tp.k() != cert.k)
        throw std::invalid_argument("certificate k does not match the tensor power");
    TensorClass acc = tp.one();
    for (const auto& f : cert.factors) {
        const LinearForm form = f.form();
        for (int e = 0; e < f.exp && !acc.is_zero(); ++e)
            acc = tp.multiply(acc, form);
        if (acc.is_zero())
            break;
    }
    return acc;
}

namespace {

CertificateFactor factor_from_form(const LinearForm& form) {
    CertificateFactor f;
    if (form.size() == 2 && form[0].gen == form[1].gen) {
        f.kind = CertificateFactor::Kind::Bar;
        f.gen = form[0].gen;
        const int hi = std::max(form[0].pos, form[1].pos);
        const int lo = std::min(form[0].pos, form[1].pos);
        f.pos = hi;
        if (lo != hi - 1)
            f.with = lo;
    } else {
        f.kind = CertificateFactor::Kind::Sum;
        f.terms = form;
    }
    return f;
}

}  // namespace

ZclSearch zcl_lower_bound(const CohomologyRing& ring, int k, std::size_t node_budget, int max_exhaustive_rank) {
    if (k < 2)
        throw std::invalid_argument("zero-divisor cup length needs k >= 2");
    if (node_budget == 0)
        throw std::invalid_argument("search budget must be positive");
    TensorPower tp(ring, k);

    // Degree-one basis monomials are R or a single V_i, i.e. generators.
    std::vector<Generator> h1;
    for (const Monomial& mono : ring.basis(1))
        h1.push_back(mono.s.empty() ? 0 : mono.s.min());

    const int rank = (k - 1) * static_cast<int>(h1.size());
    const bool full = rank <= max_exhaustive_rank;
    std::vector<LinearForm> pool;
    if (full) {
        // Kernel of the diagonal: position 1 carries minus the sum of the others.
        for (std::uint32_t c = 1; c < (1U << rank); ++c) {
            LinearForm form;
            std::vector<int> parity(h1.size(), 0);
            for (int bit = 0; bit < rank; ++bit) {
                if (!(c >> bit & 1U))
                    continue;
                const int pos = 2 + bit / static_cast<int>(h1.size());
                const auto b = static_cast<std::size_t>(bit % static_cast<int>(h1.size()));
                form.push_back({pos, h1[b]});
                parity[b] ^= 1;
            }
            for (std::size_t b = 0; b < h1.size(); ++b)
                if (parity[b])
                    form.push_back({1, h1[b]});
            std::sort(form.begin(), form.end(), [](const LinearTerm& x, const LinearTerm& y) {
                return std::pair(x.pos, x.gen) < std::pair(y.pos, y.gen);
            });
            pool.push_back(std::move(form));
        }
    } else {
        for (Generator g = 0; g < ring.n(); ++g) {
            if (ring.gen(g).is_zero())
                continue;
            for (int j = 2; j <= k; ++j)
                pool.push_back({{j, g}, {j - 1, g}});
        }
    }

    ZclSearch result;
    result.certificate.code = ring.code();
    result.certificate.k = k;
    const int ceiling = k * ring.m();
    std::vector<std::size_t> stack;
    std::vector<std::size_t> best_stack;
    bool out_of_budget = false;

    std::function<void(const TensorClass&, std::size_t)> dfs = [&](const TensorClass& cur, std::size_t start) {
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (result.nodes >= node_budget) {
                out_of_budget = true;
                return;
            }
            if (result.length == ceiling)
                return;
            ++result.nodes;
            TensorClass next;
            try {
                next = tp.multiply(cur, pool[i]);
            } catch (const BudgetExceeded&) {
                out_of_budget = true;
                continue;
            }
            if (next.is_zero())
                continue;
            stack.push_back(i);
            if (static_cast<int>(stack.size()) > result.length) {
                result.length = static_cast<int>(stack.size());
                best_stack = stack;
            }
            dfs(next, i);
            stack.pop_back();
        }
    };
    dfs(tp.one(), 0);
    result.exhaustive = full && !out_of_budget;

    for (std::size_t i = 0; i < best_stack.size();) {
        std::size_t j = i;
        while (j < best_stack.size() && best_stack[j] == best_stack[i])
            ++j;
        CertificateFactor f = factor_from_form(pool[best_stack[i]]);
        f.exp = static_cast<int>(j - i);
        result.certificate.factors.push_back(f);
        i = j;
    }
    result.certificate.length = result.certificate.computed_length();
    result.certificate.label = result.exhaustive ? "exhaustive zcl search" : "budgeted zcl search";
    return result;
}

}  // namespace polytc
