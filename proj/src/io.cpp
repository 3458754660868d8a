#include "polytc/io.hpp"

#include <cstdlib>
#include <fstream>

namespace polytc::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

std::string kind_name(CertificateFactor::Kind k) {
    switch (k) {
        case CertificateFactor::Kind::Bar: return "bar";
        case CertificateFactor::Kind::Embed: return "embed";
        case CertificateFactor::Kind::Sum: return "sum";
    }
    return "?";
}

CertificateFactor::Kind kind_from(const std::string& s) {
    if (s == "bar")
        return CertificateFactor::Kind::Bar;
    if (s == "embed")
        return CertificateFactor::Kind::Embed;
    if (s == "sum")
        return CertificateFactor::Kind::Sum;
    throw FormatError("unknown factor kind '" + s + "'");
}

json gen_json(Generator g) { return generator_name(g); }

Generator gen_from(const json& j, int n) {
    if (j.is_number_integer())
        return j.get<int>();
    return parse_generator(j.get<std::string>(), n);
}

}  // namespace

json to_json(IndexSet s) { return s.elements(); }

IndexSet index_set_from_json(const json& j) {
    return guarded("index set", [&] {
        IndexSet s;
        for (int e : j.get<std::vector<int>>()) {
            if (e < 1 || e > 31)
                throw FormatError("index " + std::to_string(e) + " out of range");
            s.insert(e);
        }
        return s;
    });
}

json to_json(const GeneticCode& code) {
    json genes = json::array();
    for (IndexSet g : code.genes())
        genes.push_back(to_json(g));
    return {{"n", code.n()}, {"genes", genes}};
}

GeneticCode code_from_json(const json& j) {
    if (j.is_string())
        return GeneticCode::parse(j.get<std::string>());
    return guarded("genetic code", [&] {
        std::vector<IndexSet> genes;
        for (const auto& g : j.at("genes"))
            genes.push_back(index_set_from_json(g));
        return GeneticCode(j.at("n").get<int>(), genes);
    });
}

json to_json(const Certificate& cert) {
    json factors = json::array();
    for (const auto& f : cert.factors) {
        json jf{{"kind", kind_name(f.kind)}, {"exp", f.exp}};
        if (f.kind == CertificateFactor::Kind::Sum) {
            json terms = json::array();
            for (const auto& t : f.terms)
                terms.push_back({{"pos", t.pos}, {"gen", gen_json(t.gen)}});
            jf["terms"] = terms;
        } else {
            jf["pos"] = f.pos;
            jf["gen"] = gen_json(f.gen);
            if (f.with)
                jf["with"] = *f.with;
        }
        factors.push_back(jf);
    }
    json j{{"code", to_json(cert.code)}, {"k", cert.k}, {"factors", factors}, {"length", cert.length}};
    if (cert.witness)
        j["witness"] = cert.witness->entries();
    if (!cert.label.empty())
        j["label"] = cert.label;
    return j;
}

Certificate certificate_from_json(const json& j) {
    return guarded("certificate", [&] {
        Certificate cert;
        cert.code = code_from_json(j.at("code"));
        const int n = cert.code.n();
        cert.k = j.at("k").get<int>();
        for (const auto& jf : j.at("factors")) {
            CertificateFactor f;
            f.kind = kind_from(jf.at("kind").get<std::string>());
            f.exp = jf.value("exp", 1);
            if (f.kind == CertificateFactor::Kind::Sum) {
                for (const auto& t : jf.at("terms"))
                    f.terms.push_back({t.at("pos").get<int>(), gen_from(t.at("gen"), n)});
            } else {
                f.pos = jf.at("pos").get<int>();
                f.gen = gen_from(jf.at("gen"), n);
                if (jf.contains("with"))
                    f.with = jf.at("with").get<int>();
            }
            cert.factors.push_back(f);
        }
        cert.length = j.contains("length") ? j.at("length").get<int>() : cert.computed_length();
        if (j.contains("witness"))
            cert.witness = LengthVector(j.at("witness").get<std::vector<std::int64_t>>());
        cert.label = j.value("label", std::string());
        return cert;
    });
}

json to_json(const CohomologyRing& ring, const CohoClass& x) {
    json support = json::array();
    for (const Monomial& mono : ring.support(x))
        support.push_back({mono.r, to_json(mono.s)});
    return {{"degree", x.degree()}, {"support", support}};
}

CohoClass coho_class_from_json(const CohomologyRing& ring, const json& j) {
    return guarded("cohomology class", [&] {
        const int degree = j.at("degree").get<int>();
        std::vector<Monomial> support;
        for (const auto& t : j.at("support")) {
            const Monomial mono{t.at(0).get<int>(), index_set_from_json(t.at(1))};
            if (mono.degree() != degree)
                throw FormatError("monomial " + mono.to_string() + " is not in degree " + std::to_string(degree));
            support.push_back(mono);
        }
        return ring.from_support(degree, support);
    });
}

json to_json(const TCBoundReport& r) {
    json claims = json::array();
    for (const auto& c : r.claims) {
        json hyps = json::array();
        for (const auto& h : c.hypotheses)
            hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"required", h.required}});
        json jc{{"method", c.method}, {"lower", c.lower}, {"hypotheses", hyps}, {"status", to_string(c.status)}};
        if (c.certificate)
            jc["certificate"] = to_json(*c.certificate);
        claims.push_back(jc);
    }
    json j{{"code", r.code.to_string()}, {"k", r.k},           {"m", r.m},
           {"lower", r.lower},          {"upper", r.upper},   {"method", r.method},
           {"status", to_string(r.status)}, {"claims", claims}, {"caveats", r.caveats}};
    if (r.certificate)
        j["certificate"] = to_json(*r.certificate);
    return j;
}

json to_json(const EnumeratedCode& e) {
    return {{"n", e.code.n()},
            {"genes", to_json(e.code)["genes"]},
            {"signature", e.signature.sizes_string()},
            {"witness", e.witness.entries()}};
}

EnumeratedCode enumerated_from_json(const json& j) {
    return guarded("enumerated code", [&] {
        GeneticCode code = code_from_json(j);
        LengthVector witness(j.at("witness").get<std::vector<std::int64_t>>());
        if (!(genetic_code(witness) == code))
            throw FormatError("cached witness does not realize " + code.to_string());
        CodeSignature sig = classify(code);
        return EnumeratedCode{std::move(code), std::move(witness), std::move(sig)};
    });
}

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot read " + path.string());
    return guarded(path.string().c_str(), [&] { return json::parse(in); });
}

void write_file(const std::filesystem::path& path, const json& j) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

std::filesystem::path cache_dir(const std::string& flag) {
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("POLYTC_CACHE_DIR"))
        return env;
    return {};
}

std::vector<EnumeratedCode> cached_codes(int n, const std::filesystem::path& dir) {
    if (!dir.empty()) {
        const auto file = dir / ("codes_n" + std::to_string(n) + ".json");
        if (std::filesystem::exists(file)) {
            try {
                const json j = read_file(file);
                std::vector<EnumeratedCode> out;
                for (const auto& e : j.at("codes")) {
                    out.push_back(enumerated_from_json(e));
                    if (out.back().code.n() != n)
                        throw FormatError("cache entry with wrong n");
                }
                if (j.at("count").get<std::size_t>() == out.size())
                    return out;
            } catch (const std::exception&) {
                // A stale or damaged cache is rebuilt below.
            }
        }
    }
    std::vector<EnumeratedCode> out = enumerate_genetic_codes(n);
    if (!dir.empty()) {
        json codes = json::array();
        for (const auto& e : out)
            codes.push_back(to_json(e));
        write_file(dir / ("codes_n" + std::to_string(n) + ".json"), {{"n", n}, {"count", out.size()}, {"codes", codes}});
    }
    return out;
}

}  // namespace polytc::io
