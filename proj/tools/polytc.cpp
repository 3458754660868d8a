// polytc: command-line front end.
//
// Exit codes: 0 success / verified, 1 verification failed, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "polytc/bounds.hpp"
#include "polytc/cohomology.hpp"
#include "polytc/genetics.hpp"
#include "polytc/io.hpp"
#include "polytc/lengthvec.hpp"
#include "polytc/table1.hpp"
#include "polytc/tensor.hpp"

using namespace polytc;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<int> ks{2};
    std::vector<int> ns;
    bool certify = false;
    std::size_t budget = 2'000'000;
    std::string cache_dir;
    std::string format = "text";
    std::string save_dir;
    std::string expect_code;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

// "2-5" or "2,3,7" or "4".
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            const auto dash = part.find('-');
            if (dash == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                const int lo = std::stoi(part.substr(0, dash));
                const int hi = std::stoi(part.substr(dash + 1));
                if (hi < lo)
                    throw InputError("empty range " + part);
                for (int v = lo; v <= hi; ++v)
                    out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw InputError("bad range '" + text + "'");
        }
    }
    if (out.empty())
        throw InputError("empty range");
    return out;
}

BoundsOptions bounds_options(const Options& o) { return {o.certify, o.budget}; }

void check_ks(const std::vector<int>& ks) {
    for (int k : ks)
        if (k < 2 || k > kMaxTensorFactors)
            throw InputError("k must lie in [2, " + std::to_string(kMaxTensorFactors) + "]");
}

std::string bound_line(const TCBoundReport& r) {
    std::string s = "TC_" + std::to_string(r.k) + " in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) +
                    "]  (" + r.method + ", certificate " + to_string(r.status) + ")";
    return s;
}

// Analysis of one code, shared by analyze and code.
int describe(const GeneticCode& code, const std::optional<LengthVector>& alpha, const Options& o) {
    check_ks(o.ks);
    const CodeSignature sig = classify(code);
    if (code.m() < 1) {
        std::cout << "code " << code.to_string() << ": polygon space is a point (m = 0)\n";
        return kOk;
    }
    const CohomologyRing ring(code);
    std::vector<TCBoundReport> reports;
    for (int k : o.ks)
        reports.push_back(tc_bounds(ring, k, bounds_options(o)));
    const CupLength cl = cup_length(ring);

    if (o.format == "json") {
        json j{{"code", io::to_json(code)},
               {"code_string", code.to_string()},
               {"signature", sig.sizes_string()},
               {"type1", sig.type1},
               {"type2", sig.type2},
               {"m", code.m()},
               {"dims", ring.dims()},
               {"cup_length", cl.length},
               {"cat", cl.length + 1}};
        if (alpha)
            j["lengths"] = alpha->entries();
        j["reports"] = json::array();
        for (const auto& r : reports)
            j["reports"].push_back(io::to_json(r));
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "code,k,m,lower,upper,method,status\n";
        for (const auto& r : reports)
            std::cout << '"' << code.to_string() << "\"," << r.k << ',' << r.m << ',' << r.lower << ',' << r.upper
                      << ",\"" << r.method << "\"," << to_string(r.status) << "\n";
    } else {
        if (alpha)
            std::cout << "lengths     " << alpha->to_string() << " (generic)\n";
        std::cout << "code        " << code.to_string() << "\n";
        std::cout << "gene sizes  " << sig.sizes_string() << (sig.type1 ? "  Type 1" : "") << (sig.type2 ? "  Type 2" : "")
                  << "\n";
        for (const auto& t : sig.templates)
            std::cout << "template    " << to_string(t.kind) << (t.params.empty() ? "" : " (" + join(t.params) + ")")
                      << "\n";
        std::cout << "m           " << code.m() << "\n";
        std::cout << "dims        " << join(ring.dims(), " ") << "\n";
        std::cout << "cup length  " << cl.length << "  witness " << cl.witness.to_string() << "\n";
        std::cout << "cat         " << cl.length + 1 << "\n";
        if (ring.dim(1) == 1)
            std::cout << "ring        truncated polynomial algebra Z_2[R]/(R^" << code.m() + 1 << ")\n";
        for (const auto& r : reports) {
            std::cout << bound_line(r) << "\n";
            for (const auto& c : r.caveats)
                std::cout << "  caveat: " << c << "\n";
        }
    }
    if (!o.save_dir.empty())
        for (const auto& r : reports)
            if (r.certificate)
                io::write_file(std::filesystem::path(o.save_dir) /
                                   ("cert_k" + std::to_string(r.k) + ".json"),
                               io::to_json(*r.certificate));
    for (const auto& r : reports)
        if (o.certify && r.status == CertStatus::Failed)
            return kFailed;
    return kOk;
}

int cmd_analyze(const std::vector<std::string>& lengths, const Options& o) {
    std::string joined;
    for (const auto& s : lengths)
        joined += s + " ";
    LengthVector alpha = [&] {
        try {
            return LengthVector::parse(joined);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }();
    if (alpha.n() < 4)
        throw InputError("need at least 4 side lengths");
    if (const auto bal = find_balanced_subset(alpha)) {
        const IndexSet comp = IndexSet::range(alpha.n()).minus(*bal);
        throw InputError("not generic: the signed sum with + on " + bal->to_string() + " and - on " +
                         comp.to_string() + " is zero (both sides sum to " + std::to_string(alpha.sum(*bal)) + ")");
    }
    return describe(genetic_code(alpha), alpha, o);
}

int cmd_code(const std::string& text, const Options& o) {
    GeneticCode code = [&] {
        try {
            return GeneticCode::parse(text);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }();
    const Realization real = realizable(code);
    if (!real.realizable)
        throw InputError(code.to_string() + " is not realized by any generic length vector");
    return describe(code, real.witness, o);
}

int cmd_enumerate(const Options& o) {
    if (o.ns.empty())
        throw InputError("enumerate needs --n");
    for (int n : o.ns)
        if (n < kMinEnumerateN || n > kMaxEnumerateN)
            throw InputError("enumeration supports " + std::to_string(kMinEnumerateN) + " <= n <= " +
                             std::to_string(kMaxEnumerateN));
    json all = json::array();
    if (o.format == "csv")
        std::cout << "n,code,sizes,type1,type2,witness\n";
    for (int n : o.ns) {
        const auto codes = io::cached_codes(n, io::cache_dir(o.cache_dir));
        for (const auto& e : codes) {
            if (o.format == "json") {
                all.push_back(io::to_json(e));
            } else if (o.format == "csv") {
                std::cout << n << ",\"" << e.code.to_string() << "\",\"" << e.signature.sizes_string() << "\","
                          << e.signature.type1 << ',' << e.signature.type2 << ",\"" << e.witness.to_string()
                          << "\"\n";
            } else {
                std::cout << e.code.to_string() << "  [" << e.witness.to_string() << "]\n";
            }
        }
        if (o.format == "text")
            std::cout << "n=" << n << ": " << codes.size() << " codes\n";
    }
    if (o.format == "json")
        std::cout << all.dump(2) << "\n";
    return kOk;
}

int cmd_table1(const Options& o) {
    const std::vector<int> ns = o.ns.empty() ? std::vector<int>{5, 6, 7, 8} : o.ns;
    for (int n : ns)
        if (n < 5 || n > 8)
            throw InputError("the published table covers 5 <= n <= 8");
    bool all_match = true;
    json j = json::array();
    std::vector<std::vector<ShapeRow>> columns;
    for (int n : ns) {
        columns.push_back(shape_counts(n, io::cached_codes(n, io::cache_dir(o.cache_dir))));
        for (const auto& row : columns.back())
            all_match = all_match && row.matches();
    }
    if (o.format == "json") {
        for (const auto& col : columns)
            for (const auto& r : col) {
                json jr{{"row", r.label}, {"n", r.n}, {"count", r.count}, {"matches", r.matches()}};
                jr["published"] = r.published ? json(*r.published) : json(nullptr);
                j.push_back(jr);
            }
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "row,n,count,published,matches\n";
        for (const auto& col : columns)
            for (const auto& r : col)
                std::cout << '"' << r.label << "\"," << r.n << ',' << r.count << ','
                          << (r.published ? std::to_string(*r.published) : "") << ',' << r.matches() << "\n";
    } else {
        std::printf("%-16s", "gene sizes");
        for (int n : ns)
            std::printf("  %-14s", ("n=" + std::to_string(n)).c_str());
        std::printf("\n");
        for (std::size_t i = 0; i < shape_row_labels().size(); ++i) {
            std::printf("%-16s", shape_row_labels()[i].c_str());
            for (const auto& col : columns) {
                const ShapeRow& r = col[i];
                std::string cell = std::to_string(r.count);
                if (!r.published)
                    cell += " (-)";
                else if (!r.matches())
                    cell += " (pub " + std::to_string(*r.published) + ") !";
                std::printf("  %-14s", cell.c_str());
            }
            std::printf("\n");
        }
        std::printf("%s\n", all_match ? "all published cells match" : "MISMATCH against published cells (marked !)");
    }
    return all_match ? kOk : kFailed;
}

int cmd_bounds(const std::vector<std::string>& codes, const Options& o) {
    check_ks(o.ks);
    std::vector<GeneticCode> targets;
    for (const auto& text : codes) {
        try {
            targets.push_back(GeneticCode::parse(text));
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
        if (!realizable(targets.back()).realizable)
            throw InputError(targets.back().to_string() + " is not realizable");
    }
    for (int n : o.ns) {
        if (n < kMinEnumerateN || n > kMaxEnumerateN)
            throw InputError("enumeration supports 4 <= n <= 9");
        for (const auto& e : io::cached_codes(n, io::cache_dir(o.cache_dir)))
            targets.push_back(e.code);
    }
    if (targets.empty())
        throw InputError("bounds needs codes or --n");

    bool failed = false;
    json all = json::array();
    if (o.format == "csv")
        std::cout << "code,k,m,lower,upper,method,status\n";
    for (const auto& code : targets) {
        if (code.m() < 1)
            continue;
        const CohomologyRing ring(code);
        for (int k : o.ks) {
            const TCBoundReport r = tc_bounds(ring, k, bounds_options(o));
            failed = failed || (o.certify && r.status == CertStatus::Failed);
            if (o.format == "json")
                all.push_back(io::to_json(r));
            else if (o.format == "csv")
                std::cout << '"' << code.to_string() << "\"," << k << ',' << r.m << ',' << r.lower << ',' << r.upper
                          << ",\"" << r.method << "\"," << to_string(r.status) << "\n";
            else
                std::cout << code.to_string() << "  " << bound_line(r) << "\n";
            if (!o.save_dir.empty() && r.certificate) {
                std::string name = code.to_string();
                for (char& c : name)
                    if (!std::isalnum(static_cast<unsigned char>(c)))
                        c = '_';
                io::write_file(std::filesystem::path(o.save_dir) / (name + "_k" + std::to_string(k) + ".json"),
                               io::to_json(*r.certificate));
            }
        }
    }
    if (o.format == "json")
        std::cout << all.dump(2) << "\n";
    return failed ? kFailed : kOk;
}

int cmd_certify(const std::string& path, const Options& o) {
    Certificate cert;
    try {
        cert = io::certificate_from_json(io::read_file(path));
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    if (!o.expect_code.empty()) {
        const GeneticCode expected = GeneticCode::parse(o.expect_code);
        if (!(expected == cert.code))
            throw InputError("certificate is for " + cert.code.to_string() + ", expected " + expected.to_string());
    }
    if (cert.witness && !(genetic_code(*cert.witness) == cert.code))
        throw InputError("certificate witness " + cert.witness->to_string() + " realizes " +
                         genetic_code(*cert.witness).to_string() + ", not " + cert.code.to_string());
    if (cert.code.m() < 1)
        throw InputError("certificate code has m = 0");
    const CohomologyRing ring(cert.code);
    CertificateResult res;
    try {
        res = evaluate_certificate(ring, cert, o.budget);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kFailed;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (o.format == "json") {
        std::cout << json{{"code", cert.code.to_string()},
                          {"k", cert.k},
                          {"length", cert.length},
                          {"nonzero", res.nonzero},
                          {"lower_bound", res.nonzero ? cert.length + 1 : 0},
                          {"terms", res.terms},
                          {"multidegree", res.witness_multidegree}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << cert.code.to_string() << " k=" << cert.k << " length " << cert.length << ": "
                  << (res.nonzero ? "nonzero" : "zero");
        if (res.nonzero)
            std::cout << " (" << res.terms << " terms, e.g. multidegree " << join(res.witness_multidegree, "/")
                      << "), TC_" << cert.k << " >= " << cert.length + 1;
        std::cout << "\n";
    }
    return res.nonzero ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for planar polygon spaces: genetic codes, mod-2 cohomology, TC_k bounds"};
    app.require_subcommand(1);

    Options o;
    std::string ks_text = "2";
    std::string ns_text;
    std::vector<std::string> lengths;
    std::vector<std::string> codes;
    std::string code_text;
    std::string cert_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--cache-dir", o.cache_dir, "Enumeration cache directory (or $POLYTC_CACHE_DIR)");
        sub->add_option("--budget", o.budget, "Tensor term budget per certificate")->check(CLI::PositiveNumber);
    };
    auto with_k = [&](CLI::App* sub) {
        sub->add_option("--k", ks_text, "k values, e.g. 2 or 2-5 or 2,4");
        sub->add_flag("--certify", o.certify, "Verify each claimed lower bound with a tensor certificate");
        sub->add_option("--save-certs", o.save_dir, "Directory for certificate JSON files");
    };

    auto* analyze = app.add_subcommand("analyze", "Analyze a length vector");
    analyze->add_option("lengths", lengths, "Side lengths")->required();
    common(analyze);
    with_k(analyze);

    auto* code = app.add_subcommand("code", "Analyze a genetic code, e.g. '<{1,2,7},{3,7}>'");
    code->add_option("code", code_text, "Genetic code")->required();
    common(code);
    with_k(code);

    auto* enumerate = app.add_subcommand("enumerate", "List the realizable genetic codes for n");
    enumerate->add_option("--n", ns_text, "n values (4..9)")->required();
    common(enumerate);

    auto* table1 = app.add_subcommand("table1", "Count code shapes and compare with the published table");
    table1->add_option("--n", ns_text, "n values (5..8), default 5-8");
    common(table1);

    auto* bounds = app.add_subcommand("bounds", "TC_k bounds for codes or for every code with given n");
    bounds->add_option("codes", codes, "Genetic codes");
    bounds->add_option("--n", ns_text, "n values (4..9)");
    common(bounds);
    with_k(bounds);

    auto* certify = app.add_subcommand("certify", "Re-verify a certificate file");
    certify->add_option("file", cert_path, "Certificate JSON")->required();
    certify->add_option("--code", o.expect_code, "Expected genetic code");
    common(certify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        o.ks = parse_range(ks_text);
        if (!ns_text.empty())
            o.ns = parse_range(ns_text);
        if (*analyze)
            return cmd_analyze(lengths, o);
        if (*code)
            return cmd_code(code_text, o);
        if (*enumerate)
            return cmd_enumerate(o);
        if (*table1)
            return cmd_table1(o);
        if (*bounds)
            return cmd_bounds(codes, o);
        if (*certify)
            return cmd_certify(cert_path, o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const io::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
