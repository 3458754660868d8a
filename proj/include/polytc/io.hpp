#pragma once

// JSON persistence for codes, certificates, cohomology classes, bound reports
// and the enumeration cache.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "polytc/bounds.hpp"
#include "polytc/cohomology.hpp"
#include "polytc/genetics.hpp"
#include "polytc/tensor.hpp"

namespace polytc::io {

using nlohmann::json;

/// Malformed input documents.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json to_json(IndexSet s);
IndexSet index_set_from_json(const json& j);

json to_json(const GeneticCode& code);  // {"n": 7, "genes": [[2,7]]}
GeneticCode code_from_json(const json& j);

json to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

/// {"degree": d, "support": [[r, [i, ...]], ...]} over basis monomials.
json to_json(const CohomologyRing& ring, const CohoClass& x);
CohoClass coho_class_from_json(const CohomologyRing& ring, const json& j);

json to_json(const TCBoundReport& report);
json to_json(const EnumeratedCode& e);
EnumeratedCode enumerated_from_json(const json& j);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

/// Directory from the argument, else $POLYTC_CACHE_DIR, else empty (no cache).
std::filesystem::path cache_dir(const std::string& flag);

/// Codes for n from <dir>/codes_n<N>.json when present and consistent,
/// otherwise enumerated and (when dir is nonempty) written back.
std::vector<EnumeratedCode> cached_codes(int n, const std::filesystem::path& dir);

}  // namespace polytc::io
