#pragma once

// Occurrence counts of code shapes for small n, next to the published values.

#include <optional>
#include <string>
#include <vector>

#include "polytc/genetics.hpp"

namespace polytc {

struct ShapeRow {
    std::string label;  // "2", "3", "4", "3,3", "4,3 Type 1", ..., "anything, 2"
    int n = 0;
    int count = 0;
    std::optional<int> published;

    bool matches() const { return !published || *published == count; }
};

/// Row labels in table order.
const std::vector<std::string>& shape_row_labels();

/// Whether a classified code belongs to a row.
bool in_shape_row(const std::string& label, const EnumeratedCode& code);

/// Published count, or nullopt for an empty cell.  n in 5..8.
std::optional<int> published_count(const std::string& label, int n);

/// One row per label for the given codes (all with the same n).
std::vector<ShapeRow> shape_counts(int n, const std::vector<EnumeratedCode>& codes);

}  // namespace polytc
