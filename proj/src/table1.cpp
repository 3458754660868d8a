#include "polytc/table1.hpp"

#include <map>
#include <stdexcept>

namespace polytc {

const std::vector<std::string>& shape_row_labels() {
    static const std::vector<std::string> labels{
        "2", "3", "4", "3,3", "4,3 Type 1", "4,3 Type 2", "3,3,3 Type 2", "4,3,3 Type 2", "4,3,3,3 Type 2",
        "anything, 2"};
    return labels;
}

bool in_shape_row(const std::string& label, const EnumeratedCode& e) {
    const auto& sig = e.signature;
    const std::string sizes = sig.sizes_string();
    const std::size_t genes = e.code.genes().size();
    if (label == "2" || label == "3" || label == "4")
        return genes == 1 && sizes == label;
    if (label == "3,3")
        return sizes == "3,3";
    if (label == "4,3 Type 1")
        return sig.type1 && sizes == "4,3";
    if (label == "anything, 2")
        return genes >= 2 && sig.find(Template::HasGeneSize2).has_value();
    const auto pos = label.find(" Type 2");
    if (pos != std::string::npos)
        return sig.type2 && sizes == label.substr(0, pos);
    throw std::invalid_argument("unknown row '" + label + "'");
}

std::optional<int> published_count(const std::string& label, int n) {
    if (n < 5 || n > 8)
        throw std::out_of_range("published counts cover 5 <= n <= 8");
    static const std::map<std::string, std::vector<int>> table{
        // n = 5, 6, 7, 8; 0 marks an empty cell
        {"2", {4, 5, 6, 7}},
        {"3", {0, 5, 15, 21}},
        {"4", {0, 0, 4, 21}},
        {"3,3", {0, 0, 15, 35}},
        {"4,3 Type 1", {0, 0, 8, 20}},
        {"4,3 Type 2", {0, 0, 10, 10}},
        {"3,3,3 Type 2", {0, 0, 1, 1}},
        {"4,3,3 Type 2", {0, 0, 14, 14}},
        {"4,3,3,3 Type 2", {0, 0, 2, 2}},
        {"anything, 2", {0, 8, 55, 559}},
    };
    const auto it = table.find(label);
    if (it == table.end())
        throw std::invalid_argument("unknown row '" + label + "'");
    const int v = it->second[static_cast<std::size_t>(n - 5)];
    if (v == 0)
        return std::nullopt;
    return v;
}

std::vector<ShapeRow> shape_counts(int n, const std::vector<EnumeratedCode>& codes) {
    std::vector<ShapeRow> rows;
    for (const auto& label : shape_row_labels()) {
        ShapeRow row{label, n, 0, n >= 5 && n <= 8 ? published_count(label, n) : std::nullopt};
        for (const auto& e : codes)
            row.count += in_shape_row(label, e) ? 1 : 0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace polytc
