#include "fmlp/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fmlp {

double encode_target(std::size_t class_index, std::size_t class_count) {
    if (class_index >= class_count) {
        throw std::invalid_argument("encode_target: class index " +
                                    std::to_string(class_index) + " out of range for " +
                                    std::to_string(class_count) + " classes");
    }
    return static_cast<double>(class_index + 1) / static_cast<double>(class_count + 1);
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        fields.push_back("");
    }
    return fields;
}

double parse_numeric(const std::string& token, std::size_t line_number, std::size_t column) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || errno == ERANGE) {
        throw std::runtime_error("line " + std::to_string(line_number) + ", column " +
                                 std::to_string(column + 1) + ": cannot parse numeric '" +
                                 token + "'");
    }
    return value;
}

// True when every label is an integer in [1, class_count]; fills indices with
// value - 1. Handles label sets with holes (e.g. an integer class that never
// occurs in the file).
bool integer_label_indexing(const std::vector<std::string>& labels,
                            std::size_t class_count,
                            std::map<std::string, std::size_t>& index_of) {
    std::map<std::string, std::size_t> trial;
    for (const auto& label : labels) {
        char* end = nullptr;
        errno = 0;
        const long value = std::strtol(label.c_str(), &end, 10);
        if (label.empty() || end != label.c_str() + label.size() || errno == ERANGE ||
            value < 1 || static_cast<std::size_t>(value) > class_count) {
            return false;
        }
        trial[label] = static_cast<std::size_t>(value - 1);
    }
    index_of = std::move(trial);
    return true;
}

} // namespace

dataset load_csv(const std::filesystem::path& path, const dataset_descriptor& descriptor) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("load_csv: cannot open " + path.string());
    }
    const std::size_t raw_columns =
        descriptor.attribute_count_incl_target + descriptor.id_columns.size();
    if (descriptor.attribute_count_incl_target < 2) {
        throw std::invalid_argument("load_csv: descriptor '" + descriptor.name +
                                    "' needs at least one predictor and a target");
    }
    if (descriptor.target_column >= raw_columns) {
        throw std::invalid_argument("load_csv: target column out of range for '" +
                                    descriptor.name + "'");
    }
    if (descriptor.id_columns.count(descriptor.target_column) != 0) {
        throw std::invalid_argument("load_csv: target column is listed as an id column");
    }

    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_labels;
    std::size_t dropped = 0;

    // Ordinal codes for categorical predictors, assigned by first appearance.
    std::map<std::size_t, std::map<std::string, double>> categorical_codes;

    std::string line;
    std::size_t line_number = 0;
    bool header_pending = descriptor.has_header;
    while (std::getline(file, line)) {
        ++line_number;
        if (trim(line).empty()) {
            continue;
        }
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != raw_columns) {
            throw std::runtime_error("line " + std::to_string(line_number) + ": expected " +
                                     std::to_string(raw_columns) + " fields, got " +
                                     std::to_string(fields.size()));
        }
        if (std::find(fields.begin(), fields.end(), "?") != fields.end()) {
            ++dropped;
            continue;
        }
        std::vector<double> row;
        row.reserve(descriptor.attribute_count_incl_target - 1);
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (descriptor.id_columns.count(c) != 0 || c == descriptor.target_column) {
                continue;
            }
            if (descriptor.categorical_columns.count(c) != 0) {
                auto& codes = categorical_codes[c];
                const auto it = codes.try_emplace(fields[c],
                                                  static_cast<double>(codes.size())).first;
                row.push_back(it->second);
            } else {
                row.push_back(parse_numeric(fields[c], line_number, c));
            }
        }
        rows.push_back(std::move(row));
        row_labels.push_back(fields[descriptor.target_column]);
    }
    if (rows.empty()) {
        throw std::runtime_error("load_csv: no data rows in " + path.string());
    }

    // Distinct labels in first-appearance order.
    std::vector<std::string> observed;
    for (const auto& label : row_labels) {
        if (std::find(observed.begin(), observed.end(), label) == observed.end()) {
            observed.push_back(label);
        }
    }

    std::map<std::string, std::size_t> index_of;
    std::vector<std::string> class_labels;
    if (observed.size() == descriptor.class_count) {
        for (std::size_t k = 0; k < observed.size(); ++k) {
            index_of[observed[k]] = k;
        }
        class_labels = observed;
    } else if (integer_label_indexing(observed, descriptor.class_count, index_of)) {
        class_labels.reserve(descriptor.class_count);
        for (std::size_t k = 0; k < descriptor.class_count; ++k) {
            class_labels.push_back(std::to_string(k + 1));
        }
    } else {
        throw std::runtime_error("load_csv: found " + std::to_string(observed.size()) +
                                 " class labels, descriptor '" + descriptor.name +
                                 "' declares " + std::to_string(descriptor.class_count) +
                                 ", and the labels are not integers in [1, " +
                                 std::to_string(descriptor.class_count) + "]");
    }

    dataset ds;
    ds.descriptor = descriptor;
    ds.n = descriptor.attribute_count_incl_target - 1;
    ds.class_count = descriptor.class_count;
    ds.class_labels = std::move(class_labels);
    ds.dropped_rows = dropped;
    ds.x = matrix(rows.size(), ds.n);
    ds.t.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < ds.n; ++j) {
            ds.x(i, j) = rows[i][j];
        }
        ds.t[i] = encode_target(index_of.at(row_labels[i]), ds.class_count);
    }
    return ds;
}

const std::vector<dataset_descriptor>& dataset_catalog() {
    static const std::vector<dataset_descriptor> catalog = {
        {"iris", "iris.data", 150, 5, 3, 4, {}, {}, false},
        {"abalone", "abalone.data", 4177, 9, 29, 8, {0}, {}, false},
        {"bcw", "breast-cancer-wisconsin.data", 699, 10, 2, 10, {}, {0}, false},
        {"glass", "glass.data", 214, 10, 7, 10, {}, {0}, false},
        {"soybean", "soybean-small.data", 47, 36, 4, 35, {}, {}, false},
        {"wine", "wine.data", 178, 14, 3, 0, {}, {}, false},
    };
    return catalog;
}

const dataset_descriptor& find_descriptor(const std::string& name) {
    for (const auto& descriptor : dataset_catalog()) {
        if (descriptor.name == name) {
            return descriptor;
        }
    }
    std::string known;
    for (const auto& descriptor : dataset_catalog()) {
        known += known.empty() ? descriptor.name : ", " + descriptor.name;
    }
    throw std::out_of_range("unknown dataset '" + name + "' (known: " + known + ")");
}

dataset_descriptor descriptor_from_json(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("descriptor_from_json: cannot open " + path.string());
    }
    nlohmann::json doc;
    try {
        file >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("descriptor_from_json: " + path.string() + ": " + e.what());
    }

    dataset_descriptor descriptor;
    try {
        descriptor.name = doc.at("name").get<std::string>();
        descriptor.attribute_count_incl_target =
            doc.at("attribute_count_incl_target").get<std::size_t>();
        descriptor.class_count = doc.at("class_count").get<std::size_t>();
        descriptor.target_column = doc.at("target_column").get<std::size_t>();
        descriptor.default_filename = doc.value("default_filename", std::string{});
        descriptor.pattern_count = doc.value("pattern_count", std::size_t{0});
        descriptor.has_header = doc.value("has_header", false);
        for (const auto& c : doc.value("categorical_columns", std::vector<std::size_t>{})) {
            descriptor.categorical_columns.insert(c);
        }
        for (const auto& c : doc.value("id_columns", std::vector<std::size_t>{})) {
            descriptor.id_columns.insert(c);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("descriptor_from_json: " + path.string() +
                                 ": missing or mistyped field: " + e.what());
    }
    return descriptor;
}

} // namespace fmlp
