#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "fmlp/matrix.hpp"

namespace fmlp {

// Shape and parsing metadata for one benchmark dataset.
// attribute_count_incl_target counts predicting attributes plus the target
// and excludes id columns, so a raw row has
// attribute_count_incl_target + |id_columns| fields.
struct dataset_descriptor {
    std::string name;
    std::string default_filename;
    std::size_t pattern_count = 0;              // expected raw data rows (before
                                                // missing-value drops)
    std::size_t attribute_count_incl_target = 0;
    std::size_t class_count = 0;
    std::size_t target_column = 0;              // raw-file column index
    std::set<std::size_t> categorical_columns;  // raw-file column indices
    std::set<std::size_t> id_columns;           // raw-file column indices, dropped
    bool has_header = false;
};

// Loaded dataset: P x n attribute matrix plus encoded scalar targets.
struct dataset {
    matrix x;
    std::vector<double> t;                 // encode_target(class index, class_count)
    std::vector<std::string> class_labels; // raw label per class index
    std::size_t n = 0;                     // predicting attribute count
    std::size_t class_count = 0;           // declared K (labels may be sparse)
    std::size_t dropped_rows = 0;          // rows removed for "?" markers
    dataset_descriptor descriptor;
};

// K equally spaced interior points of (0,1): (k+1)/(K+1). Strictly increasing
// in k, never touching the sigmoid asymptotes. Rejects k >= K.
double encode_target(std::size_t class_index, std::size_t class_count);

// Parses a comma-separated file per the descriptor: skips the header if
// declared, skips blank lines, drops rows containing "?" (counted), drops id
// columns, maps categorical predictors to ordinal codes by first appearance,
// and encodes the target column.
//
// Class indexing: when the distinct observed labels match the declared class
// count they are indexed by first appearance; otherwise, if every label is an
// integer in [1, class_count], class index = value - 1 (covers files whose
// integer label sets have holes). Anything else is an error.
//
// Malformed rows (field count, unparseable numerics) raise errors with the
// 1-based line number. An empty file is an error, not an empty dataset.
dataset load_csv(const std::filesystem::path& path, const dataset_descriptor& descriptor);

// The six built-in benchmark descriptors.
const std::vector<dataset_descriptor>& dataset_catalog();

// Catalog lookup by name; throws std::out_of_range listing known names.
const dataset_descriptor& find_descriptor(const std::string& name);

// Descriptor from a user-supplied JSON file (see README for the schema).
dataset_descriptor descriptor_from_json(const std::filesystem::path& path);

} // namespace fmlp
