#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmlp/dataset.hpp"

using namespace fmlp;

namespace {

std::filesystem::path shipped_data_dir() { return FMLP_DATA_DIR; }
std::filesystem::path excerpt_dir() { return FMLP_TEST_DATA_DIR; }

// Writes contents to a unique file under the system temp directory and
// removes it on scope exit.
struct temp_file {
    std::filesystem::path path;

    explicit temp_file(const std::string& contents, const char* suffix = ".csv") {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("fmlp_dataset_test_" + std::to_string(counter++) + suffix);
        std::ofstream out(path);
        out << contents;
    }
    ~temp_file() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

dataset_descriptor tiny_descriptor(std::size_t class_count = 2) {
    dataset_descriptor d;
    d.name = "tiny";
    d.attribute_count_incl_target = 3;
    d.class_count = class_count;
    d.target_column = 2;
    return d;
}

std::string thrown_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("target encodings are the interior grid points of (0,1)") {
    CHECK(encode_target(0, 2) == 1.0 / 3.0);
    CHECK(encode_target(1, 2) == 2.0 / 3.0);
    CHECK(encode_target(0, 3) == 0.25);
    CHECK(encode_target(1, 3) == 0.5);
    CHECK(encode_target(2, 3) == 0.75);
    CHECK(encode_target(3, 4) == 0.8);
}

TEST_CASE("target encodings stay strictly increasing and interior for many classes") {
    double previous = 0.0;
    for (std::size_t k = 0; k < 29; ++k) {
        const double e = encode_target(k, 29);
        CHECK(e > 0.0);
        CHECK(e < 1.0);
        CHECK(e > previous);
        previous = e;
    }
}

TEST_CASE("target encoding rejects out-of-range class indices") {
    CHECK_THROWS_AS(encode_target(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(encode_target(29, 29), std::invalid_argument);
    CHECK_THROWS_AS(encode_target(0, 0), std::invalid_argument);
}

TEST_CASE("built-in descriptors cover the six benchmark datasets") {
    const auto& catalog = dataset_catalog();
    REQUIRE(catalog.size() == 6);

    struct expected_entry {
        const char* name;
        std::size_t patterns;
        std::size_t attrs_incl_target;
        std::size_t classes;
    };
    const expected_entry expected[] = {
        {"iris", 150, 5, 3},   {"abalone", 4177, 9, 29}, {"bcw", 699, 10, 2},
        {"glass", 214, 10, 7}, {"soybean", 47, 36, 4},   {"wine", 178, 14, 3},
    };
    for (const auto& e : expected) {
        const auto& d = find_descriptor(e.name);
        CHECK(d.pattern_count == e.patterns);
        CHECK(d.attribute_count_incl_target == e.attrs_incl_target);
        CHECK(d.class_count == e.classes);
    }

    CHECK(find_descriptor("abalone").categorical_columns == std::set<std::size_t>{0});
    CHECK(find_descriptor("bcw").id_columns == std::set<std::size_t>{0});
    CHECK(find_descriptor("glass").id_columns == std::set<std::size_t>{0});
    CHECK(find_descriptor("wine").target_column == 0);
    CHECK(find_descriptor("soybean").target_column == 35);
}

TEST_CASE("descriptor lookup rejects unknown names and lists the catalog") {
    CHECK_THROWS_AS(find_descriptor("nope"), std::out_of_range);
    const std::string message =
        thrown_message([] { (void)find_descriptor("nope"); });
    CHECK(contains(message, "nope"));
    CHECK(contains(message, "iris"));
    CHECK(contains(message, "wine"));
}

TEST_CASE("the shipped iris file loads with the expected shape and encodings") {
    const auto path = shipped_data_dir() / "iris.data";
    REQUIRE_MESSAGE(std::filesystem::exists(path),
                    "expected the repository copy of iris.data at " << path.string());
    const dataset ds = load_csv(path, find_descriptor("iris"));
    CHECK(ds.x.rows() == 150);
    CHECK(ds.x.cols() == 4);
    CHECK(ds.n == 4);
    CHECK(ds.class_count == 3);
    CHECK(ds.dropped_rows == 0);
    REQUIRE(ds.class_labels.size() == 3);
    CHECK(ds.class_labels[0] == "Iris-setosa");
    CHECK(ds.class_labels[1] == "Iris-versicolor");
    CHECK(ds.class_labels[2] == "Iris-virginica");

    CHECK(ds.x(0, 0) == 5.1);
    CHECK(ds.x(0, 1) == 3.5);
    CHECK(ds.x(0, 2) == 1.4);
    CHECK(ds.x(0, 3) == 0.2);
    CHECK(ds.t[0] == 0.25);
    CHECK(ds.t[50] == 0.5);
    CHECK(ds.t[149] == 0.75);
    for (const double t : ds.t) {
        CHECK((t == 0.25 || t == 0.5 || t == 0.75));
    }
}

TEST_CASE("missing-value rows are dropped and counted, ids removed, labels by first appearance") {
    const dataset ds = load_csv(excerpt_dir() / "bcw_head.data", find_descriptor("bcw"));
    CHECK(ds.x.rows() == 28);   // 30 raw rows, two contain "?"
    CHECK(ds.dropped_rows == 2);
    CHECK(ds.x.cols() == 9);
    REQUIRE(ds.class_labels.size() == 2);
    // The first data row is malignant (label 4), so it takes index 0.
    CHECK(ds.class_labels[0] == "4");
    CHECK(ds.class_labels[1] == "2");
    // Raw row: 1000001,8,9,8,8,9,10,4,3,9,4 with the leading id removed.
    CHECK(ds.x(0, 0) == 8.0);
    CHECK(ds.x(0, 8) == 9.0);
    CHECK(ds.t[0] == 1.0 / 3.0);
    for (const double t : ds.t) {
        CHECK((t == 1.0 / 3.0 || t == 2.0 / 3.0));
    }
}

TEST_CASE("integer labels with holes index as value minus one") {
    // The glass excerpt only contains types {1,2,3,5,7} out of 7 declared
    // classes, so label indexing falls back to the integer rule.
    const dataset ds = load_csv(excerpt_dir() / "glass_head.data", find_descriptor("glass"));
    CHECK(ds.x.rows() == 30);
    CHECK(ds.x.cols() == 9);
    CHECK(ds.class_count == 7);
    REQUIRE(ds.class_labels.size() == 7);
    for (std::size_t k = 0; k < 7; ++k) {
        CHECK(ds.class_labels[k] == std::to_string(k + 1));
    }
    CHECK(ds.x(0, 0) == 1.5285);  // refractive index, id column removed
    CHECK(ds.t[0] == encode_target(0, 7));  // type 1
    CHECK(ds.t[1] == encode_target(1, 7));  // type 2
    std::set<double> seen(ds.t.begin(), ds.t.end());
    const std::set<double> expected = {encode_target(0, 7), encode_target(1, 7),
                                       encode_target(2, 7), encode_target(4, 7),
                                       encode_target(6, 7)};
    CHECK(seen == expected);
}

TEST_CASE("categorical predictors get ordinal codes by first appearance") {
    const dataset ds = load_csv(excerpt_dir() / "abalone_head.data", find_descriptor("abalone"));
    CHECK(ds.x.rows() == 30);
    CHECK(ds.x.cols() == 8);
    CHECK(ds.class_count == 29);
    REQUIRE(ds.class_labels.size() == 29);
    CHECK(ds.class_labels[0] == "1");
    CHECK(ds.class_labels[28] == "29");
    // Sexes appear in the order M, F, I.
    CHECK(ds.x(0, 0) == 0.0);
    CHECK(ds.x(1, 0) == 1.0);
    CHECK(ds.x(2, 0) == 2.0);
    CHECK(ds.x(3, 0) == 0.0);
    CHECK(ds.x(4, 0) == 1.0);
    CHECK(ds.x(0, 1) == 0.2559);
    CHECK(ds.t[0] == encode_target(9, 29));  // ten rings
    for (const double t : ds.t) {
        CHECK(t > 0.0);
        CHECK(t < 1.0);
    }
}

TEST_CASE("multi-valued nominal files load with first-appearance classes") {
    const dataset ds = load_csv(excerpt_dir() / "soybean_head.data", find_descriptor("soybean"));
    CHECK(ds.x.rows() == 30);
    CHECK(ds.x.cols() == 35);
    REQUIRE(ds.class_labels.size() == 4);
    CHECK(ds.class_labels[0] == "D1");
    CHECK(ds.class_labels[3] == "D4");
    CHECK(ds.t[0] == 0.2);
    CHECK(ds.t[29] == 0.8);
}

TEST_CASE("a leading target column is removed from the attribute matrix") {
    const dataset ds = load_csv(excerpt_dir() / "wine_head.data", find_descriptor("wine"));
    CHECK(ds.x.rows() == 30);
    CHECK(ds.x.cols() == 13);
    REQUIRE(ds.class_labels.size() == 3);
    CHECK(ds.class_labels[0] == "1");
    CHECK(ds.class_labels[2] == "3");
    CHECK(ds.x(0, 0) == 14.23);  // alcohol, the column after the target
    for (const double t : ds.t) {
        CHECK(t == 0.25);  // the excerpt only contains class 1
    }
}

TEST_CASE("rows with the wrong field count report the 1-based line number") {
    const temp_file file("1,2,a\n1,2\n");
    const std::string message = thrown_message(
        [&] { (void)load_csv(file.path, tiny_descriptor()); });
    CHECK(contains(message, "line 2"));
    CHECK(contains(message, "expected 3 fields, got 2"));
}

TEST_CASE("unparseable numeric fields report line and column") {
    const temp_file file("1,2,a\n1,oops,b\n");
    const std::string message = thrown_message(
        [&] { (void)load_csv(file.path, tiny_descriptor()); });
    CHECK(contains(message, "line 2"));
    CHECK(contains(message, "column 2"));
    CHECK(contains(message, "oops"));
}

TEST_CASE("an empty file is an error, not an empty dataset") {
    const temp_file file("");
    CHECK_THROWS_AS((void)load_csv(file.path, tiny_descriptor()), std::runtime_error);
    const temp_file blank_only("\n\n  \n");
    CHECK_THROWS_AS((void)load_csv(blank_only.path, tiny_descriptor()), std::runtime_error);
}

TEST_CASE("a missing file is reported with its path") {
    const std::string message = thrown_message([] {
        (void)load_csv("/nonexistent/fmlp.csv", tiny_descriptor());
    });
    CHECK(contains(message, "cannot open"));
    CHECK(contains(message, "/nonexistent/fmlp.csv"));
}

TEST_CASE("blank lines are skipped without affecting the pattern count") {
    const temp_file file("1,2,a\n\n3,4,b\n\n\n5,6,a\n");
    const dataset ds = load_csv(file.path, tiny_descriptor());
    CHECK(ds.x.rows() == 3);
    CHECK(ds.class_labels == std::vector<std::string>{"a", "b"});
}

TEST_CASE("a declared header row is skipped") {
    const temp_file file("first,second,class\n1,2,a\n3,4,b\n");
    auto descriptor = tiny_descriptor();
    descriptor.has_header = true;
    const dataset ds = load_csv(file.path, descriptor);
    CHECK(ds.x.rows() == 2);
    CHECK(ds.x(0, 0) == 1.0);
}

TEST_CASE("rows dropped for missing values do not contribute labels") {
    const temp_file file("1,2,a\n?,4,b\n5,6,b\n");
    const dataset ds = load_csv(file.path, tiny_descriptor());
    CHECK(ds.x.rows() == 2);
    CHECK(ds.dropped_rows == 1);
    CHECK(ds.class_labels == std::vector<std::string>{"a", "b"});
}

TEST_CASE("non-integer labels that disagree with the declared class count are an error") {
    const temp_file file("1,2,a\n3,4,b\n");
    const std::string message = thrown_message(
        [&] { (void)load_csv(file.path, tiny_descriptor(3)); });
    CHECK(contains(message, "found 2 class labels"));
    CHECK(contains(message, "declares 3"));
}

TEST_CASE("loading the same file twice is bit-identical") {
    const auto path = shipped_data_dir() / "iris.data";
    REQUIRE(std::filesystem::exists(path));
    const dataset first = load_csv(path, find_descriptor("iris"));
    const dataset second = load_csv(path, find_descriptor("iris"));
    CHECK(first.x == second.x);
    CHECK(first.t == second.t);
    CHECK(first.class_labels == second.class_labels);
}

TEST_CASE("descriptors round-trip through JSON") {
    const temp_file file(R"({
        "name": "custom",
        "default_filename": "custom.data",
        "pattern_count": 12,
        "attribute_count_incl_target": 4,
        "class_count": 2,
        "target_column": 3,
        "has_header": true,
        "categorical_columns": [1],
        "id_columns": [0]
    })",
                         ".json");
    const dataset_descriptor d = descriptor_from_json(file.path);
    CHECK(d.name == "custom");
    CHECK(d.default_filename == "custom.data");
    CHECK(d.pattern_count == 12);
    CHECK(d.attribute_count_incl_target == 4);
    CHECK(d.class_count == 2);
    CHECK(d.target_column == 3);
    CHECK(d.has_header);
    CHECK(d.categorical_columns == std::set<std::size_t>{1});
    CHECK(d.id_columns == std::set<std::size_t>{0});
}

TEST_CASE("JSON descriptors apply defaults for optional fields") {
    const temp_file file(R"({
        "name": "minimal",
        "attribute_count_incl_target": 3,
        "class_count": 2,
        "target_column": 2
    })",
                         ".json");
    const dataset_descriptor d = descriptor_from_json(file.path);
    CHECK(d.name == "minimal");
    CHECK(d.default_filename.empty());
    CHECK(d.pattern_count == 0);
    CHECK_FALSE(d.has_header);
    CHECK(d.categorical_columns.empty());
    CHECK(d.id_columns.empty());
}

TEST_CASE("JSON descriptors with missing required fields are rejected") {
    const temp_file file(R"({"name": "broken", "target_column": 2})", ".json");
    const std::string message = thrown_message(
        [&] { (void)descriptor_from_json(file.path); });
    CHECK(contains(message, "missing or mistyped"));
}

TEST_CASE("malformed JSON descriptors are rejected with the path") {
    const temp_file file("{not json", ".json");
    const std::string message = thrown_message(
        [&] { (void)descriptor_from_json(file.path); });
    CHECK(contains(message, file.path.string()));
}

TEST_CASE("a JSON-described file loads like a catalog one") {
    const temp_file csv("0.1,red,a\n0.2,green,b\n0.3,red,a\n0.4,blue,b\n");
    const temp_file json(R"({
        "name": "custom",
        "attribute_count_incl_target": 3,
        "class_count": 2,
        "target_column": 2,
        "categorical_columns": [1]
    })",
                         ".json");
    const dataset ds = load_csv(csv.path, descriptor_from_json(json.path));
    CHECK(ds.x.rows() == 4);
    CHECK(ds.x.cols() == 2);
    CHECK(ds.x(0, 1) == 0.0);  // red
    CHECK(ds.x(1, 1) == 1.0);  // green
    CHECK(ds.x(3, 1) == 2.0);  // blue
    CHECK(ds.t == std::vector<double>{1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0});
}
