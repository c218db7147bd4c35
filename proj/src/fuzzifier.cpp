#include "fmlp/fuzzifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmlp {

fuzzifier_model fit_fuzzifier(const matrix& attributes) {
    if (attributes.rows() == 0 || attributes.cols() == 0) {
        throw std::invalid_argument("fit_fuzzifier: empty attribute matrix");
    }
    const std::size_t cols = attributes.cols();
    fuzzifier_model model;
    model.params.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double lo = attributes(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < attributes.rows(); ++i) {
            const double v = attributes(i, j);
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        if (!(std::isfinite(lo) && std::isfinite(hi))) {
            throw std::invalid_argument("fit_fuzzifier: non-finite values in column " +
                                        std::to_string(j));
        }
        if (lo == hi) {
            model.params.emplace_back(std::nullopt);
            model.constant_columns.insert(j);
        } else {
            model.params.emplace_back(s_membership_params(lo, hi));
        }
    }
    return model;
}

std::vector<double> fuzzify(const fuzzifier_model& model, std::span<const double> x) {
    if (x.size() != model.attribute_count()) {
        throw std::invalid_argument("fuzzify: input has " + std::to_string(x.size()) +
                                    " components, model expects " +
                                    std::to_string(model.attribute_count()));
    }
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = model.params[j] ? s_membership(x[j], *model.params[j]) : 0.5;
    }
    return out;
}

matrix fuzzify_matrix(const fuzzifier_model& model, const matrix& attributes) {
    if (attributes.cols() != model.attribute_count()) {
        throw std::invalid_argument("fuzzify_matrix: column count mismatch");
    }
    matrix out(attributes.rows(), attributes.cols());
    for (std::size_t i = 0; i < attributes.rows(); ++i) {
        const double* src = attributes.row(i);
        double* dst = out.row(i);
        for (std::size_t j = 0; j < attributes.cols(); ++j) {
            dst[j] = model.params[j] ? s_membership(src[j], *model.params[j]) : 0.5;
        }
    }
    return out;
}

std::size_t defuzzify(double y, std::size_t class_count) {
    if (class_count < 2) {
        throw std::invalid_argument("defuzzify: need at least 2 classes");
    }
    // Linear scan over the encoded grid; strict improvement keeps exact ties
    // at the lower index. class_count is small, so O(K) is immaterial.
    std::size_t best = 0;
    double best_distance = std::abs(y - 1.0 / static_cast<double>(class_count + 1));
    for (std::size_t k = 1; k < class_count; ++k) {
        const double enc = static_cast<double>(k + 1) / static_cast<double>(class_count + 1);
        const double distance = std::abs(y - enc);
        if (distance < best_distance) {
            best = k;
            best_distance = distance;
        }
    }
    return best;
}

} // namespace fmlp
