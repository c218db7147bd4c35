#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "fmlp/matrix.hpp"
#include "fmlp/membership.hpp"

namespace fmlp {

// Per-attribute S-membership parameters fitted from training data. Attributes
// whose observed minimum equals their maximum carry no curve (the interval is
// degenerate) and are listed in constant_columns; they fuzzify to 0.5.
struct fuzzifier_model {
    std::vector<std::optional<s_membership_params>> params;
    std::set<std::size_t> constant_columns;

    std::size_t attribute_count() const { return params.size(); }
};

// a_j = column minimum, b_j = column maximum. Rejects an empty matrix.
fuzzifier_model fit_fuzzifier(const matrix& attributes);

// Componentwise s_membership; constant columns map to 0.5 regardless of the
// input value. Output lies in [0,1]^n for any finite input (the curve
// saturates outside [a,b]). Rejects dimension mismatches.
std::vector<double> fuzzify(const fuzzifier_model& model, std::span<const double> x);

// Whole-matrix convenience: fuzzifies every row.
matrix fuzzify_matrix(const fuzzifier_model& model, const matrix& attributes);

// Maps the network's scalar output back to the class whose encoded target
// (k+1)/(class_count+1) is nearest; exact ties break toward the lower index.
// class_count >= 2 required.
std::size_t defuzzify(double y, std::size_t class_count);

} // namespace fmlp
