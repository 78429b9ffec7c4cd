#pragma once

#include <string>
#include <vector>

namespace qwit {

enum class VectorTag { Raw, SortedDesc, SortedAsc, SuccessiveDifference };

/// Real vector compared under the prefix-sum partial order. The comparison
/// convention (raw vs sorted) is chosen by the caller per inequality.
struct BoundVector {
    std::vector<double> components;
    VectorTag tag = VectorTag::Raw;
    std::string warning;  // set e.g. when built from non-monotone levels

    std::size_t size() const { return components.size(); }
    std::vector<double> prefix_sums() const;
    double total() const;
};

BoundVector sort_desc(const BoundVector& v);
BoundVector sort_asc(const BoundVector& v);

/// True iff x is majorized by y: every prefix sum of x is <= the prefix sum
/// of y plus tol, for k = 1..n-1. Vectors are compared as given; total-sum
/// equality is not enforced.
bool majorized_by(const BoundVector& x, const BoundVector& y, double tol = 1e-9);

/// Per-prefix slack prefix_y[k] - prefix_x[k] for k = 1..n-1 (negative means
/// the prefix violates).
std::vector<double> majorization_margins(const BoundVector& x, const BoundVector& y);

/// Successive differences [L1, L2-L1, ...]; prefix sums reproduce the
/// levels exactly. Non-monotone levels are accepted, with a warning attached.
BoundVector from_cumulative(const std::vector<double>& levels);

}  // namespace qwit
