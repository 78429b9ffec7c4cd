#include "qwit/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwit {

std::vector<double> BoundVector::prefix_sums() const {
    std::vector<double> p(components.size());
    double s = 0.0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        s += components[i];
        p[i] = s;
    }
    return p;
}

double BoundVector::total() const {
    double s = 0.0;
    for (double v : components) s += v;
    return s;
}

BoundVector sort_desc(const BoundVector& v) {
    BoundVector out = v;
    std::sort(out.components.begin(), out.components.end(), std::greater<double>());
    out.tag = VectorTag::SortedDesc;
    return out;
}

BoundVector sort_asc(const BoundVector& v) {
    BoundVector out = v;
    std::sort(out.components.begin(), out.components.end());
    out.tag = VectorTag::SortedAsc;
    return out;
}

bool majorized_by(const BoundVector& x, const BoundVector& y, double tol) {
    if (x.size() != y.size()) throw std::invalid_argument("majorization length mismatch");
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        sx += x.components[k];
        sy += y.components[k];
        if (sx > sy + tol) return false;
    }
    return true;
}

std::vector<double> majorization_margins(const BoundVector& x, const BoundVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorization length mismatch");
    std::vector<double> m;
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        sx += x.components[k];
        sy += y.components[k];
        m.push_back(sy - sx);
    }
    return m;
}

BoundVector from_cumulative(const std::vector<double>& levels) {
    if (levels.empty()) throw std::invalid_argument("empty level vector");
    BoundVector out;
    out.tag = VectorTag::SuccessiveDifference;
    out.components.resize(levels.size());
    out.components[0] = levels[0];
    bool monotone = true;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        out.components[i] = levels[i] - levels[i - 1];
        if (levels[i] < levels[i - 1]) monotone = false;
    }
    if (!monotone) out.warning = "non-monotone cumulative levels";
    return out;
}

}  // namespace qwit
