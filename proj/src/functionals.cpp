#include "qwit/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace qwit {

double p_log2_p(double p) {
    if (p <= 0.0) return 0.0;
    return p * std::log2(std::max(p, 1e-15));
}

PairFunctional shannon_pair() {
    return {"shannon_pair", 0.0,
            [](double p, double q) { return -p_log2_p(p) - p_log2_p(q); }};
}

PairFunctional renyi_pair(double k) {
    if (k <= 0.0 || k == 1.0) throw std::invalid_argument("Renyi index must be > 0 and != 1");
    return {"renyi_pair", k,
            [k](double p, double q) { return std::pow(p, k) * std::pow(q, k); }};
}

PairFunctional tsallis_pair(double k) {
    if (k <= 0.0 || k == 1.0) throw std::invalid_argument("Tsallis index must be > 0 and != 1");
    return {"tsallis_pair", k,
            [k](double p, double q) { return std::pow(p, k) + std::pow(q, k); }};
}

PairFunctional coherence_pair() {
    return {"coherence_pair", 0.0,
            [](double ref, double scan) { return -p_log2_p(ref) + p_log2_p(scan); }};
}

MultiFunctional shannon_multi() {
    return {"shannon_multi", 0.0, [](std::span<const double> p) {
                double s = 0.0;
                for (double v : p) s -= p_log2_p(v);
                return s;
            }};
}

MultiFunctional tsallis_multi(double k) {
    if (k <= 0.0 || k == 1.0) throw std::invalid_argument("Tsallis index must be > 0 and != 1");
    return {"tsallis_multi", k, [k](std::span<const double> p) {
                double s = 0.0;
                for (double v : p) s += std::pow(v, k);
                return s;
            }};
}

MultiFunctional renyi_multi(double k) {
    if (k <= 0.0 || k == 1.0) throw std::invalid_argument("Renyi index must be > 0 and != 1");
    return {"renyi_multi", k, [k](std::span<const double> p) {
                double s = 1.0;
                for (double v : p) s *= std::pow(v, k);
                return s;
            }};
}

BoundVector eval_f_table(const PairFunctional& f, std::span<const double> p_a,
                         std::span<const double> p_b) {
    if (!f.eval) throw std::invalid_argument("functional has no evaluator");
    BoundVector out;
    out.tag = VectorTag::Raw;
    out.components.reserve(p_a.size() * p_b.size());
    for (double p : p_a)
        for (double q : p_b) out.components.push_back(f.eval(p, q));
    return out;
}

}  // namespace qwit
