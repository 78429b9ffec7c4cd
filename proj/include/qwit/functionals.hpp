#pragma once

#include "qwit/majorization.hpp"

#include <functional>
#include <span>
#include <string>

namespace qwit {

/// Joint uncertainty of one outcome pair, f(p_a, q_b). Probabilities are
/// clamped at 1e-15 inside log arguments; 0 log 0 = 0. Logs are base 2.
struct PairFunctional {
    std::string name;
    double order = 0.0;  // Renyi/Tsallis index where applicable
    std::function<double(double, double)> eval;
};

PairFunctional shannon_pair();           // -p log p - q log q
PairFunctional renyi_pair(double k);     // p^k q^k
PairFunctional tsallis_pair(double k);   // p^k + q^k
/// Relative-entropy-coherence functional. First argument: reference
/// (computational) basis probability; second: scanned basis probability.
/// Summing the table over all outcome pairs and dividing by the outcome
/// count gives H(reference) - H(scanned).
PairFunctional coherence_pair();

/// m-ary joint uncertainty f(p_{a_1}, ..., p_{a_m}).
struct MultiFunctional {
    std::string name;
    double order = 0.0;
    std::function<double(std::span<const double>)> eval;
};

MultiFunctional shannon_multi();
MultiFunctional tsallis_multi(double k);
MultiFunctional renyi_multi(double k);

/// Row-major table [f(p_1,q_1), f(p_1,q_2), ..., f(p_n,q_m)].
BoundVector eval_f_table(const PairFunctional& f, std::span<const double> p_a,
                         std::span<const double> p_b);

/// Safe base-2 log term p*log2(p) with the 1e-15 floor.
double p_log2_p(double p);

}  // namespace qwit
