#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avwc/types.hpp"
#include "avwc/wiretap.hpp"

namespace avwc {

/// Row-stochastic witness T: X -> S of symmetrizability.
struct SymmetrizerMatrix {
    Channel t;
};

struct SymmetrizabilityResult {
    bool feasible = false;
    std::optional<SymmetrizerMatrix> witness;
    /// Max equality residual of the witness; < 1e-7 when feasible.
    double max_residual = 0.0;
};

/// Decides whether the main family {W_s} is X-symmetrizable: exists
/// row-stochastic T with sum_s W_s(y|x) T(s|x') = sum_s W_s(y|x') T(s|x)
/// for all x, x', y. Solved as a phase-1 linear feasibility problem.
SymmetrizabilityResult symmetrizability_check(const std::vector<Channel>& mains);

/// Max equality residual of a candidate symmetrizer.
double symmetrizer_residual(const std::vector<Channel>& mains, const Channel& t);

enum class SequenceMetric { avg_error, max_error, strong_leakage };

struct WorstSequenceResult {
    StateSequence seq;
    double value = 0.0;
    bool exact = false;  // set when |S|^n was exhaustively enumerated
};

/// Evaluates one state sequence: error metrics against the main side,
/// uniform-prior leakage against the wiretap side.
double state_sequence_value(const RandomEncoderCode& code, const AvwcFamily& family,
                            const StateSequence& seq, SequenceMetric metric);

/// Jammer's worst state sequence for the given metric. Exhaustive when
/// |S|^n <= 4096; otherwise seeded random restarts with single-coordinate
/// ascent, `budget` restarts.
WorstSequenceResult worst_state_sequence(const RandomEncoderCode& code, const AvwcFamily& family,
                                         std::size_t n, SequenceMetric metric,
                                         std::size_t budget = 32, std::uint64_t seed = 0);

struct ChernoffReport {
    double empirical = 0.0;
    double bound = 0.0;      // e^{-alpha^2 L p1 / 8}
    double std_error = 0.0;  // binomial standard error of the estimate
    std::size_t exceed_count = 0;
    std::size_t trials = 0;
    bool pass = false;       // empirical <= bound + 3 std errors
};

/// Monte Carlo check of the Chernoff tail bound
/// Pr{ sum F_l > L p1 (1+alpha) } < e^{-alpha^2 L p1 / 8} for i.i.d.
/// Bernoulli(p) with p <= p1 and alpha in (0,1).
ChernoffReport chernoff_tail_validate(std::size_t l, double p, double p1, double alpha,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace avwc
