#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avwc/types.hpp"
#include "avwc/wiretap.hpp"

namespace avwc {

/// Knobs for the semantic-security lower-bound search.
struct SearchConfig {
    std::size_t dirichlet_samples = 256;
    std::size_t partition_cap = 6;
    std::uint64_t seed = 0;
};

struct BaResult {
    double capacity_bits = 0.0;  // monotone lower bound at the last iterate
    Distribution input;          // iterate achieving capacity_bits
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> capacity_trace;  // lower bound per iteration, in bits

    BaResult() : input(Distribution::uniform(1)) {}
};

/// Blahut-Arimoto channel capacity with the duality-gap stopping rule:
/// stops once max_x D(row_x || q) - log sum_x p(x) e^{D(row_x || q)} <= tol.
/// Non-convergence within max_iter is flagged, carrying the best iterate.
BaResult blahut_arimoto(const Channel& ch, double tol_bits = 1e-9,
                        std::size_t max_iter = 100000);

struct DsWitness {
    std::size_t wiretap = 0;
    std::size_t u0 = 0, u1 = 0;
};

struct SsWitness {
    std::size_t wiretap = 0;
    std::vector<std::size_t> partition;  // message -> block id
    std::vector<double> prior;
};

struct AdvantageReport {
    double strong_leakage_bits = 0.0;
    std::size_t strong_leakage_wiretap = 0;
    double mis_advantage_bits = 0.0;
    std::size_t mis_wiretap = 0;
    bool mis_converged = true;
    double ds_advantage = 0.0;
    DsWitness ds_witness;
    double ss_advantage_lower = 0.0;
    SsWitness ss_witness;
    bool ss_restricted = false;  // message count above the partition cap
};

/// max over wiretaps of I(U;Z) for the uniform message prior. In bits.
double strong_leakage(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                      std::size_t* worst_index = nullptr);

/// max over wiretaps of max_{P_U} I(U;Z), via Blahut-Arimoto on the induced
/// message channel. In bits.
double mis_advantage(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                     std::size_t* worst_index = nullptr, bool* converged = nullptr,
                     double tol_bits = 1e-9, std::size_t max_iter = 100000);

/// max over wiretaps and unordered message pairs of the total variation
/// between induced rows. Zero when fewer than two messages.
double ds_advantage(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                    DsWitness* witness = nullptr);

/// Certified lower bound on Adv^SS: exact MAP adversary vs exact constant
/// simulator, maximized over enumerated set partitions f of the message set
/// and an enumerated prior family (uniform, all two-point uniform priors,
/// seeded Dirichlet samples). Above the partition cap only the identity f
/// and pair priors are searched, and the result is flagged restricted.
double ss_advantage_lower(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                          const SearchConfig& config = {}, SsWitness* witness = nullptr,
                          bool* restricted = nullptr);

/// All four advantages with witnesses.
AdvantageReport advantage_report(const RandomEncoderCode& code,
                                 const std::vector<Channel>& wiretaps,
                                 const SearchConfig& config = {});

/// Numeric audit of the security-notion equivalences on one system.
///
/// The mutual-information side of the sandwich is asserted in the squared
/// Pinsker-consistent form ds^2/2 nats, i.e. ds^2/(2 ln 2) bits. The source
/// derivation labels that chain with a linear 1/2 Adv^DS; the linear and
/// squared forms differ, so the linear form is carried here only as an
/// informational value, never asserted.
struct EquivalenceAudit {
    double ss_lower = 0.0;
    double ds = 0.0;
    double mis_bits = 0.0;
    double strong_bits = 0.0;
    std::size_t wiretap_output_size = 0;

    double slack_ss_le_ds = 0.0;    // ds - ss
    double slack_ds_le_2ss = 0.0;   // 2 ss - ds
    double slack_pinsker = 0.0;     // mis - ds^2/(2 ln 2)
    double slack_ds_to_mis = 0.0;   // 2 ds log2(|Z|/ds) - mis  (mis - tol at ds = 0)
    double pinsker_linear_bits = 0.0;  // ds/2 in bits: the unasserted linear form

    bool pass_ss_le_ds = false;
    bool pass_ds_le_2ss = false;
    bool pass_pinsker = false;
    bool pass_ds_to_mis = false;
    bool all_pass = false;
    std::string note;
};

EquivalenceAudit equivalence_audit(const RandomEncoderCode& code,
                                   const std::vector<Channel>& wiretaps,
                                   const SearchConfig& config = {}, double tol = 1e-9);

/// Single-letter secrecy objective of the state-averaged family:
/// I(U;Y) under the q-averaged main channel minus max_s I(U;Z) under V_s,
/// with U -> X given by `cond`. In bits; may be negative.
double single_letter_objective(const Distribution& prior, const Channel& cond,
                               const AvwcFamily& family, const Distribution& q);

struct SingleLetterOptimum {
    double value_bits = 0.0;
    Distribution prior;
    Channel cond;
    Distribution worst_q;  // inner argmin over state distributions
    bool inner_exact = false;

    SingleLetterOptimum()
        : prior(Distribution::uniform(1)), cond(Channel::identity(1)),
          worst_q(Distribution::uniform(1)) {}
};

/// Best found value of max_{P_U, P_{X|U}} min_q [objective]. The inner min
/// runs on a simplex grid of the given resolution plus local refinement
/// (exhaustive grid only for |S| <= 3, flagged via inner_exact); the outer
/// max uses deterministic warm starts, seeded random restarts and
/// coordinate ascent. The result is a lower bound on the true max-min.
SingleLetterOptimum optimize_single_letter(const AvwcFamily& family, double grid_resolution = 1e-2,
                                           std::size_t aux_cap = 0, std::size_t restarts = 16,
                                           std::uint64_t seed = 0);

}  // namespace avwc
