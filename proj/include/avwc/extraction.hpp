#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avwc/types.hpp"
#include "avwc/wiretap.hpp"

namespace avwc {

/// Schedule for extracting a per-message / prior-free code from an
/// average-error, strongly secure base code.
struct ExtractionParams {
    std::size_t message_count_j = 1;       // derived message count J
    std::size_t samples_per_message_k = 1; // draws per derived message K
    double beta = 0.0;                     // J K / |U|
    double leakage_budget_a_bits = 0.0;    // per-step leakage sum budget A
    double error_budget_b = 0.0;           // per-step error sum budget B
    double delta_bits = 0.0;               // uniform bound on D_V(u)
    std::size_t retry_budget = 64;
    std::uint64_t seed = 0;
};

/// Outcome of a parameter derivation: the schedule plus any soft condition
/// failures. The sampling-success conditions are sufficient, not necessary,
/// so violated ones are reported while the schedule stays usable.
struct ScheduleResult {
    std::optional<ExtractionParams> params;  // absent on hard failures (J < 1, beta >= 1/4)
    std::vector<std::string> violations;
};

/// Theorem-1 schedule: K = round(2^{n eps/3}), beta target 1/n,
/// J = floor(|U| / (n K)), A = K mu / 2, B = K lambda / 2. `lambda` and
/// `mu` are the target budgets; the base code is expected to satisfy the
/// measured values lambda/8 and mu/8, making K*(mu/8) <= A/4 hold exactly.
ScheduleResult derive_params_theorem1(std::size_t n, double epsilon, double lambda, double mu,
                                      std::size_t base_message_count, double delta_bits);

/// Theorem-3 schedule: K = round(2^{n (a + eps/2)}), trading a + eps of
/// rate for the larger sample count. Otherwise identical to the
/// theorem-1 schedule.
ScheduleResult derive_params_theorem3(std::size_t n, double epsilon, double lambda, double mu,
                                      std::size_t base_message_count, double delta_bits,
                                      double a);

struct PreconditionCheck {
    bool pass = false;
    // log-domain margins of ln(1/4) minus each left-hand side; positive is good
    double margin_wiretap = 0.0;    // |V| J e^{-A/(4 delta)} < 1/4
    double margin_main = 0.0;       // |W| J e^{-B/4} < 1/4
    double margin_collision = 0.0;  // J e^{-K beta/32} < 1/4
    std::vector<std::string> violations;
};

/// Evaluates the three sampling-success conditions exactly in the log
/// domain for the given family sizes.
PreconditionCheck check_preconditions(const ExtractionParams& params, std::size_t main_count,
                                      std::size_t wiretap_count);

struct StepLog {
    std::size_t step = 0;     // derived message index j
    std::size_t retries = 0;  // failed attempts before acceptance
    double leakage_sum_bits = 0.0;  // worst wiretap's accepted sum of D values
    double error_sum = 0.0;         // worst main's accepted error sum
    std::size_t collisions = 0;     // draws discarded at acceptance
};

struct ExtractionResult {
    RandomEncoderCode derived;
    std::vector<std::vector<std::size_t>> clusters;  // base messages per derived message
    std::vector<StepLog> step_log;
    // measured base statistics, verified before sampling
    double base_lambda = 0.0;      // worst average error over mains
    double base_mu_bits = 0.0;     // worst strong leakage over wiretaps
    double base_delta_bits = 0.0;  // worst D_V(u)
};

struct ExtractionFailure {
    std::size_t step = 0;
    std::size_t retries = 0;
    std::string reason;
    double worst_leakage_sum_bits = 0.0;
    double worst_error_sum = 0.0;
    std::size_t worst_collisions = 0;
};

struct ExtractionOutcome {
    std::optional<ExtractionResult> result;
    std::optional<ExtractionFailure> failure;

    bool ok() const { return result.has_value(); }
};

/// Lemma-level randomized extraction. Verifies the measured base statistics
/// against the schedule first (lambda-hat <= B/4K, mu-hat <= A/4K,
/// delta-hat <= delta) and refuses on violation. Then draws K base messages
/// i.i.d. uniform per derived message, accepting a step only when every
/// wiretap's D-sum is <= A, every main's error sum is <= B, and at most
/// 3 K beta / 2 draws collide with previously used messages or repeat
/// inside the draw. Collided draws are dropped from the cluster. Each step
/// resamples whole draws up to retry_budget times on its own derived
/// random stream, so enlarging budgets never changes earlier accepted
/// attempts.
ExtractionOutcome extract(const RandomEncoderCode& base, const std::vector<Channel>& mains,
                          const std::vector<Channel>& wiretaps, const ExtractionParams& params);

struct ExtractionAudit {
    double error_bound = 0.0;         // B / (K (1 - 3 beta / 2))
    double leakage_bound_bits = 0.0;  // A / (K (1 - 3 beta / 2))
    double worst_message_error = 0.0;
    double worst_message_leakage_bits = 0.0;  // max_j KL(row_j || base uniform marginal)
    double worst_uniform_leakage_bits = 0.0;  // max over wiretaps of I(uniform; Z)
    std::size_t worst_error_message = 0;
    std::size_t worst_leakage_message = 0;
    bool error_ok = false;
    bool leakage_ok = false;

    bool pass() const { return error_ok && leakage_ok; }
};

/// Post-hoc audit of an extraction: per-message error against every main,
/// and the prior-free information-radius leakage certificate against every
/// wiretap. The leakage reference is the BASE code's uniform-prior output
/// marginal, so the bound holds for every prior on the derived messages.
ExtractionAudit audit_extracted(const ExtractionResult& result,
                                const RandomEncoderCode& base,
                                const std::vector<Channel>& mains,
                                const std::vector<Channel>& wiretaps,
                                const ExtractionParams& params, double tol = 1e-9);

}  // namespace avwc
