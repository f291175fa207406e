#include "avwc/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "avwc/probability.hpp"
#include "avwc/rng.hpp"

namespace avwc {

namespace {

constexpr double kLn4 = 1.3862943611198906188;  // ln 4

ScheduleResult derive_params_common(std::size_t n, double k_exponent_bits, double lambda,
                                    double mu, std::size_t base_message_count,
                                    double delta_bits) {
    if (n == 0) throw std::invalid_argument("derive_params: n must be >= 1");
    if (lambda < 0.0 || mu < 0.0)
        throw std::invalid_argument("derive_params: lambda and mu must be non-negative");
    if (base_message_count == 0)
        throw std::invalid_argument("derive_params: empty base message set");

    ScheduleResult out;
    const double k_real = std::exp2(k_exponent_bits);
    const std::size_t k = static_cast<std::size_t>(std::max<long long>(1, std::llround(k_real)));
    const std::size_t j = base_message_count / (n * k);  // beta target 1/n
    if (j < 1) throw std::invalid_argument("derive_params: J < 1 at this block length");

    ExtractionParams p;
    p.message_count_j = j;
    p.samples_per_message_k = k;
    p.beta = static_cast<double>(j) * static_cast<double>(k) /
             static_cast<double>(base_message_count);
    p.leakage_budget_a_bits = 0.5 * static_cast<double>(k) * mu;
    p.error_budget_b = 0.5 * static_cast<double>(k) * lambda;
    p.delta_bits = delta_bits;

    if (p.beta >= 0.25) {
        out.violations.push_back("beta = " + std::to_string(p.beta) + " is not < 1/4");
        return out;
    }
    // the family-size-free sampling condition, J e^{-K beta/32} < 1/4
    const double lhs = std::log(static_cast<double>(j)) -
                       static_cast<double>(k) * p.beta / 32.0;
    if (lhs >= -kLn4)
        out.violations.push_back(
            "collision condition J e^{-K beta/32} < 1/4 fails at this block length "
            "(log-domain excess " +
            std::to_string(lhs + kLn4) + ")");
    out.params = p;
    return out;
}

}  // namespace

ScheduleResult derive_params_theorem1(std::size_t n, double epsilon, double lambda, double mu,
                                      std::size_t base_message_count, double delta_bits) {
    if (epsilon <= 0.0) throw std::invalid_argument("derive_params_theorem1: epsilon <= 0");
    return derive_params_common(n, static_cast<double>(n) * epsilon / 3.0, lambda, mu,
                                base_message_count, delta_bits);
}

ScheduleResult derive_params_theorem3(std::size_t n, double epsilon, double lambda, double mu,
                                      std::size_t base_message_count, double delta_bits,
                                      double a) {
    if (epsilon <= 0.0) throw std::invalid_argument("derive_params_theorem3: epsilon <= 0");
    if (a < 0.0) throw std::invalid_argument("derive_params_theorem3: a < 0");
    return derive_params_common(n, static_cast<double>(n) * (a + epsilon / 2.0), lambda, mu,
                                base_message_count, delta_bits);
}

PreconditionCheck check_preconditions(const ExtractionParams& params, std::size_t main_count,
                                      std::size_t wiretap_count) {
    PreconditionCheck check;
    const double log_j = std::log(static_cast<double>(params.message_count_j));
    const double k = static_cast<double>(params.samples_per_message_k);

    // |V| J e^{-A/(4 delta)}: delta = 0 forces every D to zero, so the
    // exponent is -infinity and the condition holds for any positive A.
    double exp_wiretap;
    if (params.delta_bits == 0.0)
        exp_wiretap = params.leakage_budget_a_bits > 0.0
                          ? -std::numeric_limits<double>::infinity()
                          : 0.0;
    else
        exp_wiretap = -params.leakage_budget_a_bits / (4.0 * params.delta_bits);
    check.margin_wiretap =
        -kLn4 - (std::log(static_cast<double>(wiretap_count)) + log_j + exp_wiretap);
    check.margin_main =
        -kLn4 - (std::log(static_cast<double>(main_count)) + log_j - params.error_budget_b / 4.0);
    check.margin_collision = -kLn4 - (log_j - k * params.beta / 32.0);

    if (check.margin_wiretap <= 0.0)
        check.violations.push_back("wiretap condition |V| J e^{-A/(4 delta)} < 1/4 fails");
    if (check.margin_main <= 0.0)
        check.violations.push_back("main condition |W| J e^{-B/4} < 1/4 fails");
    if (check.margin_collision <= 0.0)
        check.violations.push_back("collision condition J e^{-K beta/32} < 1/4 fails");
    check.pass = check.violations.empty();
    return check;
}

ExtractionOutcome extract(const RandomEncoderCode& base, const std::vector<Channel>& mains,
                          const std::vector<Channel>& wiretaps, const ExtractionParams& params) {
    if (mains.empty() || wiretaps.empty())
        throw std::invalid_argument("extract: needs at least one main and one wiretap");
    const std::size_t u_count = base.message_count();
    const std::size_t j_count = params.message_count_j;
    const std::size_t k_count = params.samples_per_message_k;
    if (j_count == 0 || k_count == 0)
        throw std::invalid_argument("extract: J and K must be >= 1");

    // Measured base statistics; refusal when the schedule's hypotheses fail.
    std::vector<std::vector<double>> dv(wiretaps.size());
    std::vector<std::vector<double>> err(mains.size());
    double measured_mu = 0.0, measured_lambda = 0.0, measured_delta = 0.0;
    for (std::size_t v = 0; v < wiretaps.size(); ++v) {
        dv[v] = leakage_profile(base, wiretaps[v]);
        double mean = 0.0;
        for (double d : dv[v]) {
            mean += d;
            measured_delta = std::max(measured_delta, d);
        }
        measured_mu = std::max(measured_mu, mean / static_cast<double>(u_count));
    }
    for (std::size_t w = 0; w < mains.size(); ++w) {
        err[w] = per_message_error(base, mains[w]);
        double mean = 0.0;
        for (double e : err[w]) mean += e;
        measured_lambda = std::max(measured_lambda, mean / static_cast<double>(u_count));
    }

    const double k_real = static_cast<double>(k_count);
    const double slack = 1e-12;
    ExtractionOutcome outcome;
    auto refuse = [&](const std::string& why) {
        outcome.failure = ExtractionFailure{0, 0, why, 0.0, 0.0, 0};
        return outcome;
    };
    if (measured_mu * k_real > params.leakage_budget_a_bits / 4.0 + slack)
        return refuse("base violates K mu <= A/4: measured mu = " + std::to_string(measured_mu));
    if (measured_lambda * k_real > params.error_budget_b / 4.0 + slack)
        return refuse("base violates K lambda <= B/4: measured lambda = " +
                      std::to_string(measured_lambda));
    if (measured_delta > params.delta_bits + slack)
        return refuse("base violates D_V(u) <= delta: measured delta = " +
                      std::to_string(measured_delta));

    const double collision_cap = 1.5 * k_real * params.beta;

    std::vector<bool> used(u_count, false);
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<StepLog> log;
    clusters.reserve(j_count);

    for (std::size_t j = 0; j < j_count; ++j) {
        bool accepted = false;
        double worst_leak = 0.0, worst_err = 0.0;
        std::size_t worst_coll = 0;
        for (std::size_t attempt = 0; attempt <= params.retry_budget; ++attempt) {
            // One stream per (step, attempt): acceptance under enlarged
            // budgets never disturbs other draws.
            Rng rng(Rng::derive(params.seed, j + 1, attempt));
            std::vector<std::size_t> draw(k_count);
            for (auto& u : draw) u = rng.uniform_index(u_count);

            double leak_max = 0.0;
            for (std::size_t v = 0; v < wiretaps.size(); ++v) {
                double sum = 0.0;
                for (std::size_t u : draw) sum += dv[v][u];
                leak_max = std::max(leak_max, sum);
            }
            double err_max = 0.0;
            for (std::size_t w = 0; w < mains.size(); ++w) {
                double sum = 0.0;
                for (std::size_t u : draw) sum += err[w][u];
                err_max = std::max(err_max, sum);
            }
            // Collisions against earlier steps and inside the draw both
            // count against the budget and leave the cluster.
            std::set<std::size_t> fresh;
            std::size_t collisions = 0;
            for (std::size_t u : draw) {
                if (used[u] || fresh.count(u))
                    ++collisions;
                else
                    fresh.insert(u);
            }

            worst_leak = std::max(worst_leak, leak_max);
            worst_err = std::max(worst_err, err_max);
            worst_coll = std::max(worst_coll, collisions);

            if (leak_max <= params.leakage_budget_a_bits + slack &&
                err_max <= params.error_budget_b + slack &&
                static_cast<double>(collisions) <= collision_cap) {
                std::vector<std::size_t> cluster(fresh.begin(), fresh.end());
                for (std::size_t u : cluster) used[u] = true;
                clusters.push_back(std::move(cluster));
                log.push_back(StepLog{j, attempt, leak_max, err_max, collisions});
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            outcome.failure = ExtractionFailure{
                j, params.retry_budget, "retry budget exhausted", worst_leak, worst_err,
                worst_coll};
            return outcome;
        }
    }

    // Derived encoder: uniform over the cluster, pushed through the base
    // encoder. Derived decoder: invert the base decoder through the cluster
    // membership; anything else is the designated error symbol.
    std::vector<double> enc_flat(j_count * base.input_word_count(), 0.0);
    for (std::size_t j = 0; j < j_count; ++j) {
        const double w = 1.0 / static_cast<double>(clusters[j].size());
        for (std::size_t u : clusters[j]) {
            auto row = base.encoder.row(u);
            double* dst = enc_flat.data() + j * base.input_word_count();
            for (std::size_t x = 0; x < base.input_word_count(); ++x) dst[x] += w * row[x];
        }
    }
    std::vector<std::size_t> membership(u_count, RandomEncoderCode::kErrorSymbol);
    for (std::size_t j = 0; j < j_count; ++j)
        for (std::size_t u : clusters[j]) membership[u] = j;
    std::vector<std::size_t> decoder(base.decoder.size(), RandomEncoderCode::kErrorSymbol);
    for (std::size_t y = 0; y < base.decoder.size(); ++y) {
        const std::size_t u = base.decoder[y];
        if (u != RandomEncoderCode::kErrorSymbol) decoder[y] = membership[u];
    }

    ExtractionResult result{
        RandomEncoderCode(Channel(j_count, base.input_word_count(), std::move(enc_flat)),
                          std::move(decoder)),
        std::move(clusters), std::move(log), measured_lambda, measured_mu, measured_delta};
    outcome.result = std::move(result);
    return outcome;
}

ExtractionAudit audit_extracted(const ExtractionResult& result, const RandomEncoderCode& base,
                                const std::vector<Channel>& mains,
                                const std::vector<Channel>& wiretaps,
                                const ExtractionParams& params, double tol) {
    const double k = static_cast<double>(params.samples_per_message_k);
    const double occupancy = k * (1.0 - 1.5 * params.beta);
    if (occupancy <= 0.0)
        throw std::invalid_argument("audit_extracted: K (1 - 3 beta/2) must be positive");

    ExtractionAudit audit;
    audit.error_bound = params.error_budget_b / occupancy;
    audit.leakage_bound_bits = params.leakage_budget_a_bits / occupancy;

    for (const auto& main : mains) {
        const auto errs = per_message_error(result.derived, main);
        for (std::size_t j = 0; j < errs.size(); ++j)
            if (errs[j] > audit.worst_message_error) {
                audit.worst_message_error = errs[j];
                audit.worst_error_message = j;
            }
    }

    const Distribution base_uniform = Distribution::uniform(base.message_count());
    for (const auto& wiretap : wiretaps) {
        // reference distribution: the BASE code's uniform-prior output marginal
        const Distribution reference =
            output_distribution(base_uniform, induced_message_channel(base, wiretap));
        const Channel derived_induced = induced_message_channel(result.derived, wiretap);
        for (std::size_t j = 0; j < derived_induced.input_size(); ++j) {
            const ExtendedBits d =
                kl_divergence(derived_induced.row_distribution(j), reference);
            const double bits = d.finite() ? d.value() : std::numeric_limits<double>::infinity();
            if (bits > audit.worst_message_leakage_bits) {
                audit.worst_message_leakage_bits = bits;
                audit.worst_leakage_message = j;
            }
        }
        const double uniform_leak = mutual_information(
            Distribution::uniform(result.derived.message_count()), derived_induced);
        audit.worst_uniform_leakage_bits =
            std::max(audit.worst_uniform_leakage_bits, uniform_leak);
    }

    audit.error_ok = audit.worst_message_error <= audit.error_bound + tol;
    audit.leakage_ok = audit.worst_message_leakage_bits <= audit.leakage_bound_bits + tol;
    return audit;
}

}  // namespace avwc
