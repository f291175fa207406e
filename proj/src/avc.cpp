#include "avwc/avc.hpp"

#include <cmath>
#include <stdexcept>

#include "avwc/rng.hpp"
#include "avwc/simplex.hpp"

namespace avwc {

double symmetrizer_residual(const std::vector<Channel>& mains, const Channel& t) {
    const std::size_t nx = mains.front().input_size();
    const std::size_t ny = mains.front().output_size();
    const std::size_t ns = mains.size();
    double worst = 0.0;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t xp = x + 1; xp < nx; ++xp)
            for (std::size_t y = 0; y < ny; ++y) {
                double lhs = 0.0, rhs = 0.0;
                for (std::size_t s = 0; s < ns; ++s) {
                    lhs += mains[s](x, y) * t(xp, s);
                    rhs += mains[s](xp, y) * t(x, s);
                }
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    return worst;
}

SymmetrizabilityResult symmetrizability_check(const std::vector<Channel>& mains) {
    if (mains.empty()) throw std::invalid_argument("symmetrizability_check: empty family");
    const std::size_t nx = mains.front().input_size();
    const std::size_t ny = mains.front().output_size();
    const std::size_t ns = mains.size();
    for (const auto& w : mains)
        if (w.input_size() != nx || w.output_size() != ny)
            throw std::invalid_argument("symmetrizability_check: inconsistent alphabets");

    // Variables T(s|x), x-major: index x * ns + s.
    const std::size_t nvars = nx * ns;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;

    // Row-stochasticity of T.
    for (std::size_t x = 0; x < nx; ++x) {
        std::vector<double> row(nvars, 0.0);
        for (std::size_t s = 0; s < ns; ++s) row[x * ns + s] = 1.0;
        rows.push_back(std::move(row));
        rhs.push_back(1.0);
    }
    // Symmetry equalities.
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t xp = x + 1; xp < nx; ++xp)
            for (std::size_t y = 0; y < ny; ++y) {
                std::vector<double> row(nvars, 0.0);
                for (std::size_t s = 0; s < ns; ++s) {
                    row[xp * ns + s] += mains[s](x, y);
                    row[x * ns + s] -= mains[s](xp, y);
                }
                rows.push_back(std::move(row));
                rhs.push_back(0.0);
            }

    const Phase1Result lp = phase1_feasible(nvars, rows, rhs, 1e-8);
    SymmetrizabilityResult result;
    result.feasible = lp.feasible;
    if (!lp.feasible) return result;

    std::vector<std::vector<double>> t_rows(nx, std::vector<double>(ns));
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t s = 0; s < ns; ++s) t_rows[x][s] = lp.x[x * ns + s];
    SymmetrizerMatrix witness{Channel(std::move(t_rows))};
    result.max_residual = symmetrizer_residual(mains, witness.t);
    result.witness = std::move(witness);
    return result;
}

double state_sequence_value(const RandomEncoderCode& code, const AvwcFamily& family,
                            const StateSequence& seq, SequenceMetric metric) {
    switch (metric) {
        case SequenceMetric::avg_error:
            return average_error(code, state_sequence_channel(family, seq, FamilySide::main));
        case SequenceMetric::max_error:
            return max_error(code, state_sequence_channel(family, seq, FamilySide::main));
        case SequenceMetric::strong_leakage: {
            const Channel v = state_sequence_channel(family, seq, FamilySide::wiretap);
            return mutual_information(Distribution::uniform(code.message_count()),
                                      induced_message_channel(code, v));
        }
    }
    throw std::logic_error("state_sequence_value: bad metric");
}

WorstSequenceResult worst_state_sequence(const RandomEncoderCode& code, const AvwcFamily& family,
                                         std::size_t n, SequenceMetric metric,
                                         std::size_t budget, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("worst_state_sequence: n must be >= 1");
    const std::size_t ns = family.state_count();

    double total = 1.0;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(ns);

    WorstSequenceResult best;
    best.seq.states.assign(n, 0);
    best.value = -1.0;

    if (total <= 4096.0) {
        StateSequence seq;
        seq.states.assign(n, 0);
        const std::size_t count = static_cast<std::size_t>(total);
        for (std::size_t id = 0; id < count; ++id) {
            std::size_t rem = id;
            for (std::size_t i = 0; i < n; ++i) {
                seq.states[i] = rem % ns;
                rem /= ns;
            }
            const double v = state_sequence_value(code, family, seq, metric);
            if (v > best.value) {
                best.value = v;
                best.seq = seq;
            }
        }
        best.exact = true;
        return best;
    }

    Rng rng(seed);
    for (std::size_t restart = 0; restart < budget; ++restart) {
        StateSequence seq;
        seq.states.resize(n);
        for (auto& s : seq.states) s = rng.uniform_index(ns);
        double value = state_sequence_value(code, family, seq, metric);
        // Single-coordinate ascent until a full sweep finds no improvement.
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t keep = seq.states[i];
                for (std::size_t s = 0; s < ns; ++s) {
                    if (s == keep) continue;
                    seq.states[i] = s;
                    const double v = state_sequence_value(code, family, seq, metric);
                    if (v > value + 1e-15) {
                        value = v;
                        improved = true;
                    } else {
                        seq.states[i] = keep;
                    }
                    if (seq.states[i] != keep) break;
                }
            }
        }
        if (value > best.value) {
            best.value = value;
            best.seq = seq;
        }
    }
    best.exact = false;
    return best;
}

ChernoffReport chernoff_tail_validate(std::size_t l, double p, double p1, double alpha,
                                      std::size_t trials, std::uint64_t seed) {
    if (l == 0 || trials == 0)
        throw std::invalid_argument("chernoff_tail_validate: L and trials must be >= 1");
    if (p < 0.0 || p > 1.0 || p1 < p || p1 > 1.0)
        throw std::invalid_argument("chernoff_tail_validate: need 0 <= p <= p1 <= 1");
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("chernoff_tail_validate: alpha must be in (0,1)");

    const double threshold = static_cast<double>(l) * p1 * (1.0 + alpha);
    Rng rng(seed);
    std::size_t exceed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < l; ++i) sum += rng.bernoulli(p) ? 1 : 0;
        if (static_cast<double>(sum) > threshold) ++exceed;
    }

    ChernoffReport report;
    report.trials = trials;
    report.exceed_count = exceed;
    report.empirical = static_cast<double>(exceed) / static_cast<double>(trials);
    report.bound = std::exp(-alpha * alpha * static_cast<double>(l) * p1 / 8.0);
    report.std_error =
        std::sqrt(report.empirical * (1.0 - report.empirical) / static_cast<double>(trials));
    report.pass = report.empirical <= report.bound + 3.0 * report.std_error;
    return report;
}

}  // namespace avwc
