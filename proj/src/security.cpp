#include "avwc/security.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "avwc/rng.hpp"

namespace avwc {

namespace {
constexpr double kLn2 = 0.6931471805599453094;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

BaResult blahut_arimoto(const Channel& ch, double tol_bits, std::size_t max_iter) {
    require(tol_bits > 0.0, "blahut_arimoto: tol must be positive");
    const std::size_t m = ch.input_size();
    const std::size_t nz = ch.output_size();
    const double tol_nats = tol_bits * kLn2;

    std::vector<double> p(m, 1.0 / static_cast<double>(m));
    std::vector<double> q(nz), t(m), w(m);

    BaResult result;
    double lower_nats = 0.0;
    std::size_t iter = 0;
    for (; iter < max_iter; ++iter) {
        std::fill(q.begin(), q.end(), 0.0);
        for (std::size_t x = 0; x < m; ++x) {
            if (p[x] == 0.0) continue;
            auto row = ch.row(x);
            for (std::size_t z = 0; z < nz; ++z) q[z] += p[x] * row[z];
        }
        double upper_nats = 0.0;
        for (std::size_t x = 0; x < m; ++x) {
            auto row = ch.row(x);
            double d = 0.0;
            for (std::size_t z = 0; z < nz; ++z) {
                if (row[z] <= 0.0) continue;
                // q dominates every positively weighted row; a weightless
                // row escaping q's support stays frozen at zero weight
                if (q[z] <= 0.0) {
                    d = 0.0;
                    break;
                }
                d += row[z] * std::log(row[z] / q[z]);
            }
            t[x] = d;
            upper_nats = std::max(upper_nats, d);
        }
        double sum = 0.0;
        for (std::size_t x = 0; x < m; ++x) {
            w[x] = p[x] * std::exp(t[x] - upper_nats);
            sum += w[x];
        }
        lower_nats = std::log(sum) + upper_nats;
        result.capacity_trace.push_back(std::max(lower_nats, 0.0) / kLn2);
        if (upper_nats - lower_nats <= tol_nats) {
            result.converged = true;
            ++iter;
            break;
        }
        for (std::size_t x = 0; x < m; ++x) p[x] = w[x] / sum;
    }

    result.capacity_bits = std::max(lower_nats, 0.0) / kLn2;
    result.iterations = iter;
    result.input = Distribution(std::move(p));
    return result;
}

double strong_leakage(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                      std::size_t* worst_index) {
    require(!wiretaps.empty(), "strong_leakage: empty wiretap list");
    const Distribution uniform = Distribution::uniform(code.message_count());
    double best = 0.0;
    std::size_t best_idx = 0;
    for (std::size_t v = 0; v < wiretaps.size(); ++v) {
        const double i = mutual_information(uniform, induced_message_channel(code, wiretaps[v]));
        if (i > best) {
            best = i;
            best_idx = v;
        }
    }
    if (worst_index) *worst_index = best_idx;
    return best;
}

double mis_advantage(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                     std::size_t* worst_index, bool* converged, double tol_bits,
                     std::size_t max_iter) {
    require(!wiretaps.empty(), "mis_advantage: empty wiretap list");
    double best = 0.0;
    std::size_t best_idx = 0;
    bool all_converged = true;
    for (std::size_t v = 0; v < wiretaps.size(); ++v) {
        BaResult ba = blahut_arimoto(induced_message_channel(code, wiretaps[v]), tol_bits, max_iter);
        all_converged = all_converged && ba.converged;
        if (ba.capacity_bits > best) {
            best = ba.capacity_bits;
            best_idx = v;
        }
    }
    if (worst_index) *worst_index = best_idx;
    if (converged) *converged = all_converged;
    return best;
}

double ds_advantage(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                    DsWitness* witness) {
    require(!wiretaps.empty(), "ds_advantage: empty wiretap list");
    const std::size_t j = code.message_count();
    if (j < 2) {
        if (witness) *witness = DsWitness{};
        return 0.0;
    }
    double best = 0.0;
    DsWitness w;
    for (std::size_t v = 0; v < wiretaps.size(); ++v) {
        const Channel induced = induced_message_channel(code, wiretaps[v]);
        for (std::size_t u0 = 0; u0 < j; ++u0) {
            auto r0 = induced.row(u0);
            for (std::size_t u1 = u0 + 1; u1 < j; ++u1) {
                auto r1 = induced.row(u1);
                double tv = 0.0;
                for (std::size_t z = 0; z < induced.output_size(); ++z)
                    tv += std::abs(r0[z] - r1[z]);
                tv *= 0.5;
                if (tv > best) {
                    best = tv;
                    w = DsWitness{v, u0, u1};
                }
            }
        }
    }
    if (witness) *witness = w;
    return std::min(best, 1.0);
}

namespace {

// All set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> a(n, 0);
    while (true) {
        out.push_back(a);
        // next restricted growth string
        std::size_t i = n;
        while (i-- > 1) {
            std::size_t maxprefix = 0;
            for (std::size_t k = 0; k < i; ++k) maxprefix = std::max(maxprefix, a[k]);
            if (a[i] <= maxprefix) {
                ++a[i];
                for (std::size_t k = i + 1; k < n; ++k) a[k] = 0;
                break;
            }
        }
        if (i == 0 || i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

// MAP advantage of the adversary guessing f(U) from Z against the best
// constant simulator guess, for one induced channel.
double map_advantage(const std::vector<double>& prior, const std::vector<std::size_t>& partition,
                     std::size_t block_count, const Channel& induced) {
    const std::size_t j = induced.input_size();
    const std::size_t nz = induced.output_size();
    std::vector<double> block_mass(block_count, 0.0);
    for (std::size_t u = 0; u < j; ++u) block_mass[partition[u]] += prior[u];

    double map_success = 0.0;
    std::vector<double> g(block_count);
    for (std::size_t z = 0; z < nz; ++z) {
        std::fill(g.begin(), g.end(), 0.0);
        for (std::size_t u = 0; u < j; ++u) {
            if (prior[u] == 0.0) continue;
            g[partition[u]] += prior[u] * induced(u, z);
        }
        map_success += *std::max_element(g.begin(), g.end());
    }
    const double simulator = *std::max_element(block_mass.begin(), block_mass.end());
    return map_success - simulator;
}

}  // namespace

double ss_advantage_lower(const RandomEncoderCode& code, const std::vector<Channel>& wiretaps,
                          const SearchConfig& config, SsWitness* witness, bool* restricted) {
    require(!wiretaps.empty(), "ss_advantage_lower: empty wiretap list");
    const std::size_t j = code.message_count();
    const bool full = j <= config.partition_cap;
    if (restricted) *restricted = !full;

    std::vector<std::vector<std::size_t>> partitions;
    if (full) {
        partitions = set_partitions(j);
    } else {
        std::vector<std::size_t> identity(j);
        for (std::size_t u = 0; u < j; ++u) identity[u] = u;
        partitions.push_back(std::move(identity));
    }

    // Candidate priors: uniform, all two-point uniform pairs, and (in full
    // mode) seeded flat Dirichlet samples.
    std::vector<std::vector<double>> priors;
    priors.emplace_back(j, 1.0 / static_cast<double>(j));
    for (std::size_t u0 = 0; u0 < j; ++u0)
        for (std::size_t u1 = u0 + 1; u1 < j; ++u1) {
            std::vector<double> p(j, 0.0);
            p[u0] = 0.5;
            p[u1] = 0.5;
            priors.push_back(std::move(p));
        }
    if (full) {
        Rng rng(config.seed);
        for (std::size_t i = 0; i < config.dirichlet_samples; ++i)
            priors.push_back(rng.dirichlet(j));
    }

    double best = 0.0;
    SsWitness w;
    for (std::size_t v = 0; v < wiretaps.size(); ++v) {
        const Channel induced = induced_message_channel(code, wiretaps[v]);
        for (const auto& partition : partitions) {
            const std::size_t blocks = 1 + *std::max_element(partition.begin(), partition.end());
            if (blocks < 2) continue;  // constant f carries no advantage
            for (const auto& prior : priors) {
                const double adv = map_advantage(prior, partition, blocks, induced);
                if (adv > best) {
                    best = adv;
                    w = SsWitness{v, partition, prior};
                }
            }
        }
    }
    if (witness) *witness = w;
    return best;
}

AdvantageReport advantage_report(const RandomEncoderCode& code,
                                 const std::vector<Channel>& wiretaps,
                                 const SearchConfig& config) {
    AdvantageReport r;
    r.strong_leakage_bits = strong_leakage(code, wiretaps, &r.strong_leakage_wiretap);
    r.mis_advantage_bits = mis_advantage(code, wiretaps, &r.mis_wiretap, &r.mis_converged);
    r.ds_advantage = ds_advantage(code, wiretaps, &r.ds_witness);
    r.ss_advantage_lower = ss_advantage_lower(code, wiretaps, config, &r.ss_witness,
                                              &r.ss_restricted);
    return r;
}

EquivalenceAudit equivalence_audit(const RandomEncoderCode& code,
                                   const std::vector<Channel>& wiretaps,
                                   const SearchConfig& config, double tol) {
    const AdvantageReport adv = advantage_report(code, wiretaps, config);
    EquivalenceAudit audit;
    audit.ss_lower = adv.ss_advantage_lower;
    audit.ds = adv.ds_advantage;
    audit.mis_bits = adv.mis_advantage_bits;
    audit.strong_bits = adv.strong_leakage_bits;
    audit.wiretap_output_size = wiretaps.front().output_size();

    const double ds = audit.ds;
    audit.slack_ss_le_ds = ds - audit.ss_lower;
    audit.slack_ds_le_2ss = 2.0 * audit.ss_lower - ds;
    audit.slack_pinsker = audit.mis_bits - ds * ds / (2.0 * kLn2);
    audit.pinsker_linear_bits = 0.5 * ds / kLn2;
    if (ds > 0.0) {
        audit.slack_ds_to_mis =
            2.0 * ds * std::log2(static_cast<double>(audit.wiretap_output_size) / ds) -
            audit.mis_bits;
    } else {
        audit.slack_ds_to_mis = tol - audit.mis_bits;
    }

    audit.pass_ss_le_ds = audit.slack_ss_le_ds >= -tol;
    audit.pass_ds_le_2ss = audit.slack_ds_le_2ss >= -tol;
    audit.pass_pinsker = audit.slack_pinsker >= -tol;
    audit.pass_ds_to_mis = audit.slack_ds_to_mis >= -tol;
    audit.all_pass = audit.pass_ss_le_ds && audit.pass_ds_le_2ss && audit.pass_pinsker &&
                     audit.pass_ds_to_mis;
    audit.note =
        "mis side asserted as ds^2/2 nats (squared Pinsker form); the linear "
        "form ds/2 is reported in pinsker_linear_bits but not asserted";
    return audit;
}

double single_letter_objective(const Distribution& prior, const Channel& cond,
                               const AvwcFamily& family, const Distribution& q) {
    require(prior.size() == cond.input_size(), "single_letter_objective: prior/cond mismatch");
    require(cond.output_size() == family.input_size(),
            "single_letter_objective: cond/family mismatch");
    require(q.size() == family.state_count(), "single_letter_objective: q/state mismatch");

    const Channel averaged_main = mixture_channel(family.main_channels(), q);
    const double reliable = mutual_information(prior, compose_channels(cond, averaged_main));
    double eavesdrop = 0.0;
    for (const auto& sp : family.states())
        eavesdrop = std::max(eavesdrop,
                             mutual_information(prior, compose_channels(cond, sp.wiretap)));
    return reliable - eavesdrop;
}

namespace {

// Enumerates the simplex grid {k/steps} and returns the minimizing q for
// the reliable term, followed by pairwise-transfer refinement.
struct InnerMin {
    double value;
    std::vector<double> q;
};

double reliable_term(const Distribution& prior, const Channel& cond, const AvwcFamily& family,
                     const std::vector<double>& q) {
    const Channel averaged = mixture_channel(family.main_channels(), Distribution(q));
    return mutual_information(prior, compose_channels(cond, averaged));
}

void grid_scan(const Distribution& prior, const Channel& cond, const AvwcFamily& family,
               std::vector<double>& q, std::size_t coord, std::size_t remaining,
               std::size_t steps, InnerMin& best) {
    const std::size_t ns = q.size();
    if (coord == ns - 1) {
        q[coord] = static_cast<double>(remaining) / static_cast<double>(steps);
        const double v = reliable_term(prior, cond, family, q);
        if (v < best.value) best = InnerMin{v, q};
        return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
        q[coord] = static_cast<double>(k) / static_cast<double>(steps);
        grid_scan(prior, cond, family, q, coord + 1, remaining - k, steps, best);
    }
}

InnerMin inner_min_q(const Distribution& prior, const Channel& cond, const AvwcFamily& family,
                     double grid_resolution, Rng& rng, bool exhaustive) {
    const std::size_t ns = family.state_count();
    InnerMin best{std::numeric_limits<double>::infinity(), std::vector<double>(ns, 0.0)};
    if (ns == 1) {
        best.q = {1.0};
        best.value = reliable_term(prior, cond, family, best.q);
        return best;
    }

    const std::size_t steps = std::max<std::size_t>(1, std::llround(1.0 / grid_resolution));
    if (exhaustive) {
        std::vector<double> q(ns, 0.0);
        grid_scan(prior, cond, family, q, 0, steps, steps, best);
    } else {
        // heuristic: uniform plus random simplex samples
        best.q.assign(ns, 1.0 / static_cast<double>(ns));
        best.value = reliable_term(prior, cond, family, best.q);
        for (std::size_t i = 0; i < 4 * steps; ++i) {
            auto q = rng.dirichlet(ns);
            const double v = reliable_term(prior, cond, family, q);
            if (v < best.value) best = InnerMin{v, q};
        }
    }

    // local refinement: pairwise mass transfers with shrinking step
    for (double step = grid_resolution / 2.0; step >= grid_resolution / 50.0; step /= 5.0) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t a = 0; a < ns; ++a)
                for (std::size_t b = 0; b < ns; ++b) {
                    if (a == b || best.q[a] < step) continue;
                    auto q = best.q;
                    q[a] -= step;
                    q[b] += step;
                    const double v = reliable_term(prior, cond, family, q);
                    if (v < best.value - 1e-15) {
                        best = InnerMin{v, q};
                        improved = true;
                    }
                }
        }
    }
    return best;
}

double eavesdrop_term(const Distribution& prior, const Channel& cond, const AvwcFamily& family) {
    double worst = 0.0;
    for (const auto& sp : family.states())
        worst = std::max(worst, mutual_information(prior, compose_channels(cond, sp.wiretap)));
    return worst;
}

struct OuterPoint {
    std::vector<double> prior;
    std::vector<std::vector<double>> cond_rows;
};

double evaluate_outer(const OuterPoint& pt, const AvwcFamily& family, double grid_resolution,
                      Rng& rng, bool exhaustive, InnerMin* inner_out = nullptr) {
    const Distribution prior(pt.prior);
    const Channel cond(pt.cond_rows);
    const InnerMin inner = inner_min_q(prior, cond, family, grid_resolution, rng, exhaustive);
    if (inner_out) *inner_out = inner;
    return inner.value - eavesdrop_term(prior, cond, family);
}

}  // namespace

SingleLetterOptimum optimize_single_letter(const AvwcFamily& family, double grid_resolution,
                                           std::size_t aux_cap, std::size_t restarts,
                                           std::uint64_t seed) {
    require(grid_resolution > 0.0 && grid_resolution <= 0.5,
            "optimize_single_letter: bad grid resolution");
    const std::size_t nx = family.input_size();
    const std::size_t aux = aux_cap == 0 ? nx + 1 : aux_cap;
    const bool exhaustive = family.state_count() <= 3;
    Rng rng(seed);

    std::vector<OuterPoint> starts;
    {
        // constant U: zero objective floor
        OuterPoint pt;
        pt.prior.assign(aux, 0.0);
        pt.prior[0] = 1.0;
        pt.cond_rows.assign(aux, std::vector<double>(nx, 0.0));
        for (auto& row : pt.cond_rows) row[0] = 1.0;
        starts.push_back(pt);
    }
    {
        // identity embedding of X into the auxiliary alphabet
        OuterPoint pt;
        const std::size_t live = std::min(aux, nx);
        pt.prior.assign(aux, 0.0);
        for (std::size_t u = 0; u < live; ++u) pt.prior[u] = 1.0 / static_cast<double>(live);
        pt.cond_rows.assign(aux, std::vector<double>(nx, 0.0));
        for (std::size_t u = 0; u < aux; ++u) pt.cond_rows[u][u < nx ? u : 0] = 1.0;
        starts.push_back(pt);
    }
    for (std::size_t r = 0; r < restarts; ++r) {
        OuterPoint pt;
        pt.prior = rng.dirichlet(aux);
        pt.cond_rows.reserve(aux);
        for (std::size_t u = 0; u < aux; ++u) pt.cond_rows.push_back(rng.dirichlet(nx));
        starts.push_back(std::move(pt));
    }

    SingleLetterOptimum best;
    best.value_bits = -std::numeric_limits<double>::infinity();
    best.inner_exact = exhaustive;

    for (auto& start : starts) {
        OuterPoint pt = start;
        double value = evaluate_outer(pt, family, grid_resolution, rng, exhaustive);

        // coordinate ascent by pairwise mass transfers on the prior and on
        // each conditional row, shrinking steps; vector 0 is the prior,
        // vector 1+u is cond row u
        for (double step : {0.1, 0.03, 0.01}) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (std::size_t vec = 0; vec <= pt.cond_rows.size() && !improved; ++vec) {
                    auto& current = vec == 0 ? pt.prior : pt.cond_rows[vec - 1];
                    const std::size_t dim = current.size();
                    for (std::size_t a = 0; a < dim && !improved; ++a)
                        for (std::size_t b = 0; b < dim && !improved; ++b) {
                            if (a == b || current[a] < step) continue;
                            OuterPoint cand = pt;
                            auto& target = vec == 0 ? cand.prior : cand.cond_rows[vec - 1];
                            target[a] -= step;
                            target[b] += step;
                            const double v =
                                evaluate_outer(cand, family, grid_resolution, rng, exhaustive);
                            if (v > value + 1e-12) {
                                pt = std::move(cand);
                                value = v;
                                improved = true;
                            }
                        }
                }
            }
        }

        if (value > best.value_bits) {
            InnerMin inner;
            best.value_bits = evaluate_outer(pt, family, grid_resolution, rng, exhaustive, &inner);
            best.prior = Distribution(pt.prior);
            best.cond = Channel(pt.cond_rows);
            best.worst_q = Distribution(inner.q);
        }
    }
    return best;
}

}  // namespace avwc
