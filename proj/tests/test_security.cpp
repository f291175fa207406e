#include <doctest.h>

#include <cmath>

#include "avwc/counterexample.hpp"
#include "avwc/rng.hpp"
#include "avwc/security.hpp"
#include "oracles.hpp"

using namespace avwc;

namespace {

constexpr double kLn2 = 0.6931471805599453094;

Channel random_channel(Rng& rng, std::size_t in, std::size_t out) {
    std::vector<std::vector<double>> rows;
    for (std::size_t x = 0; x < in; ++x) rows.push_back(rng.dirichlet(out));
    return Channel(std::move(rows));
}

// wiretap system on the message alphabet itself
RandomEncoderCode identity_code(std::size_t j) {
    std::vector<std::size_t> decoder(j);
    for (std::size_t y = 0; y < j; ++y) decoder[y] = y;
    return RandomEncoderCode(Channel::identity(j), std::move(decoder));
}

struct RandomSystem {
    RandomEncoderCode code;
    std::vector<Channel> wiretaps;
};

RandomSystem random_system(Rng& rng) {
    const std::size_t j = 2 + rng.uniform_index(3);   // |U| <= 4
    const std::size_t nz = 2 + rng.uniform_index(4);  // |Z| <= 5
    const std::size_t nv = 1 + rng.uniform_index(3);  // <= 3 wiretaps
    std::vector<Channel> wiretaps;
    for (std::size_t v = 0; v < nv; ++v) wiretaps.push_back(random_channel(rng, j, nz));
    return RandomSystem{identity_code(j), std::move(wiretaps)};
}

}  // namespace

TEST_CASE("blahut-arimoto closed forms") {
    const BaResult flat =
        blahut_arimoto(Channel::constant_rows(Distribution({0.3, 0.7}), 4));
    CHECK(flat.converged);
    CHECK(flat.capacity_bits == doctest::Approx(0.0).epsilon(1e-12));

    const BaResult id = blahut_arimoto(Channel::identity(8));
    CHECK(id.converged);
    CHECK(id.capacity_bits == doctest::Approx(3.0).epsilon(1e-9));
    for (std::size_t x = 0; x < 8; ++x)
        CHECK(id.input[x] == doctest::Approx(0.125).epsilon(1e-6));

    const BaResult bsc = blahut_arimoto(Channel::binary_symmetric(0.25), 1e-9);
    CHECK(bsc.converged);
    CHECK(bsc.capacity_bits == doctest::Approx(oracle::kBscCap25).epsilon(1e-6));
}

TEST_CASE("blahut-arimoto trace is a monotone lower-bound sequence") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const BaResult r = blahut_arimoto(
            random_channel(rng, 2 + rng.uniform_index(4), 2 + rng.uniform_index(4)));
        CHECK(r.converged);
        for (std::size_t i = 1; i < r.capacity_trace.size(); ++i)
            CHECK(r.capacity_trace[i] >= r.capacity_trace[i - 1] - 1e-12);
    }
}

TEST_CASE("strong leakage") {
    const RandomEncoderCode code = identity_code(3);
    const Channel flat = Channel::constant_rows(Distribution({0.2, 0.5, 0.3}), 3);
    CHECK(strong_leakage(code, {flat}) == doctest::Approx(0.0).epsilon(1e-12));
    std::size_t worst = 99;
    CHECK(strong_leakage(code, {flat, Channel::identity(3)}, &worst) ==
          doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(worst == 1);

    // rate-1 code against a single revealed word matches the closed form
    const RandomEncoderCode naive = identity_code(4);
    const std::vector<Channel> thetas{v_theta_channel(make_theta(2, {2}))};
    CHECK(strong_leakage(naive, thetas) ==
          doctest::Approx(strong_leakage_closed_form(2, 1)).epsilon(1e-9));
}

TEST_CASE("blahut-arimoto non-convergence is flagged with the best iterate") {
    // asymmetric (Z-like) channel: the uniform start is not optimal
    const Channel z({{1.0, 0.0}, {0.5, 0.5}});
    const BaResult r = blahut_arimoto(z, 1e-12, 2);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2);
    CHECK(r.capacity_bits > 0.0);
    const BaResult full = blahut_arimoto(z, 1e-12, 100000);
    CHECK(r.capacity_bits <= full.capacity_bits + 1e-12);  // still a lower bound
}

TEST_CASE("mis advantage bounds strong leakage") {
    Rng rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const RandomSystem sys = random_system(rng);
        const double strong = strong_leakage(sys.code, sys.wiretaps);
        const double mis = mis_advantage(sys.code, sys.wiretaps);
        CHECK(mis >= strong - 1e-9);  // uniform prior is feasible for the max
    }
    CHECK(mis_advantage(identity_code(1), {Channel::constant_rows(
                                              Distribution({0.5, 0.5}), 1)}) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("ds advantage") {
    const RandomEncoderCode code = identity_code(3);
    CHECK(ds_advantage(code, {Channel::constant_rows(Distribution::uniform(4), 3)}) == 0.0);

    DsWitness w;
    CHECK(ds_advantage(code, {Channel({{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}})}, &w) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.u1 == 2);

    // J = 1 is defined as zero
    CHECK(ds_advantage(identity_code(1),
                       {Channel::constant_rows(Distribution({0.5, 0.5}), 1)}) == 0.0);

    // brute-force parity on a random instance
    Rng rng(33);
    const RandomSystem sys = random_system(rng);
    double brute = 0.0;
    for (const auto& v : sys.wiretaps)
        for (std::size_t a = 0; a < v.input_size(); ++a)
            for (std::size_t b = a + 1; b < v.input_size(); ++b) {
                long double tv = 0.0L;
                for (std::size_t z = 0; z < v.output_size(); ++z)
                    tv += std::fabs((long double)v(a, z) - v(b, z));
                brute = std::max(brute, (double)(0.5L * tv));
            }
    CHECK(ds_advantage(sys.code, sys.wiretaps) == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("ds advantage is invariant under wiretap output relabeling") {
    Rng rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t j = 2 + rng.uniform_index(3);
        const std::size_t nz = 2 + rng.uniform_index(4);
        const Channel v = random_channel(rng, j, nz);
        // random permutation of the outputs
        std::vector<std::size_t> perm(nz);
        for (std::size_t i = 0; i < nz; ++i) perm[i] = i;
        for (std::size_t i = nz; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
        std::vector<std::vector<double>> rows(j, std::vector<double>(nz));
        for (std::size_t x = 0; x < j; ++x)
            for (std::size_t z = 0; z < nz; ++z) rows[x][perm[z]] = v(x, z);
        const RandomEncoderCode code = identity_code(j);
        CHECK(ds_advantage(code, {v}) ==
              doctest::Approx(ds_advantage(code, {Channel(rows)})).epsilon(1e-12));
    }
}

TEST_CASE("ss advantage lower bound") {
    SearchConfig config;
    config.seed = 5;

    // all rows equal: no attack wins anything
    CHECK(ss_advantage_lower(identity_code(3),
                             {Channel::constant_rows(Distribution({0.25, 0.75}), 3)},
                             config) == doctest::Approx(0.0).epsilon(1e-12));

    // two disjoint rows, uniform pair prior, identity f: MAP wins w.p. 1
    CHECK(ss_advantage_lower(identity_code(2), {Channel::identity(2)}, config) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // sandwich against ds on random systems, pair priors enumerated
    Rng rng(35);
    for (int trial = 0; trial < 30; ++trial) {
        const RandomSystem sys = random_system(rng);
        const double ds = ds_advantage(sys.code, sys.wiretaps);
        const double ss = ss_advantage_lower(sys.code, sys.wiretaps, config);
        CHECK(ss >= ds / 2.0 - 1e-12);
        CHECK(ss <= ds + 1e-9);
    }
}

TEST_CASE("ss restricted mode above the partition cap") {
    SearchConfig config;
    config.partition_cap = 3;
    bool restricted = false;
    const double ss =
        ss_advantage_lower(identity_code(4), {Channel::identity(4)}, config, nullptr,
                           &restricted);
    CHECK(restricted);
    CHECK(ss >= 0.5 - 1e-12);  // pair priors still find the revealing attack
}

TEST_CASE("equivalence audit extremes") {
    SearchConfig config;
    // all rows equal: every quantity zero, audit passes
    EquivalenceAudit zero = equivalence_audit(
        identity_code(3), {Channel::constant_rows(Distribution::uniform(2), 3)}, config);
    CHECK(zero.all_pass);
    CHECK(zero.ds == 0.0);
    CHECK(zero.mis_bits <= 1e-9);

    // perfectly revealing 2-message system: ds = 1, ss = 1/2, mis = 1 bit
    EquivalenceAudit reveal =
        equivalence_audit(identity_code(2), {Channel::identity(2)}, config);
    CHECK(reveal.all_pass);
    CHECK(reveal.ds == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(reveal.ss_lower == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(reveal.mis_bits == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("equivalence audit on seeded random systems") {
    Rng rng(36);
    SearchConfig config;
    config.dirichlet_samples = 64;
    for (int trial = 0; trial < 50; ++trial) {
        const RandomSystem sys = random_system(rng);
        config.seed = Rng::derive(36, trial);
        const EquivalenceAudit audit = equivalence_audit(sys.code, sys.wiretaps, config);
        CHECK(audit.pass_ss_le_ds);
        CHECK(audit.pass_ds_le_2ss);
        CHECK(audit.pass_pinsker);
        CHECK(audit.pass_ds_to_mis);
        // squared Pinsker form in bits
        CHECK(audit.mis_bits >= audit.ds * audit.ds / (2.0 * kLn2) - 1e-9);
        if (audit.ds > 0.0)
            CHECK(audit.mis_bits <=
                  2.0 * audit.ds * std::log2(sys.wiretaps.front().output_size() / audit.ds) +
                      1e-9);
    }
}

TEST_CASE("single letter objective") {
    // constant rows carry nothing
    const AvwcFamily bsc_pair({{Channel::binary_symmetric(0.1), Channel::binary_symmetric(0.3)}});
    CHECK(single_letter_objective(Distribution::uniform(2),
                                  Channel::constant_rows(Distribution({0.5, 0.5}), 2), bsc_pair,
                                  Distribution::uniform(1)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // degraded BSC pair with U = X identity and uniform input
    CHECK(single_letter_objective(Distribution::uniform(2), Channel::identity(2), bsc_pair,
                                  Distribution::uniform(1)) ==
          doctest::Approx(oracle::kDegradedBscGap).epsilon(1e-9));

    // adding a wiretap state can only shrink the objective
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const Channel w0 = random_channel(rng, 2, 2), v0 = random_channel(rng, 2, 2);
        const Channel v1 = random_channel(rng, 2, 2);
        const AvwcFamily one({{w0, v0}});
        const AvwcFamily two({{w0, v0}, {w0, v1}});
        const Distribution prior(rng.dirichlet(3));
        const Channel cond = random_channel(rng, 3, 2);
        CHECK(single_letter_objective(prior, cond, two, Distribution::uniform(2)) <=
              single_letter_objective(prior, cond, one, Distribution::uniform(1)) + 1e-12);
    }

    // two-state XOR mains: uniform q wipes out the reliable term
    const Channel xor0 = Channel::identity(2);
    const Channel xor1({{0.0, 1.0}, {1.0, 0.0}});
    const AvwcFamily xor_family({{xor0, xor0}, {xor1, xor0}});
    const Distribution prior({0.3, 0.7});
    const Channel avg = mixture_channel(xor_family.main_channels(), Distribution::uniform(2));
    CHECK(mutual_information(prior, avg) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("optimize single letter") {
    // degraded BSC pair: the identity warm start already achieves the gap
    const AvwcFamily bsc_pair({{Channel::binary_symmetric(0.1), Channel::binary_symmetric(0.3)}});
    const SingleLetterOptimum opt = optimize_single_letter(bsc_pair, 1e-2, 0, 4, 7);
    CHECK(opt.inner_exact);
    CHECK(opt.value_bits >= oracle::kDegradedBscGap - 2e-3);

    // wiretaps equal to mains: nothing positive exists
    const Channel w = Channel::binary_symmetric(0.2);
    const AvwcFamily hopeless({{w, w}});
    CHECK(optimize_single_letter(hopeless, 1e-2, 0, 4, 7).value_bits <= 1e-6);
    CHECK(optimize_single_letter(hopeless, 1e-2, 0, 4, 7).value_bits >= -1e-12);

    // more than three states falls back to the flagged heuristic inner min
    Rng rng(38);
    std::vector<AvwcFamily::StatePair> states;
    for (int s = 0; s < 4; ++s)
        states.push_back({Channel({rng.dirichlet(2), rng.dirichlet(2)}),
                          Channel({rng.dirichlet(2), rng.dirichlet(2)})});
    const SingleLetterOptimum heur = optimize_single_letter(AvwcFamily(states), 1e-2, 0, 2, 7);
    CHECK_FALSE(heur.inner_exact);
    CHECK(heur.value_bits >= -1e-12);
}
