#include <doctest.h>

#include <cmath>

#include "avwc/probability.hpp"
#include "avwc/rng.hpp"
#include "oracles.hpp"

using namespace avwc;

namespace {

Distribution random_distribution(Rng& rng, std::size_t dim) {
    return Distribution(rng.dirichlet(dim));
}

Channel random_channel(Rng& rng, std::size_t in, std::size_t out) {
    std::vector<std::vector<double>> rows;
    for (std::size_t x = 0; x < in; ++x) rows.push_back(rng.dirichlet(out));
    return Channel(std::move(rows));
}

std::vector<std::vector<long double>> to_ld(const Channel& ch) {
    std::vector<std::vector<long double>> rows(ch.input_size(),
                                               std::vector<long double>(ch.output_size()));
    for (std::size_t x = 0; x < ch.input_size(); ++x)
        for (std::size_t z = 0; z < ch.output_size(); ++z) rows[x][z] = ch(x, z);
    return rows;
}

std::vector<long double> to_ld(const Distribution& d) {
    std::vector<long double> v(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) v[i] = d[i];
    return v;
}

}  // namespace

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(Distribution({0.5, 0.6}), std::invalid_argument);   // sums to 1.1
    CHECK_THROWS_AS(Distribution({1.5, -0.5}), std::invalid_argument);  // negative entry
    CHECK_THROWS_AS(Distribution(std::vector<double>{}), std::invalid_argument);
    // inside tolerance: renormalized
    Distribution d({0.5, 0.5 + 5e-10});
    CHECK(d[0] + d[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("entropy") {
    CHECK(entropy(Distribution({1.0, 0.0})) == 0.0);
    CHECK(entropy(Distribution({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(Distribution({0.25, 0.75})) ==
          doctest::Approx(oracle::kEntropyQuarter).epsilon(1e-12));
}

TEST_CASE("kl divergence") {
    const Distribution p({0.3, 0.7});
    CHECK(kl_divergence(p, p).value() == 0.0);
    CHECK(kl_divergence(Distribution({1.0, 0.0}), Distribution({0.5, 0.5})).value() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kl_divergence(p, Distribution({0.6, 0.4})).value() ==
          doctest::Approx(oracle::kKl37vs64).epsilon(1e-12));
    // support escape gives the infinite sentinel, not a raw float
    const ExtendedBits inf = kl_divergence(Distribution({0.5, 0.5}), Distribution({1.0, 0.0}));
    CHECK_FALSE(inf.finite());
    CHECK_THROWS_AS(inf.value(), std::domain_error);
    CHECK_THROWS_AS(kl_divergence(p, Distribution({1.0})), std::invalid_argument);
}

TEST_CASE("total variation") {
    const Distribution p({0.2, 0.8}), q({0.5, 0.5});
    CHECK(total_variation(p, p) == 0.0);
    CHECK(total_variation(Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) == 1.0);
    CHECK(total_variation(p, q) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("mutual information") {
    CHECK(mutual_information(Distribution::uniform(4), Channel::identity(4)) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mutual_information(Distribution::uniform(3),
                             Channel::constant_rows(Distribution({0.2, 0.8}), 3)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mutual_information(Distribution::uniform(2), Channel::binary_symmetric(0.25)) ==
          doctest::Approx(oracle::kBscCap25).epsilon(1e-12));
}

TEST_CASE("output distribution") {
    const Channel doubly({{0.3, 0.7}, {0.7, 0.3}});
    const Distribution out = output_distribution(Distribution::uniform(2), doubly);
    CHECK(out[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(output_distribution(Distribution::point_mass(1, 2), doubly)[0] ==
          doctest::Approx(0.7).epsilon(1e-15));

    Rng rng(11);
    const Channel ch = random_channel(rng, 3, 4);
    const Distribution in = random_distribution(rng, 3);
    const Distribution got = output_distribution(in, ch);
    for (std::size_t z = 0; z < 4; ++z) {
        long double want = 0.0L;
        for (std::size_t x = 0; x < 3; ++x) want += (long double)in[x] * ch(x, z);
        CHECK(got[z] == doctest::Approx((double)want).epsilon(1e-12));
    }
}

TEST_CASE("compose channels") {
    const Channel a = Channel::binary_symmetric(0.1);
    CHECK(compose_channels(a, Channel::identity(2)) == a);
    const Channel flat = Channel::constant_rows(Distribution({0.25, 0.75}), 2);
    const Channel b = compose_channels(a, flat);
    CHECK(b(0, 0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(b(1, 0) == doctest::Approx(0.25).epsilon(1e-12));

    Rng rng(12);
    const Channel x = random_channel(rng, 3, 5), y = random_channel(rng, 5, 2);
    const Channel got = compose_channels(x, y);
    const auto want = oracle::compose(to_ld(x), to_ld(y));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(got(i, j) == doctest::Approx((double)want[i][j]).epsilon(1e-12));
}

TEST_CASE("product channel") {
    const Channel a = Channel::binary_symmetric(0.1);
    CHECK(product_channel({a}) == a);
    CHECK(product_channel({Channel::identity(2), Channel::identity(3)}) == Channel::identity(6));

    // two 2x2 factors against direct 4x4 enumeration, little-endian ids
    const Channel b = Channel::binary_symmetric(0.3);
    const Channel prod = product_channel({a, b});
    for (std::size_t x0 = 0; x0 < 2; ++x0)
        for (std::size_t x1 = 0; x1 < 2; ++x1)
            for (std::size_t z0 = 0; z0 < 2; ++z0)
                for (std::size_t z1 = 0; z1 < 2; ++z1)
                    CHECK(prod(x0 + 2 * x1, z0 + 2 * z1) ==
                          doctest::Approx(a(x0, z0) * b(x1, z1)).epsilon(1e-15));

    CHECK_THROWS_AS(product_channel({}), std::invalid_argument);
    CHECK_THROWS_AS(product_channel(std::vector<Channel>(3, Channel::identity(128)), 1 << 20),
                    std::length_error);
}

TEST_CASE("information radius bound") {
    const Distribution ref({0.5, 0.5});
    CHECK(information_radius_bound({ref, ref}, ref).value() == 0.0);
    const Distribution row({0.9, 0.1});
    CHECK(information_radius_bound({row}, ref).value() ==
          doctest::Approx(kl_divergence(row, ref).value()).epsilon(1e-15));

    Rng rng(13);
    std::vector<Distribution> rows{random_distribution(rng, 4), random_distribution(rng, 4),
                                   random_distribution(rng, 4)};
    std::vector<std::vector<double>> mat;
    for (const auto& r : rows) mat.push_back(r.probs());
    const Channel ch(mat);
    const Distribution prior = Distribution::uniform(3);
    const Distribution marginal = output_distribution(prior, ch);
    CHECK(information_radius_bound(rows, marginal).value() + 1e-9 >=
          mutual_information(prior, ch));
}

TEST_CASE("kl non-negativity and pinsker on random pairs") {
    Rng rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + rng.uniform_index(5);
        const Distribution p = random_distribution(rng, dim);
        const Distribution q = random_distribution(rng, dim);
        const double kl = kl_divergence(p, q).value();
        const double tv = total_variation(p, q);
        CHECK(kl >= -1e-12);
        if (kl <= 1e-9) CHECK(tv <= 2e-5);  // equality only near p = q
        CHECK(kl >= (2.0 / std::log(2.0)) * tv * tv - 1e-12);
    }
}

TEST_CASE("data processing on random triples") {
    Rng rng(102);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t nx = 2 + rng.uniform_index(3);
        const std::size_t nm = 2 + rng.uniform_index(3);
        const std::size_t nz = 2 + rng.uniform_index(3);
        const Distribution input = random_distribution(rng, nx);
        const Channel ch = random_channel(rng, nx, nm);
        const Channel post = random_channel(rng, nm, nz);
        CHECK(mutual_information(input, compose_channels(ch, post)) <=
              mutual_information(input, ch) + 1e-9);
    }
}

TEST_CASE("information radius dominates mutual information for any prior and reference") {
    Rng rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t nx = 2 + rng.uniform_index(3);
        const std::size_t nz = 2 + rng.uniform_index(4);
        const Channel ch = random_channel(rng, nx, nz);
        const Distribution prior = random_distribution(rng, nx);
        const Distribution reference = random_distribution(rng, nz);
        std::vector<Distribution> rows;
        for (std::size_t x = 0; x < nx; ++x) rows.push_back(ch.row_distribution(x));
        const ExtendedBits bound = information_radius_bound(rows, reference);
        REQUIRE(bound.finite());
        CHECK(mutual_information(prior, ch) <= bound.value() + 1e-9);
    }
}

TEST_CASE("product channel rows stay stochastic") {
    Rng rng(104);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Channel> factors;
        const std::size_t count = 1 + rng.uniform_index(3);
        for (std::size_t i = 0; i < count; ++i)
            factors.push_back(
                random_channel(rng, 2 + rng.uniform_index(2), 2 + rng.uniform_index(2)));
        const Channel prod = product_channel(factors);
        for (std::size_t x = 0; x < prod.input_size(); ++x) {
            long double sum = 0.0L;
            for (std::size_t z = 0; z < prod.output_size(); ++z) sum += prod(x, z);
            CHECK(std::fabs((double)(sum - 1.0L)) <= 1e-9);
        }
    }
}

TEST_CASE("random mutual information matches the joint-loop oracle") {
    Rng rng(105);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t nx = 2 + rng.uniform_index(4);
        const std::size_t nz = 2 + rng.uniform_index(4);
        const Channel ch = random_channel(rng, nx, nz);
        const Distribution prior = random_distribution(rng, nx);
        const double got = mutual_information(prior, ch);
        const double want = (double)oracle::mutual_information_bits(to_ld(prior), to_ld(ch));
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}
