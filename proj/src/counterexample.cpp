#include "avwc/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "avwc/probability.hpp"

namespace avwc {

namespace {

std::size_t checked_word_count(std::size_t n, std::size_t cell_cap) {
    if (n == 0 || n >= 63) throw std::invalid_argument("block length out of range");
    const std::size_t words = std::size_t{1} << n;
    if (words > cell_cap / words) throw std::length_error("joint cell cap exceeded");
    return words;
}

}  // namespace

bool ThetaSubset::contains(std::size_t word) const {
    return std::binary_search(members.begin(), members.end(), word);
}

ThetaSubset make_theta(std::size_t n, std::vector<std::size_t> members) {
    if (n == 0 || n >= 63) throw std::invalid_argument("make_theta: block length out of range");
    const std::size_t words = std::size_t{1} << n;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t w : members)
        if (w >= words) throw std::invalid_argument("make_theta: member out of range");
    return ThetaSubset{n, std::move(members)};
}

ThetaSubset sample_theta(std::size_t n, std::size_t f, Rng& rng) {
    const std::size_t words = std::size_t{1} << n;
    if (f > words) throw std::invalid_argument("sample_theta: f exceeds 2^n");
    // Floyd's algorithm: f uniform draws without replacement.
    std::vector<std::size_t> picked;
    picked.reserve(f);
    for (std::size_t i = words - f; i < words; ++i) {
        const std::size_t t = rng.uniform_index(i + 1);
        if (std::find(picked.begin(), picked.end(), t) == picked.end())
            picked.push_back(t);
        else
            picked.push_back(i);
    }
    return make_theta(n, std::move(picked));
}

std::size_t theta_size_for_rate(std::size_t n, double a) {
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("theta_size_for_rate: a out of [0,1]");
    return static_cast<std::size_t>(std::ceil(std::exp2(static_cast<double>(n) * a)));
}

Channel v_theta_channel(const ThetaSubset& theta, std::size_t cell_cap) {
    const std::size_t words = checked_word_count(theta.n, cell_cap);
    const double noise = 1.0 / static_cast<double>(words);
    std::vector<double> flat(words * words, 0.0);
    for (std::size_t x = 0; x < words; ++x) {
        double* row = flat.data() + x * words;
        if (theta.contains(x))
            row[x] = 1.0;
        else
            std::fill(row, row + words, noise);
    }
    return Channel(words, words, std::move(flat));
}

RandomEncoderCode naive_identity_code(std::size_t n, std::size_t cell_cap) {
    const std::size_t words = checked_word_count(n, cell_cap);
    std::vector<std::size_t> decoder(words);
    std::iota(decoder.begin(), decoder.end(), std::size_t{0});
    return RandomEncoderCode(Channel::identity(words), std::move(decoder));
}

double strong_leakage_closed_form(std::size_t n, std::size_t f) {
    const double words = std::exp2(static_cast<double>(n));
    if (f < 1 || static_cast<double>(f) > words)
        throw std::invalid_argument("strong_leakage_closed_form: f out of range");
    const double fr = static_cast<double>(f);
    double bits = fr * static_cast<double>(n) / words;
    if (fr < words)  // the coefficient vanishes at f = 2^n, killing the log(0)
        bits -= ((words - fr) * (words - fr) / (words * words)) * std::log2(1.0 - fr / words);
    bits -= ((2.0 * words - fr) * fr / (words * words)) * std::log2(2.0 - fr / words);
    return bits;
}

SkewedAttackReport skewed_attack(std::size_t n, std::size_t f, const ThetaSubset& theta) {
    if (theta.n != n || theta.size() != f)
        throw std::invalid_argument("skewed_attack: theta does not match (n, f)");
    if (!theta.contains(0))
        throw std::invalid_argument("skewed_attack: theta must contain the all-zero word");
    const std::size_t words = std::size_t{1} << n;
    const double wd = static_cast<double>(words);

    SkewedAttackReport report;
    report.bound_bits =
        0.5 * std::log2(2.0 / (1.0 + (wd - static_cast<double>(f)) / (wd * (wd - 1.0))));

    report.prior.assign(words, 0.5 / (wd - 1.0));
    report.prior[0] = 0.5;
    const Channel v = v_theta_channel(theta);
    report.exact_leakage_bits = mutual_information(Distribution(report.prior), v);

    if (report.exact_leakage_bits < report.bound_bits - 1e-9)
        throw std::logic_error("skewed_attack: exact leakage fell below its closed-form bound");
    return report;
}

Case1Report case1_attack(const RandomEncoderCode& code, double a, double g,
                         std::size_t cell_cap) {
    const std::size_t words = code.input_word_count();
    std::size_t n = 0;
    while ((std::size_t{1} << n) < words) ++n;
    if ((std::size_t{1} << n) != words)
        throw std::invalid_argument("case1_attack: input alphabet is not a binary block");

    const std::size_t j = code.message_count();
    const double r = std::log2(static_cast<double>(j)) / static_cast<double>(n);
    const double b = 1.0 - r;
    if (r <= 1.0 - a + 1e-12)
        throw std::invalid_argument("case1_attack: requires rate r > 1 - a");
    if (g < 0.0 || g >= 1.0) throw std::invalid_argument("case1_attack: g out of [0,1)");

    // Decoding sets, ascending by size, ties by smallest contained word id.
    std::vector<std::vector<std::size_t>> sets(j);
    for (std::size_t y = 0; y < code.decoder.size(); ++y)
        if (code.decoder[y] != RandomEncoderCode::kErrorSymbol) sets[code.decoder[y]].push_back(y);
    std::vector<std::size_t> order(j);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
        if (sets[u].size() != sets[v].size()) return sets[u].size() < sets[v].size();
        const std::size_t mu = sets[u].empty() ? 0 : sets[u].front();
        const std::size_t mv = sets[v].empty() ? 0 : sets[v].front();
        return mu < mv;
    });

    const std::size_t covered =
        static_cast<std::size_t>(std::llround(std::exp2(static_cast<double>(n) * (a - b))));
    if (covered < 1 || covered > j)
        throw std::invalid_argument("case1_attack: 2^{n(a-b)} messages out of range");
    const std::size_t f = theta_size_for_rate(n, a);

    std::vector<bool> in_theta(words, false);
    std::size_t cover_size = 0;
    for (std::size_t i = 0; i < covered; ++i)
        for (std::size_t y : sets[order[i]])
            if (!in_theta[y]) {
                in_theta[y] = true;
                ++cover_size;
            }
    if (cover_size > f)
        throw std::invalid_argument("case1_attack: decoding-set cover exceeds 2^{n a}");
    // Pad with the smallest unused words so |Theta| = 2^{n a} exactly.
    for (std::size_t w = 0; w < words && cover_size < f; ++w)
        if (!in_theta[w]) {
            in_theta[w] = true;
            ++cover_size;
        }
    std::vector<std::size_t> members;
    members.reserve(f);
    for (std::size_t w = 0; w < words; ++w)
        if (in_theta[w]) members.push_back(w);

    Case1Report report;
    report.theta = make_theta(n, std::move(members));
    report.covered_messages = covered;

    report.prior.assign(j, 0.0);
    for (std::size_t i = 0; i < covered; ++i)
        report.prior[order[i]] = (1.0 - g) / static_cast<double>(covered);
    if (covered < j) {
        const double tail = g / static_cast<double>(j - covered);
        for (std::size_t i = covered; i < j; ++i) report.prior[order[i]] = tail;
    } else if (g != 0.0) {
        throw std::invalid_argument("case1_attack: tail mass with no uncovered messages");
    }

    const Channel v = v_theta_channel(report.theta, cell_cap);
    const Channel induced = induced_message_channel(code, v);
    double success = 0.0;
    for (std::size_t u = 0; u < j; ++u) {
        if (report.prior[u] == 0.0) continue;
        double hit = 0.0;
        for (std::size_t y : sets[u]) hit += induced(u, y);
        success += report.prior[u] * hit;
    }
    report.eavesdropper_success = success;

    const Distribution prior(report.prior);
    report.message_entropy_bits = entropy(prior);
    const double pe = std::max(0.0, 1.0 - success);
    report.fano_lower_bound =
        (report.message_entropy_bits - binary_entropy(std::min(pe, 1.0)) -
         pe * std::log2(static_cast<double>(j - 1))) /
        static_cast<double>(n);
    return report;
}

PartitionCode case2_partition_code(std::size_t n, double r, std::size_t cell_cap) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("case2_partition_code: r out of [0,1]");
    const std::size_t words = checked_word_count(n, cell_cap);
    const double nb = static_cast<double>(n) * (1.0 - r);
    const double nb_rounded = std::round(nb);
    if (std::abs(nb - nb_rounded) > 1e-9)
        throw std::invalid_argument("case2_partition_code: n(1-r) must be an integer");
    const std::size_t cell_size = std::size_t{1} << static_cast<std::size_t>(nb_rounded);
    const std::size_t cells = words / cell_size;

    std::vector<double> enc_flat(cells * words, 0.0);
    const double w = 1.0 / static_cast<double>(cell_size);
    for (std::size_t i = 0; i < cells; ++i)
        for (std::size_t x = i * cell_size; x < (i + 1) * cell_size; ++x)
            enc_flat[i * words + x] = w;
    std::vector<std::size_t> decoder(words);
    for (std::size_t y = 0; y < words; ++y) decoder[y] = y / cell_size;

    return PartitionCode{n, r, cells, cell_size,
                         RandomEncoderCode(Channel(cells, words, std::move(enc_flat)),
                                           std::move(decoder))};
}

double case2_leakage_bound(std::size_t n, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("case2_leakage_bound: requires a < b");
    if (a < 0.0 || b > 1.0) throw std::invalid_argument("case2_leakage_bound: range");
    const double nd = static_cast<double>(n);
    const double small = std::exp2(-nd * (1.0 - b));
    return std::exp2(-nd * (b - a)) * (1.0 + small) * std::log2(std::exp2(nd * (1.0 - b)) * (1.0 + small));
}

double case2_radius_certificate(const PartitionCode& pc, const ThetaSubset& theta,
                                std::size_t cell_cap) {
    if (theta.n != pc.n) throw std::invalid_argument("case2_radius_certificate: n mismatch");
    const std::size_t words = std::size_t{1} << pc.n;
    const Channel induced = induced_message_channel(pc.code, v_theta_channel(theta, cell_cap));
    const Distribution uniform_ref = Distribution::uniform(words);
    double worst = 0.0;
    for (std::size_t i = 0; i < pc.cell_count; ++i) {
        const ExtendedBits d = kl_divergence(induced.row_distribution(i), uniform_ref);
        worst = std::max(worst, d.value());  // uniform reference dominates everything
    }
    return worst;
}

Channel gavc_erasure_channel(const ThetaSubset& theta, std::size_t cell_cap) {
    const std::size_t words = checked_word_count(theta.n, cell_cap);
    const std::size_t erasure = words;  // extra last output symbol
    std::vector<double> flat(words * (words + 1), 0.0);
    for (std::size_t x = 0; x < words; ++x) {
        double* row = flat.data() + x * (words + 1);
        row[theta.contains(x) ? erasure : x] = 1.0;
    }
    return Channel(words, words + 1, std::move(flat));
}

}  // namespace avwc
