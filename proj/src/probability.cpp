#include "avwc/probability.hpp"

#include <cmath>

namespace avwc {

namespace {
constexpr double kLn2 = 0.6931471805599453094;

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
}  // namespace

double entropy(const Distribution& p) {
    double nats = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) nats -= p[i] * std::log(p[i]);
    return nats / kLn2;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p out of [0,1]");
    double nats = 0.0;
    if (p > 0.0) nats -= p * std::log(p);
    if (p < 1.0) nats -= (1.0 - p) * std::log(1.0 - p);
    return nats / kLn2;
}

ExtendedBits kl_divergence(const Distribution& p, const Distribution& q) {
    require_same_dim(p.size(), q.size(), "kl_divergence");
    double nats = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return ExtendedBits::infinity();
        nats += p[i] * std::log(p[i] / q[i]);
    }
    return ExtendedBits(nats / kLn2);
}

double total_variation(const Distribution& p, const Distribution& q) {
    require_same_dim(p.size(), q.size(), "total_variation");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
    return 0.5 * sum;
}

Distribution output_distribution(const Distribution& input, const Channel& ch) {
    require_same_dim(input.size(), ch.input_size(), "output_distribution");
    std::vector<double> out(ch.output_size(), 0.0);
    for (std::size_t x = 0; x < ch.input_size(); ++x) {
        const double px = input[x];
        if (px == 0.0) continue;
        auto row = ch.row(x);
        for (std::size_t z = 0; z < ch.output_size(); ++z) out[z] += px * row[z];
    }
    return Distribution(std::move(out));
}

double mutual_information(const Distribution& input, const Channel& ch) {
    require_same_dim(input.size(), ch.input_size(), "mutual_information");
    const Distribution marginal = output_distribution(input, ch);
    double nats = 0.0;
    for (std::size_t x = 0; x < ch.input_size(); ++x) {
        const double px = input[x];
        if (px == 0.0) continue;
        auto row = ch.row(x);
        double row_nats = 0.0;
        for (std::size_t z = 0; z < ch.output_size(); ++z) {
            // marginal[z] >= px * row[z] > 0 whenever the term is nonzero
            if (row[z] > 0.0) row_nats += row[z] * std::log(row[z] / marginal[z]);
        }
        nats += px * row_nats;
    }
    double bits = nats / kLn2;
    // I >= 0; rounding on near-independent channels can leave ~-1e-16
    return bits < 0.0 ? 0.0 : bits;
}

Channel compose_channels(const Channel& first, const Channel& second) {
    require_same_dim(first.output_size(), second.input_size(), "compose_channels");
    std::vector<double> flat(first.input_size() * second.output_size(), 0.0);
    for (std::size_t x = 0; x < first.input_size(); ++x) {
        auto fr = first.row(x);
        for (std::size_t m = 0; m < first.output_size(); ++m) {
            const double w = fr[m];
            if (w == 0.0) continue;
            auto sr = second.row(m);
            double* out = flat.data() + x * second.output_size();
            for (std::size_t z = 0; z < second.output_size(); ++z) out[z] += w * sr[z];
        }
    }
    return Channel(first.input_size(), second.output_size(), std::move(flat));
}

Channel product_channel(const std::vector<Channel>& factors, std::size_t cell_cap) {
    if (factors.empty()) throw std::invalid_argument("product_channel: empty factor list");
    std::size_t in = 1, out = 1;
    for (const auto& f : factors) {
        if (in > cell_cap / f.input_size() || out > cell_cap / f.output_size())
            throw std::length_error("product_channel: joint cell cap exceeded");
        in *= f.input_size();
        out *= f.output_size();
        if (in > cell_cap / out)
            throw std::length_error("product_channel: joint cell cap exceeded");
    }

    // Little-endian mixed radix: factor 0 is the least significant digit.
    std::vector<double> acc{1.0};
    std::size_t acc_in = 1, acc_out = 1;
    for (const auto& f : factors) {
        const std::size_t nin = acc_in * f.input_size();
        const std::size_t nout = acc_out * f.output_size();
        std::vector<double> next(nin * nout, 0.0);
        for (std::size_t u = 0; u < acc_in; ++u)
            for (std::size_t x = 0; x < f.input_size(); ++x)
                for (std::size_t v = 0; v < acc_out; ++v) {
                    const double base = acc[u * acc_out + v];
                    if (base == 0.0) continue;
                    auto fr = f.row(x);
                    double* dst = next.data() + (u + acc_in * x) * nout;
                    for (std::size_t z = 0; z < f.output_size(); ++z)
                        dst[v + acc_out * z] = base * fr[z];
                }
        acc = std::move(next);
        acc_in = nin;
        acc_out = nout;
    }
    return Channel(acc_in, acc_out, std::move(acc));
}

Channel mixture_channel(const std::vector<Channel>& channels, const Distribution& weights) {
    if (channels.empty()) throw std::invalid_argument("mixture_channel: empty list");
    require_same_dim(channels.size(), weights.size(), "mixture_channel");
    const std::size_t in = channels.front().input_size();
    const std::size_t out = channels.front().output_size();
    std::vector<double> flat(in * out, 0.0);
    for (std::size_t s = 0; s < channels.size(); ++s) {
        const auto& c = channels[s];
        require_same_dim(c.input_size(), in, "mixture_channel");
        require_same_dim(c.output_size(), out, "mixture_channel");
        const double w = weights[s];
        if (w == 0.0) continue;
        for (std::size_t x = 0; x < in; ++x) {
            auto row = c.row(x);
            for (std::size_t z = 0; z < out; ++z) flat[x * out + z] += w * row[z];
        }
    }
    return Channel(in, out, std::move(flat));
}

ExtendedBits information_radius_bound(const std::vector<Distribution>& rows,
                                      const Distribution& reference) {
    if (rows.empty()) throw std::invalid_argument("information_radius_bound: no rows");
    double best = 0.0;
    for (const auto& r : rows) {
        ExtendedBits d = kl_divergence(r, reference);
        if (!d.finite()) return ExtendedBits::infinity();
        if (d.value() > best) best = d.value();
    }
    return ExtendedBits(best);
}

}  // namespace avwc
