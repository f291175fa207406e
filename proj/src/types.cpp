#include "avwc/types.hpp"

#include <cmath>
#include <numeric>

namespace avwc {

namespace {

// Accepts tiny negative noise from upstream arithmetic, rejects real
// negatives. Returns the clamped vector's sum.
double clamp_and_sum(std::vector<double>& v, const char* what) {
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) {
            if (v[i] < -1e-12)
                throw std::invalid_argument(std::string(what) + ": negative entry at index " +
                                            std::to_string(i));
            v[i] = 0.0;
        }
        if (!std::isfinite(v[i]))
            throw std::invalid_argument(std::string(what) + ": non-finite entry at index " +
                                        std::to_string(i));
        sum += v[i];
    }
    return sum;
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("Distribution: dimension must be >= 1");
    const double sum = clamp_and_sum(probs_, "Distribution");
    if (std::abs(sum - 1.0) > kProbTolerance)
        throw std::invalid_argument("Distribution: entries sum to " + std::to_string(sum) +
                                    ", outside tolerance");
    if (sum != 1.0)
        for (auto& p : probs_) p /= sum;
}

Distribution Distribution::uniform(std::size_t m) {
    if (m == 0) throw std::invalid_argument("Distribution::uniform: empty alphabet");
    return Distribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Distribution Distribution::point_mass(std::size_t x, std::size_t m) {
    if (x >= m) throw std::invalid_argument("Distribution::point_mass: symbol out of range");
    std::vector<double> v(m, 0.0);
    v[x] = 1.0;
    return Distribution(std::move(v));
}

Channel::Channel(std::vector<std::vector<double>> rows) {
    if (rows.empty()) throw std::invalid_argument("Channel: needs at least one row");
    input_size_ = rows.size();
    output_size_ = rows.front().size();
    flat_.reserve(input_size_ * output_size_);
    for (const auto& r : rows) {
        if (r.size() != output_size_)
            throw std::invalid_argument("Channel: ragged rows");
        flat_.insert(flat_.end(), r.begin(), r.end());
    }
    validate_rows();
}

Channel::Channel(std::size_t input_size, std::size_t output_size, std::vector<double> flat)
    : input_size_(input_size), output_size_(output_size), flat_(std::move(flat)) {
    if (input_size_ == 0 || output_size_ == 0)
        throw std::invalid_argument("Channel: empty alphabet");
    if (flat_.size() != input_size_ * output_size_)
        throw std::invalid_argument("Channel: flat storage size mismatch");
    validate_rows();
}

void Channel::validate_rows() {
    for (std::size_t x = 0; x < input_size_; ++x) {
        double* begin = flat_.data() + x * output_size_;
        std::vector<double> r(begin, begin + output_size_);
        double sum;
        try {
            sum = clamp_and_sum(r, "Channel row");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("Channel: row " + std::to_string(x) + ": " + e.what());
        }
        if (std::abs(sum - 1.0) > kProbTolerance)
            throw std::invalid_argument("Channel: row " + std::to_string(x) + " sums to " +
                                        std::to_string(sum) + ", outside tolerance");
        if (sum != 1.0)
            for (auto& p : r) p /= sum;
        std::copy(r.begin(), r.end(), begin);
    }
}

Distribution Channel::row_distribution(std::size_t x) const {
    auto r = row(x);
    return Distribution(std::vector<double>(r.begin(), r.end()));
}

Channel Channel::identity(std::size_t m) {
    std::vector<double> flat(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) flat[i * m + i] = 1.0;
    return Channel(m, m, std::move(flat));
}

Channel Channel::constant_rows(const Distribution& row, std::size_t input_size) {
    std::vector<double> flat;
    flat.reserve(input_size * row.size());
    for (std::size_t x = 0; x < input_size; ++x)
        flat.insert(flat.end(), row.probs().begin(), row.probs().end());
    return Channel(input_size, row.size(), std::move(flat));
}

Channel Channel::binary_symmetric(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_symmetric: p out of [0,1]");
    return Channel({{1.0 - p, p}, {p, 1.0 - p}});
}

double Channel::min_positive_entry() const {
    double v = std::numeric_limits<double>::infinity();
    for (double e : flat_)
        if (e > 0.0 && e < v) v = e;
    return v;
}

}  // namespace avwc
