#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace avwc {

/// Ingestion tolerance: probability vectors must sum to 1 within this.
inline constexpr double kProbTolerance = 1e-9;

/// Default cap on input_size * output_size of any constructed channel.
inline constexpr std::size_t kDefaultJointCellCap = std::size_t{1} << 20;

/// A bit quantity that may be +infinity (KL divergence with escaping
/// support). Kept as an explicit sentinel so non-finite floats never leak
/// into downstream sums unchecked.
class ExtendedBits {
  public:
    ExtendedBits() = default;
    ExtendedBits(double bits) : bits_(bits) {}

    static ExtendedBits infinity() {
        ExtendedBits e;
        e.finite_ = false;
        e.bits_ = std::numeric_limits<double>::infinity();
        return e;
    }

    bool finite() const { return finite_; }

    /// Finite value in bits. Throws if the quantity is infinite.
    double value() const {
        if (!finite_) throw std::domain_error("ExtendedBits: value() on infinite quantity");
        return bits_;
    }

    /// Finite value, or +inf as a plain double (for display only).
    double value_or_inf() const { return bits_; }

  private:
    double bits_ = 0.0;
    bool finite_ = true;
};

/// Finite probability vector over an indexed alphabet.
///
/// Entries are validated on construction: non-negative, summing to 1
/// within kProbTolerance. Inputs inside the tolerance are renormalized;
/// anything else is rejected. Immutable afterwards.
class Distribution {
  public:
    explicit Distribution(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

    /// Uniform distribution on m symbols.
    static Distribution uniform(std::size_t m);
    /// Point mass at symbol x out of m.
    static Distribution point_mass(std::size_t x, std::size_t m);

    bool operator==(const Distribution& other) const { return probs_ == other.probs_; }

  private:
    std::vector<double> probs_;
};

/// Row-stochastic matrix: rows indexed by input symbol, columns by output
/// symbol. Every row is validated as a Distribution.
class Channel {
  public:
    Channel(std::vector<std::vector<double>> rows);
    Channel(std::size_t input_size, std::size_t output_size, std::vector<double> flat);

    std::size_t input_size() const { return input_size_; }
    std::size_t output_size() const { return output_size_; }

    double operator()(std::size_t x, std::size_t z) const {
        return flat_[x * output_size_ + z];
    }
    std::span<const double> row(std::size_t x) const {
        return {flat_.data() + x * output_size_, output_size_};
    }
    Distribution row_distribution(std::size_t x) const;

    /// Identity channel on m symbols.
    static Channel identity(std::size_t m);
    /// Channel where every row equals the given distribution.
    static Channel constant_rows(const Distribution& row, std::size_t input_size);
    /// Binary symmetric channel with crossover probability p.
    static Channel binary_symmetric(double p);

    /// Smallest strictly positive entry. Every row has one by stochasticity.
    double min_positive_entry() const;

    bool operator==(const Channel& other) const {
        return input_size_ == other.input_size_ && output_size_ == other.output_size_ &&
               flat_ == other.flat_;
    }

  private:
    std::size_t input_size_ = 0;
    std::size_t output_size_ = 0;
    std::vector<double> flat_;  // row-major

    void validate_rows();
};

}  // namespace avwc
