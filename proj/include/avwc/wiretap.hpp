#pragma once

#include <vector>

#include "avwc/probability.hpp"
#include "avwc/types.hpp"

namespace avwc {

/// Stochastic encoder (one row per message) plus a total deterministic
/// decoder. The decoder may output kErrorSymbol, which always counts as a
/// decoding error.
struct RandomEncoderCode {
    static constexpr std::size_t kErrorSymbol = static_cast<std::size_t>(-1);

    Channel encoder;                  // message id -> input word id
    std::vector<std::size_t> decoder; // output word id -> message id or kErrorSymbol

    RandomEncoderCode(Channel enc, std::vector<std::size_t> dec);

    std::size_t message_count() const { return encoder.input_size(); }
    std::size_t input_word_count() const { return encoder.output_size(); }
};

/// State-indexed family of (main, wiretap) letter channel pairs sharing one
/// input alphabet.
class AvwcFamily {
  public:
    struct StatePair {
        Channel main;
        Channel wiretap;
    };

    explicit AvwcFamily(std::vector<StatePair> states);

    std::size_t state_count() const { return states_.size(); }
    const StatePair& state(std::size_t s) const { return states_[s]; }
    const std::vector<StatePair>& states() const { return states_; }

    std::size_t input_size() const { return states_.front().main.input_size(); }
    std::size_t main_output_size() const { return states_.front().main.output_size(); }
    std::size_t wiretap_output_size() const { return states_.front().wiretap.output_size(); }

    std::vector<Channel> main_channels() const;
    std::vector<Channel> wiretap_channels() const;

  private:
    std::vector<StatePair> states_;
};

/// One block length of a general AVWC: explicit per-block channel lists.
class GavwcInstance {
  public:
    GavwcInstance(std::size_t block_length, std::vector<Channel> mains,
                  std::vector<Channel> wiretaps);

    std::size_t block_length() const { return block_length_; }
    const std::vector<Channel>& mains() const { return mains_; }
    const std::vector<Channel>& wiretaps() const { return wiretaps_; }

    /// Minimum strictly positive entry over all wiretap channels.
    double min_positive_wiretap_entry() const { return v_n_; }

  private:
    std::size_t block_length_;
    std::vector<Channel> mains_;
    std::vector<Channel> wiretaps_;
    double v_n_;
};

/// Per-letter state choice for an n-block over an AvwcFamily.
struct StateSequence {
    std::vector<std::size_t> states;

    std::size_t length() const { return states.size(); }
};

enum class FamilySide { main, wiretap };

/// n-letter channel selected by the jammer's state sequence: the
/// coordinate-wise product of the chosen letter channels.
Channel state_sequence_channel(const AvwcFamily& family, const StateSequence& seq,
                               FamilySide side, std::size_t cell_cap = kDefaultJointCellCap);

/// Message -> output channel induced by pushing the encoder through `ch`.
Channel induced_message_channel(const RandomEncoderCode& code, const Channel& ch);

/// Per-message leakage D_V(u): KL between the message-conditioned
/// eavesdropper output and the uniform-prior output marginal. In bits.
std::vector<double> leakage_profile(const RandomEncoderCode& code, const Channel& wiretap);

/// Average over messages of Pr{decode != u | u sent}.
double average_error(const RandomEncoderCode& code, const Channel& main);
/// Worst message's Pr{decode != u | u sent}.
double max_error(const RandomEncoderCode& code, const Channel& main);
/// Per-message error vector.
std::vector<double> per_message_error(const RandomEncoderCode& code, const Channel& main);

/// delta_n = log2(1/v_n): a uniform bound on D_V(u) for every code and
/// every wiretap channel of the instance.
double uniform_delta_bound(const GavwcInstance& g);

}  // namespace avwc
