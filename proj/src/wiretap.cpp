#include "avwc/wiretap.hpp"

#include <cmath>
#include <stdexcept>

namespace avwc {

RandomEncoderCode::RandomEncoderCode(Channel enc, std::vector<std::size_t> dec)
    : encoder(std::move(enc)), decoder(std::move(dec)) {
    if (decoder.empty()) throw std::invalid_argument("RandomEncoderCode: empty decoder");
    for (std::size_t y = 0; y < decoder.size(); ++y)
        if (decoder[y] != kErrorSymbol && decoder[y] >= message_count())
            throw std::invalid_argument("RandomEncoderCode: decoder output out of range at " +
                                        std::to_string(y));
}

AvwcFamily::AvwcFamily(std::vector<StatePair> states) : states_(std::move(states)) {
    if (states_.empty()) throw std::invalid_argument("AvwcFamily: needs at least one state");
    const auto& first = states_.front();
    for (const auto& sp : states_) {
        if (sp.main.input_size() != first.main.input_size() ||
            sp.wiretap.input_size() != first.main.input_size())
            throw std::invalid_argument("AvwcFamily: inconsistent input alphabets");
        if (sp.main.output_size() != first.main.output_size())
            throw std::invalid_argument("AvwcFamily: inconsistent main output alphabets");
        if (sp.wiretap.output_size() != first.wiretap.output_size())
            throw std::invalid_argument("AvwcFamily: inconsistent wiretap output alphabets");
    }
}

std::vector<Channel> AvwcFamily::main_channels() const {
    std::vector<Channel> out;
    out.reserve(states_.size());
    for (const auto& sp : states_) out.push_back(sp.main);
    return out;
}

std::vector<Channel> AvwcFamily::wiretap_channels() const {
    std::vector<Channel> out;
    out.reserve(states_.size());
    for (const auto& sp : states_) out.push_back(sp.wiretap);
    return out;
}

GavwcInstance::GavwcInstance(std::size_t block_length, std::vector<Channel> mains,
                             std::vector<Channel> wiretaps)
    : block_length_(block_length), mains_(std::move(mains)), wiretaps_(std::move(wiretaps)) {
    if (mains_.empty() || wiretaps_.empty())
        throw std::invalid_argument("GavwcInstance: needs at least one main and one wiretap");
    for (const auto& c : mains_)
        if (c.input_size() != mains_.front().input_size() ||
            c.output_size() != mains_.front().output_size())
            throw std::invalid_argument("GavwcInstance: inconsistent main alphabets");
    for (const auto& c : wiretaps_)
        if (c.input_size() != mains_.front().input_size() ||
            c.output_size() != wiretaps_.front().output_size())
            throw std::invalid_argument("GavwcInstance: inconsistent wiretap alphabets");
    v_n_ = std::numeric_limits<double>::infinity();
    for (const auto& c : wiretaps_) v_n_ = std::min(v_n_, c.min_positive_entry());
}

Channel state_sequence_channel(const AvwcFamily& family, const StateSequence& seq,
                               FamilySide side, std::size_t cell_cap) {
    if (seq.length() == 0) throw std::invalid_argument("state_sequence_channel: empty sequence");
    std::vector<Channel> letters;
    letters.reserve(seq.length());
    for (std::size_t s : seq.states) {
        if (s >= family.state_count())
            throw std::invalid_argument("state_sequence_channel: state index out of range");
        letters.push_back(side == FamilySide::main ? family.state(s).main
                                                   : family.state(s).wiretap);
    }
    return product_channel(letters, cell_cap);
}

Channel induced_message_channel(const RandomEncoderCode& code, const Channel& ch) {
    return compose_channels(code.encoder, ch);
}

std::vector<double> leakage_profile(const RandomEncoderCode& code, const Channel& wiretap) {
    const Channel induced = induced_message_channel(code, wiretap);
    const std::size_t j = code.message_count();
    const Distribution marginal = output_distribution(Distribution::uniform(j), induced);
    std::vector<double> profile(j);
    for (std::size_t u = 0; u < j; ++u) {
        ExtendedBits d = kl_divergence(induced.row_distribution(u), marginal);
        // The uniform marginal dominates every row, so D_V(u) is finite.
        if (!d.finite())
            throw std::logic_error("leakage_profile: row support escapes the marginal");
        profile[u] = d.value();
    }
    return profile;
}

std::vector<double> per_message_error(const RandomEncoderCode& code, const Channel& main) {
    if (code.decoder.size() != main.output_size())
        throw std::invalid_argument("per_message_error: decoder/output alphabet mismatch");
    const Channel induced = induced_message_channel(code, main);
    std::vector<double> err(code.message_count());
    for (std::size_t u = 0; u < code.message_count(); ++u) {
        auto row = induced.row(u);
        double correct = 0.0;
        for (std::size_t y = 0; y < induced.output_size(); ++y)
            if (code.decoder[y] == u) correct += row[y];
        err[u] = correct >= 1.0 ? 0.0 : 1.0 - correct;
    }
    return err;
}

double average_error(const RandomEncoderCode& code, const Channel& main) {
    const auto err = per_message_error(code, main);
    double sum = 0.0;
    for (double e : err) sum += e;
    return sum / static_cast<double>(err.size());
}

double max_error(const RandomEncoderCode& code, const Channel& main) {
    const auto err = per_message_error(code, main);
    double best = 0.0;
    for (double e : err) best = std::max(best, e);
    return best;
}

double uniform_delta_bound(const GavwcInstance& g) {
    const double v = g.min_positive_wiretap_entry();
    return std::log2(1.0 / v);
}

}  // namespace avwc
