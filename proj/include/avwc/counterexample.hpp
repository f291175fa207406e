#pragma once

#include <cstdint>
#include <vector>

#include "avwc/rng.hpp"
#include "avwc/types.hpp"
#include "avwc/wiretap.hpp"

namespace avwc {

/// Subset of n-bit input words on which the wiretap channel is noiseless.
/// Word ids are the little-endian binary encoding of the words.
struct ThetaSubset {
    std::size_t n = 0;
    std::vector<std::size_t> members;  // sorted, unique, each < 2^n

    std::size_t size() const { return members.size(); }
    bool contains(std::size_t word) const;
};

ThetaSubset make_theta(std::size_t n, std::vector<std::size_t> members);
ThetaSubset sample_theta(std::size_t n, std::size_t f, Rng& rng);

/// f(n) = ceil(2^{n a}).
std::size_t theta_size_for_rate(std::size_t n, double a);

/// Eavesdropper channel of the strong-vs-semantic counterexample: the
/// identity on Theta, completely noisy (uniform over 2^n outputs) off it.
Channel v_theta_channel(const ThetaSubset& theta, std::size_t cell_cap = kDefaultJointCellCap);

/// Rate-1 code: message set {0,1}^n, identity encoder, identity decoder.
RandomEncoderCode naive_identity_code(std::size_t n, std::size_t cell_cap = kDefaultJointCellCap);

/// Uniform-prior leakage I(M; Y(Theta)) of the naive code through
/// v_theta_channel, in closed form. Depends only on |Theta| = f. In bits.
double strong_leakage_closed_form(std::size_t n, std::size_t f);

struct SkewedAttackReport {
    double bound_bits = 0.0;          // 1/2 log2( 2 / (1 + (2^n - f)/(2^n (2^n - 1))) )
    double exact_leakage_bits = 0.0;  // I(M; Y(Theta)) under the skewed prior
    std::vector<double> prior;
};

/// Eavesdropper strategy against the naive code: skew the message prior to
/// 1/2 on the all-zero word and attack a Theta containing it. Requires
/// 0 in theta; the exact leakage always dominates the closed-form bound.
SkewedAttackReport skewed_attack(std::size_t n, std::size_t f, const ThetaSubset& theta);

struct Case1Report {
    ThetaSubset theta;
    std::vector<double> prior;
    std::size_t covered_messages = 0;      // 2^{n(a-b)} smallest decoding sets
    double eavesdropper_success = 0.0;     // decoding through V_Theta with the code's own sets
    double message_entropy_bits = 0.0;     // H(M) under the skewed prior
    double fano_lower_bound = 0.0;         // (1/n)(H(M) - h(P_e) - P_e log2(|U|-1))
};

/// Decoding attack against any code of rate r > 1 - a: cover the smallest
/// decoding sets with Theta, skew the prior onto the covered messages
/// (tail mass g), decode through V_Theta, and bound the normalized leakage
/// from below by Fano.
Case1Report case1_attack(const RandomEncoderCode& code, double a, double g,
                         std::size_t cell_cap = kDefaultJointCellCap);

/// Equal-cell partition code: 2^{n r} contiguous cells of size 2^{n(1-r)},
/// uniform encoder on the cell, decoder mapping outputs to their cell.
struct PartitionCode {
    std::size_t n = 0;
    double rate = 0.0;
    std::size_t cell_count = 0;
    std::size_t cell_size = 0;
    RandomEncoderCode code;
};

PartitionCode case2_partition_code(std::size_t n, double r,
                                   std::size_t cell_cap = kDefaultJointCellCap);

/// Prior-free leakage bound of the partition code against every Theta of
/// size 2^{n a}: 2^{-n(b-a)} (1 + 2^{-n(1-b)}) log2( 2^{n(1-b)} (1 + 2^{-n(1-b)}) ).
/// Requires a < b.
double case2_leakage_bound(std::size_t n, double a, double b);

/// Information-radius leakage certificate of the partition code against one
/// Theta: max over messages of KL(induced row || uniform on 2^n), which
/// upper-bounds I(M; Y(Theta)) for every prior.
double case2_radius_certificate(const PartitionCode& pc, const ThetaSubset& theta,
                                std::size_t cell_cap = kDefaultJointCellCap);

/// Jamming channel of the erasure GAVC family: identity off Theta, a
/// deterministic erasure symbol E (the extra last output) on Theta.
Channel gavc_erasure_channel(const ThetaSubset& theta,
                             std::size_t cell_cap = kDefaultJointCellCap);

}  // namespace avwc
