#pragma once

#include <vector>

#include "avwc/types.hpp"

namespace avwc {

// All reported quantities are in bits (log base 2). Internal accumulation
// uses natural log with a single final conversion. 0 log 0 := 0 throughout.

/// Shannon entropy H(p) in bits.
double entropy(const Distribution& p);

/// Binary entropy h(p) in bits.
double binary_entropy(double p);

/// KL divergence D(p || q) in bits; infinite when p puts mass where q has none.
ExtendedBits kl_divergence(const Distribution& p, const Distribution& q);

/// Total variation distance, 0.5 * sum |p - q|, in [0, 1].
double total_variation(const Distribution& p, const Distribution& q);

/// Output marginal of `input` pushed through `ch`.
Distribution output_distribution(const Distribution& input, const Channel& ch);

/// Mutual information I(X;Z) in bits between `input` and the output of `ch`.
double mutual_information(const Distribution& input, const Channel& ch);

/// Matrix product: run `first`, feed its output into `second`.
Channel compose_channels(const Channel& first, const Channel& second);

/// Memoryless product channel over Cartesian alphabets. Word ids are
/// little-endian mixed-radix: the first factor is the least significant
/// digit. Rejects results whose input_size * output_size exceeds `cell_cap`.
Channel product_channel(const std::vector<Channel>& factors,
                        std::size_t cell_cap = kDefaultJointCellCap);

/// Mixture channel sum_i weights[i] * channels[i]; weights form a Distribution.
Channel mixture_channel(const std::vector<Channel>& channels, const Distribution& weights);

/// max_i KL(rows[i] || reference): Csiszar information-radius bound.
/// Upper-bounds I(U;Z) for every prior on the rows, with any reference.
ExtendedBits information_radius_bound(const std::vector<Distribution>& rows,
                                      const Distribution& reference);

}  // namespace avwc
