#pragma once

#include <cstdint>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

// Synthetic spike batch: waveforms is samples-per-spike x spike-count, column
// j an instance of templates[labels[j]].
struct SpikeBatch {
    Matrix waveforms;
    std::vector<int> labels;
};

// Column j = templates[labels[j]] + iid Gaussian noise with standard
// deviation noise_sd per entry. Labels run template 0 for counts[0] columns,
// then template 1, and so on. The noise stream is SplitMix64(seed) fed
// through the Box-Muller transform (see rng.hpp), consumed down each column
// in turn, so byte-identical output is guaranteed for a given seed.
//
// Throws ArgumentError on: no templates, counts/templates length mismatch,
// mismatched template lengths, total count < 2, or negative noise_sd.
SpikeBatch synthesize_spikes(const std::vector<std::vector<double>>& templates,
                             const std::vector<std::size_t>& counts, double noise_sd,
                             std::uint64_t seed);

// Two fixed 64-sample action-potential shapes used by the spikes demo: a
// sharp positive spike with an undershoot, and a broader negative deflection.
// Their separation is ||t1 - t2||_2 ~ 478, so the demo noise level of 5.0
// keeps clusters far apart.
std::vector<std::vector<double>> demo_spike_templates();

}  // namespace pcakit
