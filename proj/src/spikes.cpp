#include "pcakit/spikes.hpp"

#include <cmath>
#include <string>

#include "pcakit/errors.hpp"
#include "pcakit/rng.hpp"

namespace pcakit {

SpikeBatch synthesize_spikes(const std::vector<std::vector<double>>& templates,
                             const std::vector<std::size_t>& counts, double noise_sd,
                             std::uint64_t seed) {
    if (templates.empty()) throw ArgumentError("synthesize_spikes: no templates");
    if (counts.size() != templates.size()) {
        throw ArgumentError("synthesize_spikes: " + std::to_string(counts.size()) +
                            " counts for " + std::to_string(templates.size()) + " templates");
    }
    const std::size_t length = templates[0].size();
    if (length == 0) throw ArgumentError("synthesize_spikes: empty template");
    for (const auto& t : templates) {
        if (t.size() != length) {
            throw ArgumentError("synthesize_spikes: template lengths differ (" +
                                std::to_string(t.size()) + " vs " + std::to_string(length) + ")");
        }
    }
    if (!(noise_sd >= 0.0)) {
        throw ArgumentError("synthesize_spikes: noise_sd must be >= 0");
    }
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    if (total < 2) {
        throw ArgumentError("synthesize_spikes: total count " + std::to_string(total) +
                            " < 2");
    }

    Matrix waveforms(length, total);
    std::vector<int> labels;
    labels.reserve(total);
    for (std::size_t t = 0; t < counts.size(); ++t) {
        for (std::size_t c = 0; c < counts[t]; ++c) labels.push_back(static_cast<int>(t));
    }

    GaussianSource noise(seed);
    for (std::size_t j = 0; j < total; ++j) {
        const std::vector<double>& shape = templates[static_cast<std::size_t>(labels[j])];
        for (std::size_t i = 0; i < length; ++i) {
            double v = shape[i];
            if (noise_sd > 0.0) v += noise_sd * noise.next();
            waveforms(i, j) = v;
        }
    }
    return SpikeBatch{std::move(waveforms), std::move(labels)};
}

std::vector<std::vector<double>> demo_spike_templates() {
    auto bump = [](double i, double center, double width) {
        const double d = (i - center) / width;
        return std::exp(-0.5 * d * d);
    };
    std::vector<double> sharp(64);
    std::vector<double> broad(64);
    for (std::size_t i = 0; i < 64; ++i) {
        const double t = static_cast<double>(i);
        sharp[i] = 120.0 * bump(t, 20.0, 3.0) - 35.0 * bump(t, 32.0, 8.0);
        broad[i] = -90.0 * bump(t, 28.0, 10.0) + 20.0 * bump(t, 10.0, 4.0);
    }
    return {sharp, broad};
}

}  // namespace pcakit
