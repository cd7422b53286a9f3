#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pcakit/matrix.hpp"
#include "pcakit/pca.hpp"

namespace pcakit {

// Line through `point` with the given slope, in the direction of the first
// component of a 2-variable model: y - point[1] = slope * (x - point[0]).
struct FitLine {
    double slope;
    std::array<double, 2> point;
};

// Throws ShapeError unless the model has exactly 2 variables, NumericError
// when the first component is vertical (|v1[0]| <= 1e-12). The slope is a
// ratio of component entries, so it is invariant under sign flips.
FitLine best_fit_line(const PcaModel& model);

// Raw biplot payload: sample scores on the first r components plus one
// loading row per variable (its coefficients on those components). No
// normalization is applied; renderers scale as they see fit.
struct BiplotData {
    Matrix scores;                            // r x n
    Matrix loadings;                          // m x r
    std::vector<std::string> variable_names;  // m labels
};

// r must be 2 or 3 (and <= m). Scores are exactly project()'s output.
BiplotData biplot_data(const PcaModel& model, const Matrix& x,
                       std::vector<std::string> names, std::size_t r);

struct Clustering {
    std::vector<std::size_t> assignments;  // per point, in [0, k)
    Matrix centroids;                      // k x r, row per centroid
    double inertia;                        // total within-cluster squared distance
};

// Lloyd's algorithm on points (r x n, one column per point). Initial
// centroids are k distinct columns drawn without replacement from a
// SplitMix64(seed) stream; ties in the assignment step go to the lowest
// centroid index; an emptied cluster is re-seeded to the point farthest from
// its former centroid. Stops when assignments are stable or after 300
// rounds. Deterministic given the seed.
Clustering kmeans(const Matrix& points, std::size_t k, std::uint64_t seed);

// Best of `restarts` independent kmeans runs (restart seeds drawn from
// SplitMix64(seed)); ties on inertia go to the earliest restart.
Clustering kmeans_best_of(const Matrix& points, std::size_t k, std::uint64_t seed,
                          std::size_t restarts);

// Maps a point in score space back to signal space: mean + sum_i coords[i] *
// v_{i+1}. Throws RangeError when coords has more entries than the model has
// components.
std::vector<double> cluster_representative(const PcaModel& model,
                                           std::span<const double> coords);

// scores.csv: the r x n score matrix verbatim (no header, one column per
// sample). loadings.csv: one variable per row, header PC1..PCr.
void write_biplot_csv(const BiplotData& data, const std::filesystem::path& scores_path,
                      const std::filesystem::path& loadings_path);

// Single SVG with the score scatter and labeled loading arrows, drawn on the
// first two components in raw coordinates, scaled only to fit the viewbox.
void write_biplot_svg(const BiplotData& data, const std::filesystem::path& path);

}  // namespace pcakit
