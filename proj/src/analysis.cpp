#include "pcakit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "pcakit/dataset.hpp"
#include "pcakit/errors.hpp"
#include "pcakit/kernels.hpp"
#include "pcakit/rng.hpp"

namespace pcakit {

FitLine best_fit_line(const PcaModel& model) {
    if (model.variable_count != 2) {
        throw ShapeError("best_fit_line: model has " + std::to_string(model.variable_count) +
                         " variables, expected 2");
    }
    const double vx = model.components(0, 0);
    const double vy = model.components(1, 0);
    if (std::fabs(vx) <= 1e-12) {
        throw NumericError("best_fit_line: first component is vertical, slope undefined");
    }
    return FitLine{vy / vx, {model.mean[0], model.mean[1]}};
}

BiplotData biplot_data(const PcaModel& model, const Matrix& x, std::vector<std::string> names,
                       std::size_t r) {
    if (r != 2 && r != 3) {
        throw RangeError("biplot_data: r = " + std::to_string(r) + ", expected 2 or 3");
    }
    if (r > model.variable_count) {
        throw RangeError("biplot_data: r = " + std::to_string(r) + " exceeds " +
                         std::to_string(model.variable_count) + " variables");
    }
    if (names.size() != model.variable_count) {
        throw ShapeError("biplot_data: " + std::to_string(names.size()) + " names for " +
                         std::to_string(model.variable_count) + " variables");
    }
    Scores scores = project(model, x, r);
    Matrix loadings(model.variable_count, r);
    for (std::size_t i = 0; i < model.variable_count; ++i) {
        for (std::size_t k = 0; k < r; ++k) loadings(i, k) = model.components(i, k);
    }
    return BiplotData{std::move(scores.coords), std::move(loadings), std::move(names)};
}

namespace {

// Transposed point access: points are columns of an r x n matrix, distances
// want them contiguous.
Matrix points_as_rows(const Matrix& points) { return transpose(points); }

double sq_distance(const double* a, const double* b, std::size_t r) {
    double total = 0.0;
    for (std::size_t d = 0; d < r; ++d) {
        const double diff = a[d] - b[d];
        total += diff * diff;
    }
    return total;
}

Clustering lloyd_run(const Matrix& pts, std::size_t k, std::uint64_t seed) {
    const std::size_t n = pts.rows();
    const std::size_t r = pts.cols();

    // k distinct starting points, drawn without replacement
    SplitMix64 rng(seed);
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    Matrix centroids(k, r);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t pick = c + static_cast<std::size_t>(rng.next_below(n - c));
        std::swap(pool[c], pool[pick]);
        for (std::size_t d = 0; d < r; ++d) centroids(c, d) = pts(pool[c], d);
    }

    std::vector<std::size_t> assign(n, 0);
    std::vector<std::size_t> sizes(k, 0);
    constexpr int kMaxRounds = 300;
    for (int round = 0; round < kMaxRounds; ++round) {
        bool changed = round == 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < k; ++c) {
                const double d = sq_distance(pts.row_ptr(j), centroids.row_ptr(c), r);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assign[j] != best) {
                assign[j] = best;
                changed = true;
            }
        }
        if (!changed && round > 0) break;

        Matrix sums(k, r);
        std::fill(sizes.begin(), sizes.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            ++sizes[assign[j]];
            kern::axpy(1.0, pts.row_ptr(j), sums.row_ptr(assign[j]), r);
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] > 0) {
                for (std::size_t d = 0; d < r; ++d) {
                    centroids(c, d) = sums(c, d) / static_cast<double>(sizes[c]);
                }
            } else {
                // re-seed to the point farthest from the emptied centroid
                std::size_t far = 0;
                double far_d = -1.0;
                for (std::size_t j = 0; j < n; ++j) {
                    const double d = sq_distance(pts.row_ptr(j), centroids.row_ptr(c), r);
                    if (d > far_d) {
                        far_d = d;
                        far = j;
                    }
                }
                for (std::size_t d = 0; d < r; ++d) centroids(c, d) = pts(far, d);
            }
        }
    }

    double inertia = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        inertia += sq_distance(pts.row_ptr(j), centroids.row_ptr(assign[j]), r);
    }
    return Clustering{std::move(assign), std::move(centroids), inertia};
}

}  // namespace

Clustering kmeans(const Matrix& points, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw ArgumentError("kmeans: k must be >= 1");
    if (points.cols() < k) {
        throw ArgumentError("kmeans: " + std::to_string(points.cols()) + " points for k = " +
                            std::to_string(k));
    }
    return lloyd_run(points_as_rows(points), k, seed);
}

Clustering kmeans_best_of(const Matrix& points, std::size_t k, std::uint64_t seed,
                          std::size_t restarts) {
    if (k < 1) throw ArgumentError("kmeans: k must be >= 1");
    if (points.cols() < k) {
        throw ArgumentError("kmeans: " + std::to_string(points.cols()) + " points for k = " +
                            std::to_string(k));
    }
    if (restarts < 1) throw ArgumentError("kmeans: restarts must be >= 1");
    const Matrix pts = points_as_rows(points);
    SplitMix64 seeder(seed);
    Clustering best = lloyd_run(pts, k, seeder.next_u64());
    for (std::size_t i = 1; i < restarts; ++i) {
        Clustering cand = lloyd_run(pts, k, seeder.next_u64());
        if (cand.inertia < best.inertia) best = std::move(cand);
    }
    return best;
}

std::vector<double> cluster_representative(const PcaModel& model,
                                           std::span<const double> coords) {
    const std::size_t m = model.variable_count;
    if (coords.size() > m) {
        throw RangeError("cluster_representative: " + std::to_string(coords.size()) +
                         " coordinates for " + std::to_string(m) + " components");
    }
    std::vector<double> wave = model.mean;
    for (std::size_t c = 0; c < coords.size(); ++c) {
        for (std::size_t i = 0; i < m; ++i) wave[i] += coords[c] * model.components(i, c);
    }
    return wave;
}

namespace {

std::vector<std::string> component_header(std::size_t r) {
    std::vector<std::string> h;
    for (std::size_t k = 1; k <= r; ++k) h.push_back("PC" + std::to_string(k));
    return h;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_biplot_csv(const BiplotData& data, const std::filesystem::path& scores_path,
                      const std::filesystem::path& loadings_path) {
    write_csv(scores_path, data.scores);  // r rows, one column per sample
    write_csv(loadings_path, data.loadings, component_header(data.scores.rows()));
}

void write_biplot_svg(const BiplotData& data, const std::filesystem::path& path) {
    const std::size_t n = data.scores.cols();
    const std::size_t m = data.loadings.rows();

    // bounding box over scores, loading tips, and the origin
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    auto include = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (std::size_t j = 0; j < n; ++j) include(data.scores(0, j), data.scores(1, j));
    for (std::size_t i = 0; i < m; ++i) include(data.loadings(i, 0), data.loadings(i, 1));
    const double spanx = xmax - xmin;
    const double spany = ymax - ymin;
    const double padx = spanx > 0.0 ? 0.05 * spanx : 1.0;
    const double pady = spany > 0.0 ? 0.05 * spany : 1.0;
    xmin -= padx;
    xmax += padx;
    ymin -= pady;
    ymax += pady;

    const double width = 640.0;
    const double height = 480.0;
    const double sx = width / (xmax - xmin);
    const double sy = height / (ymax - ymin);
    auto px = [&](double x) { return (x - xmin) * sx; };
    auto py = [&](double y) { return height - (y - ymin) * sy; };  // y up

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt6(width) << "\" height=\""
        << fmt6(height) << "\" viewBox=\"0 0 " << fmt6(width) << ' ' << fmt6(height) << "\">\n";
    out << "  <!-- PC1 range [" << fmt6(xmin) << ", " << fmt6(xmax) << "], PC2 range ["
        << fmt6(ymin) << ", " << fmt6(ymax) << "] -->\n";
    // axes through the origin
    out << "  <line x1=\"0\" y1=\"" << fmt6(py(0.0)) << "\" x2=\"" << fmt6(width) << "\" y2=\""
        << fmt6(py(0.0)) << "\" stroke=\"#cccccc\"/>\n";
    out << "  <line x1=\"" << fmt6(px(0.0)) << "\" y1=\"0\" x2=\"" << fmt6(px(0.0))
        << "\" y2=\"" << fmt6(height) << "\" stroke=\"#cccccc\"/>\n";
    for (std::size_t j = 0; j < n; ++j) {
        out << "  <circle cx=\"" << fmt6(px(data.scores(0, j))) << "\" cy=\""
            << fmt6(py(data.scores(1, j))) << "\" r=\"2\" fill=\"#1f77b4\"/>\n";
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double lx = data.loadings(i, 0);
        const double ly = data.loadings(i, 1);
        out << "  <line x1=\"" << fmt6(px(0.0)) << "\" y1=\"" << fmt6(py(0.0)) << "\" x2=\""
            << fmt6(px(lx)) << "\" y2=\"" << fmt6(py(ly)) << "\" stroke=\"#d62728\"/>\n";
        out << "  <text x=\"" << fmt6(px(lx)) << "\" y=\"" << fmt6(py(ly))
            << "\" font-size=\"10\" fill=\"#d62728\">" << data.variable_names[i] << "</text>\n";
    }
    out << "</svg>\n";
    if (!out.flush()) throw IoError("write failure on " + path.string());
}

}  // namespace pcakit
