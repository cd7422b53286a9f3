#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcakit/analysis.hpp"
#include "pcakit/dataset.hpp"
#include "pcakit/eigen.hpp"
#include "pcakit/errors.hpp"
#include "pcakit/image.hpp"
#include "pcakit/pca.hpp"
#include "pcakit/spikes.hpp"

namespace fs = std::filesystem;
using namespace pcakit;

namespace {

// exit codes: 0 ok, 2 usage, 3 data/format, 4 numeric
constexpr int kUsageError = 2;
constexpr int kDataError = 3;
constexpr int kNumericError = 4;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<std::string> pc_header(std::size_t r) {
    std::vector<std::string> h;
    for (std::size_t k = 1; k <= r; ++k) h.push_back("PC" + std::to_string(k));
    return h;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

struct FitArgs {
    std::string csv;
    std::size_t r = 0;  // 0 = all components
    Orientation orientation = Orientation::RowsAreSamples;
    std::string outdir = ".";
};

int cmd_fit(const FitArgs& args) {
    const Dataset ds = load_csv(args.csv, args.orientation);
    const PcaModel model = fit(ds.data);
    const std::size_t m = model.variable_count;
    const std::size_t r = args.r == 0 ? m : args.r;
    if (r > m) {
        throw RangeError("fit: -r " + std::to_string(r) + " exceeds " + std::to_string(m) +
                         " variables");
    }

    std::cout << "variables: " << m << "\n";
    std::cout << "samples: " << model.sample_count << "\n";
    for (std::size_t i = 0; i < m; ++i) {
        std::cout << "mean[" << ds.variable_names[i] << "]: " << num(model.mean[i]) << "\n";
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::cout << "eigenvalue[" << k + 1 << "]: " << num(model.eigenvalues[k]) << "\n";
    }
    for (std::size_t k = 1; k <= m; ++k) {
        std::cout << "sigma2[" << k << "]: " << num(spectral_ratio(model, k)) << "\n";
    }

    ensure_dir(args.outdir);
    const fs::path outdir = args.outdir;
    write_csv(outdir / "components.csv", model.components, pc_header(m));
    const Scores scores = project(model, ds.data, r);
    write_csv(outdir / "scores.csv", scores.coords);  // r rows, one column per sample
    std::cout << "wrote: " << (outdir / "components.csv").string() << "\n";
    std::cout << "wrote: " << (outdir / "scores.csv").string() << "\n";
    return 0;
}

int cmd_demo_heightweight() {
    const Dataset ds = embedded_height_weight();
    const PcaModel model = fit(ds.data);
    const Matrix s = covariance(center(ds.data, model.mean));

    std::cout << "dataset: " << ds.source_label << "\n";
    for (std::size_t i = 0; i < 2; ++i) {
        std::cout << "mean[" << ds.variable_names[i] << "]: " << num(model.mean[i]) << "\n";
    }
    for (std::size_t i = 0; i < 2; ++i) {
        std::cout << "covariance[" << i << "]: " << num(s(i, 0)) << " " << num(s(i, 1)) << "\n";
    }
    for (std::size_t k = 0; k < 2; ++k) {
        std::cout << "eigenvalue[" << k + 1 << "]: " << num(model.eigenvalues[k]) << "\n";
        std::cout << "component[" << k + 1 << "]: " << num(model.components(0, k)) << " "
                  << num(model.components(1, k)) << "\n";
    }
    const FitLine line = best_fit_line(model);
    std::cout << "best-fit line: y - " << num(line.point[1]) << " = " << num(line.slope)
              << " (x - " << num(line.point[0]) << ")\n";
    std::cout << "sigma2[1]: " << num(spectral_ratio(model, 1)) << "\n";
    return 0;
}

struct CompressArgs {
    std::string input;
    std::size_t r = 0;
    std::string output;
};

int cmd_compress(const CompressArgs& args) {
    const GrayImage image = load_pgm(args.input);
    const Matrix& x = image.pixels();  // rows are variables, columns samples
    if (args.r < 1 || args.r > x.rows()) {
        throw RangeError("compress: -r " + std::to_string(args.r) + " outside [1, " +
                         std::to_string(x.rows()) + "] (image height)");
    }

    const PcaModel model = fit(x);
    const Scores scores = project(model, x, args.r);
    const Matrix approx = reconstruct(model, scores);

    fs::path out = args.output.empty()
                       ? fs::path(args.input).stem().concat("_r" + std::to_string(args.r))
                             .concat(".pgm")
                       : fs::path(args.output);
    save_pgm(clamp_to_image(approx), out);

    fs::path sidecar = out;
    sidecar.replace_extension(".eigenvalues.csv");
    Matrix eigcol(model.eigenvalues.size(), 1, model.eigenvalues);
    write_csv(sidecar, eigcol, {"eigenvalue"});

    Matrix diff(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) diff(i, j) = x(i, j) - approx(i, j);
    }
    const double rel = frobenius_norm(diff) / frobenius_norm(x);

    std::cout << "image: " << x.rows() << "x" << x.cols() << "\n";
    std::cout << "components: " << args.r << "\n";
    std::cout << "sigma2: " << num(spectral_ratio(model, args.r)) << "\n";
    std::cout << "relative-error: " << num(rel) << "\n";
    std::cout << "wrote: " << out.string() << "\n";
    std::cout << "wrote: " << sidecar.string() << "\n";
    return 0;
}

struct BiplotArgs {
    std::string csv;
    std::size_t r = 2;
    Orientation orientation = Orientation::RowsAreSamples;
    std::string outdir = ".";
};

int cmd_biplot(const BiplotArgs& args) {
    const Dataset ds = load_csv(args.csv, args.orientation);
    const PcaModel model = fit(ds.data);
    const BiplotData data = biplot_data(model, ds.data, ds.variable_names, args.r);

    ensure_dir(args.outdir);
    const fs::path outdir = args.outdir;
    write_biplot_csv(data, outdir / "scores.csv", outdir / "loadings.csv");
    write_biplot_svg(data, outdir / "biplot.svg");
    std::cout << "components: " << args.r << "\n";
    std::cout << "sigma2: " << num(spectral_ratio(model, args.r)) << "\n";
    for (std::size_t k = 0; k < args.r; ++k) {
        double lo = data.scores(k, 0), hi = data.scores(k, 0);
        for (std::size_t j = 1; j < data.scores.cols(); ++j) {
            lo = std::min(lo, data.scores(k, j));
            hi = std::max(hi, data.scores(k, j));
        }
        std::cout << "score-range[PC" << k + 1 << "]: " << num(lo) << " " << num(hi) << "\n";
    }
    std::cout << "wrote: " << (outdir / "scores.csv").string() << "\n";
    std::cout << "wrote: " << (outdir / "loadings.csv").string() << "\n";
    std::cout << "wrote: " << (outdir / "biplot.svg").string() << "\n";
    return 0;
}

struct SpikesArgs {
    std::size_t k = 2;
    std::uint64_t seed = 0;
    double noise = 5.0;
    std::vector<std::size_t> counts = {1000, 1000};
    std::string outdir = ".";
};

int cmd_spikes(const SpikesArgs& args) {
    const auto templates = demo_spike_templates();
    const SpikeBatch batch = synthesize_spikes(templates, args.counts, args.noise, args.seed);

    const PcaModel model = fit(batch.waveforms);
    const Scores scores = project(model, batch.waveforms, 2);
    const Clustering clusters = kmeans_best_of(scores.coords, args.k, args.seed, 20);

    ensure_dir(args.outdir);
    const fs::path outdir = args.outdir;

    // scores + assignments, one spike per row
    {
        const std::size_t n = scores.coords.cols();
        Matrix rows(n, 3);
        for (std::size_t j = 0; j < n; ++j) {
            rows(j, 0) = scores.coords(0, j);
            rows(j, 1) = scores.coords(1, j);
            rows(j, 2) = static_cast<double>(clusters.assignments[j]);
        }
        write_csv(outdir / "scores.csv", rows, {"PC1", "PC2", "cluster"});
    }

    // representative waveform per cluster, one time sample per row
    {
        Matrix reps(model.variable_count, args.k);
        for (std::size_t c = 0; c < args.k; ++c) {
            const auto wave = cluster_representative(
                model, std::span<const double>(clusters.centroids.row_ptr(c), 2));
            for (std::size_t i = 0; i < wave.size(); ++i) reps(i, c) = wave[i];
        }
        std::vector<std::string> header;
        for (std::size_t c = 0; c < args.k; ++c) header.push_back("cluster" + std::to_string(c));
        write_csv(outdir / "representatives.csv", reps, header);
    }

    std::cout << "spikes: " << batch.waveforms.cols() << "\n";
    std::cout << "sigma2[2]: " << num(spectral_ratio(model, 2)) << "\n";
    std::cout << "inertia: " << num(clusters.inertia) << "\n";

    // ground truth is known here; report best-permutation-matched accuracy
    if (args.k <= 8) {
        std::vector<std::size_t> confusion(args.k * templates.size(), 0);
        for (std::size_t j = 0; j < clusters.assignments.size(); ++j) {
            confusion[clusters.assignments[j] * templates.size() +
                      static_cast<std::size_t>(batch.labels[j])]++;
        }
        std::vector<std::size_t> perm(args.k);
        for (std::size_t i = 0; i < args.k; ++i) perm[i] = i;
        std::size_t best_hits = 0;
        do {
            std::size_t hits = 0;
            for (std::size_t c = 0; c < args.k; ++c) {
                if (perm[c] < templates.size()) hits += confusion[c * templates.size() + perm[c]];
            }
            best_hits = std::max(best_hits, hits);
        } while (std::next_permutation(perm.begin(), perm.end()));
        const double accuracy =
            static_cast<double>(best_hits) / static_cast<double>(clusters.assignments.size());
        std::cout << "accuracy: " << num(accuracy) << "\n";
    }

    std::cout << "wrote: " << (outdir / "scores.csv").string() << "\n";
    std::cout << "wrote: " << (outdir / "representatives.csv").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PCA toolkit: covariance PCA, eigendecomposition, and batch analyses"};
    app.require_subcommand(1);

    const std::map<std::string, Orientation> orientation_map{
        {"samples", Orientation::RowsAreSamples},
        {"variables", Orientation::RowsAreVariables},
    };

    FitArgs fit_args;
    auto* fit_cmd = app.add_subcommand("fit", "fit a PCA model to a CSV dataset");
    fit_cmd->add_option("csv", fit_args.csv, "input CSV")->required();
    fit_cmd->add_option("-r,--components", fit_args.r, "components kept in scores.csv (default: all)")
        ->check(CLI::PositiveNumber);
    fit_cmd->add_option("--orientation", fit_args.orientation, "what CSV rows are")
        ->transform(CLI::CheckedTransformer(orientation_map, CLI::ignore_case));
    fit_cmd->add_option("-o,--out", fit_args.outdir, "output directory");

    auto* demo_cmd = app.add_subcommand("demo-heightweight", "run the embedded height/weight demo");

    CompressArgs compress_args;
    auto* compress_cmd = app.add_subcommand("compress", "low-rank compress a PGM image");
    compress_cmd->add_option("pgm", compress_args.input, "input PGM")->required();
    compress_cmd->add_option("-r,--components", compress_args.r, "components to keep")
        ->required()
        ->check(CLI::PositiveNumber);
    compress_cmd->add_option("-o,--out", compress_args.output, "output PGM path");

    BiplotArgs biplot_args;
    auto* biplot_cmd = app.add_subcommand("biplot", "export biplot scores/loadings/SVG");
    biplot_cmd->add_option("csv", biplot_args.csv, "input CSV")->required();
    biplot_cmd->add_option("-r,--components", biplot_args.r, "2 or 3")
        ->check(CLI::PositiveNumber);
    biplot_cmd->add_option("--orientation", biplot_args.orientation, "what CSV rows are")
        ->transform(CLI::CheckedTransformer(orientation_map, CLI::ignore_case));
    biplot_cmd->add_option("-o,--out", biplot_args.outdir, "output directory");

    SpikesArgs spikes_args;
    auto* spikes_cmd = app.add_subcommand("spikes", "synthetic spike-sorting demo");
    spikes_cmd->add_option("--k", spikes_args.k, "cluster count")->check(CLI::PositiveNumber);
    spikes_cmd->add_option("--seed", spikes_args.seed, "generator seed");
    spikes_cmd->add_option("--noise", spikes_args.noise, "noise standard deviation")
        ->check(CLI::NonNegativeNumber);
    spikes_cmd->add_option("--counts", spikes_args.counts, "spikes per template")
        ->delimiter(',');
    spikes_cmd->add_option("-o,--out", spikes_args.outdir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (fit_cmd->parsed()) return cmd_fit(fit_args);
        if (demo_cmd->parsed()) return cmd_demo_heightweight();
        if (compress_cmd->parsed()) return cmd_compress(compress_args);
        if (biplot_cmd->parsed()) return cmd_biplot(biplot_args);
        if (spikes_cmd->parsed()) return cmd_spikes(spikes_args);
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    return 0;
}
