#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

// Named variables (rows) by samples (columns).
struct Dataset {
    std::vector<std::string> variable_names;
    Matrix data;
    std::string source_label;
};

// How the rows of a CSV file are to be read. Typical exports put one sample
// per line, which is the opposite of the in-memory variables-by-samples
// convention, so RowsAreSamples (the default) transposes on load.
enum class Orientation { RowsAreSamples, RowsAreVariables };

// Loads a rectangular numeric CSV, optionally preceded by a single header
// line of labels. Header labels name the file's columns; they become
// variable names under RowsAreSamples and are ignored under
// RowsAreVariables. Throws ParseError with the offending 1-based line (and
// column for bad cells) and IoError when the file cannot be read.
Dataset load_csv(const std::filesystem::path& path,
                 Orientation orientation = Orientation::RowsAreSamples);

// Writes one sample per line with a header of variable names, i.e. the
// RowsAreSamples layout load_csv defaults to. Values carry 17 significant
// digits so a round trip is exact.
void save_csv(const Dataset& dataset, const std::filesystem::path& path);
void save_csv(const Matrix& matrix, const std::filesystem::path& path);

// Writes the matrix rows verbatim (no transpose), with an optional header
// line. Used for score/loading/eigenvalue sidecar files.
void write_csv(const std::filesystem::path& path, const Matrix& matrix,
               const std::vector<std::string>& header = {});

// The built-in 2x30 height (in) / weight (lb) sample used by the demo.
Dataset embedded_height_weight();

}  // namespace pcakit
