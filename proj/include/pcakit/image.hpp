#pragma once

#include <filesystem>

#include "pcakit/matrix.hpp"

namespace pcakit {

// Grayscale image: height x width real intensities in [0, 255]. Fractional
// values are allowed in memory; they are rounded when written to disk.
class GrayImage {
public:
    // Validates the range invariant. Throws ArgumentError on violations.
    explicit GrayImage(Matrix pixels);

    std::size_t height() const { return pixels_.rows(); }
    std::size_t width() const { return pixels_.cols(); }
    const Matrix& pixels() const { return pixels_; }

private:
    Matrix pixels_;
};

// Reads a PGM file, magic "P2" (ASCII) or "P5" (binary), maxval <= 255.
// Comment lines after the magic are tolerated. Throws ParseError naming the
// offense on malformed input, IoError when the file cannot be read.
GrayImage load_pgm(const std::filesystem::path& path);

// Writes binary "P5" with maxval 255; pixels are rounded half-away-from-zero
// and clamped to [0, 255].
void save_pgm(const GrayImage& image, const std::filesystem::path& path);

// Matrix -> image with values clamped into [0, 255] (image rows are the
// matrix rows). Used to make PCA reconstructions saveable.
GrayImage clamp_to_image(const Matrix& m);

}  // namespace pcakit
