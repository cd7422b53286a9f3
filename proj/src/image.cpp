#include "pcakit/image.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "pcakit/errors.hpp"

namespace pcakit {
namespace {

bool is_pgm_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

// Scanner over the PGM header: whitespace-separated tokens with '#' comment
// lines skipped.
struct HeaderScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_separators() {
        while (pos < text.size()) {
            if (is_pgm_space(text[pos])) {
                ++pos;
            } else if (text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long next_int(const std::string& what, const std::string& file) {
        skip_separators();
        std::size_t start = pos;
        while (pos < text.size() && !is_pgm_space(text[pos]) && text[pos] != '#') ++pos;
        const std::string token = text.substr(start, pos - start);
        if (token.empty()) {
            throw ParseError(file + ": missing " + what);
        }
        try {
            std::size_t used = 0;
            const long v = std::stol(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw ParseError(file + ": '" + token + "' is not a valid " + what);
        }
    }
};

}  // namespace

GrayImage::GrayImage(Matrix pixels) : pixels_(std::move(pixels)) {
    for (std::size_t i = 0; i < pixels_.rows(); ++i) {
        for (std::size_t j = 0; j < pixels_.cols(); ++j) {
            const double v = pixels_(i, j);
            if (!(v >= 0.0 && v <= 255.0)) {
                throw ArgumentError("pixel (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") = " + std::to_string(v) + " outside [0, 255]");
            }
        }
    }
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path.string());
    const std::string text = buffer.str();
    const std::string file = path.string();

    if (text.size() < 2 || text[0] != 'P' || (text[1] != '2' && text[1] != '5')) {
        const std::string magic = text.substr(0, 2);
        throw ParseError(file + ": bad magic '" + magic + "', expected P2 or P5");
    }
    const bool binary = text[1] == '5';

    HeaderScanner scan{text, 2};
    const long width = scan.next_int("width", file);
    const long height = scan.next_int("height", file);
    const long maxval = scan.next_int("maxval", file);
    if (width <= 0 || height <= 0) {
        throw ParseError(file + ": non-positive PGM dimensions " + std::to_string(width) +
                         "x" + std::to_string(height));
    }
    if (maxval <= 0 || maxval > 255) {
        throw ParseError(file + ": maxval " + std::to_string(maxval) +
                         " outside [1, 255] (only 8-bit PGM is supported)");
    }

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<double> pixels;
    pixels.reserve(count);

    if (binary) {
        // exactly one whitespace byte separates the header from the payload
        if (scan.pos >= text.size() || !is_pgm_space(text[scan.pos])) {
            throw ParseError(file + ": missing separator before binary payload");
        }
        const std::size_t payload = scan.pos + 1;
        if (text.size() - payload < count) {
            throw ParseError(file + ": truncated payload, need " + std::to_string(count) +
                             " bytes, have " + std::to_string(text.size() - payload));
        }
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned char byte = static_cast<unsigned char>(text[payload + i]);
            if (byte > maxval) {
                throw ParseError(file + ": pixel value " + std::to_string(byte) +
                                 " exceeds maxval " + std::to_string(maxval));
            }
            pixels.push_back(static_cast<double>(byte));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = scan.next_int("pixel value", file);
            if (v < 0 || v > maxval) {
                throw ParseError(file + ": pixel value " + std::to_string(v) +
                                 " outside [0, " + std::to_string(maxval) + "]");
            }
            pixels.push_back(static_cast<double>(v));
        }
    }

    return GrayImage(Matrix(static_cast<std::size_t>(height), static_cast<std::size_t>(width),
                            std::move(pixels)));
}

void save_pgm(const GrayImage& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
    std::string payload;
    payload.reserve(image.width() * image.height());
    for (std::size_t i = 0; i < image.height(); ++i) {
        for (std::size_t j = 0; j < image.width(); ++j) {
            double v = std::round(image.pixels()(i, j));
            if (v < 0.0) v = 0.0;
            if (v > 255.0) v = 255.0;
            payload.push_back(static_cast<char>(static_cast<unsigned char>(v)));
        }
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out.flush()) throw IoError("write failure on " + path.string());
}

GrayImage clamp_to_image(const Matrix& m) {
    Matrix clamped(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            double v = m(i, j);
            if (v < 0.0) v = 0.0;
            if (v > 255.0) v = 255.0;
            clamped(i, j) = v;
        }
    }
    return GrayImage(std::move(clamped));
}

}  // namespace pcakit
