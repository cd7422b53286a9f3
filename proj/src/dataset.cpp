#include "pcakit/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pcakit/errors.hpp"

namespace pcakit {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

bool parse_double(std::string_view field, double& out) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && !field.empty();
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, Orientation orientation) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path.string());
    const std::string text = buffer.str();

    // split into lines, accepting LF or CRLF, skipping a trailing empty line
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    const std::string_view view = text;
    for (std::size_t i = 0; i <= view.size(); ++i) {
        if (i == view.size() || view[i] == '\n') {
            std::string_view line = view.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!(i == view.size() && line.empty())) lines.push_back(line);
            start = i + 1;
        }
    }
    if (lines.empty()) throw ParseError(path.string() + ": empty file");

    // a first line with any non-numeric cell is a header of labels
    std::vector<std::string> header;
    std::size_t first_data = 0;
    {
        double ignored;
        bool all_numeric = true;
        for (auto f : split_fields(lines[0])) {
            if (!parse_double(f, ignored)) {
                all_numeric = false;
                break;
            }
        }
        if (!all_numeric) {
            for (auto f : split_fields(lines[0])) header.emplace_back(f);
            first_data = 1;
        }
    }
    if (first_data >= lines.size()) {
        throw ParseError(path.string() + ": no data rows after the header");
    }

    const std::size_t width = split_fields(lines[first_data]).size();
    const std::size_t height = lines.size() - first_data;
    std::vector<double> cells;
    cells.reserve(width * height);
    for (std::size_t li = first_data; li < lines.size(); ++li) {
        const auto fields = split_fields(lines[li]);
        const std::size_t line_no = li + 1;
        if (fields.size() != width) {
            throw ParseError(path.string() + ": line " + std::to_string(line_no) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(width));
        }
        for (std::size_t ci = 0; ci < fields.size(); ++ci) {
            double v;
            if (!parse_double(fields[ci], v) || !std::isfinite(v)) {
                throw ParseError(path.string() + ": line " + std::to_string(line_no) +
                                 ", column " + std::to_string(ci + 1) + ": '" +
                                 std::string(fields[ci]) + "' is not a finite number");
            }
            cells.push_back(v);
        }
    }
    if (!header.empty() && header.size() != width) {
        throw ParseError(path.string() + ": header has " + std::to_string(header.size()) +
                         " labels for " + std::to_string(width) + " columns");
    }

    Matrix as_read(height, width, std::move(cells));
    Matrix data = orientation == Orientation::RowsAreSamples ? transpose(as_read)
                                                             : std::move(as_read);

    std::vector<std::string> names;
    if (orientation == Orientation::RowsAreSamples && !header.empty()) {
        names = std::move(header);
    } else {
        for (std::size_t i = 0; i < data.rows(); ++i) {
            names.push_back("var" + std::to_string(i + 1));
        }
    }
    return Dataset{std::move(names), std::move(data), path.string()};
}

void write_csv(const std::filesystem::path& path, const Matrix& matrix,
               const std::vector<std::string>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    if (!header.empty()) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (j) out << ',';
            out << header[j];
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            if (j) out << ',';
            out << fmt17(matrix(i, j));
        }
        out << '\n';
    }
    if (!out.flush()) throw IoError("write failure on " + path.string());
}

void save_csv(const Dataset& dataset, const std::filesystem::path& path) {
    write_csv(path, transpose(dataset.data), dataset.variable_names);
}

void save_csv(const Matrix& matrix, const std::filesystem::path& path) {
    write_csv(path, transpose(matrix));
}

}  // namespace pcakit
