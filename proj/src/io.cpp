#include "deformlab/io.hpp"

#include <png.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

// Pulls all comma/newline separated numeric tokens after the header line.
class CsvScanner {
public:
    explicit CsvScanner(const std::string& text) : text_(text) {}

    bool next_token(std::string_view& tok) {
        while (pos_ < text_.size() &&
               (text_[pos_] == ',' || text_[pos_] == '\n' || text_[pos_] == '\r' ||
                text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
        if (pos_ >= text_.size()) return false;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n' &&
               text_[pos_] != '\r')
            ++pos_;
        tok = std::string_view(text_).substr(start, pos_ - start);
        return true;
    }

    long next_int() {
        std::string_view tok;
        if (!next_token(tok)) throw Error("csv: unexpected end of input");
        long v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw Error("csv: expected an integer, got '" + std::string(tok) + "'");
        return v;
    }

    double next_double() {
        std::string_view tok;
        if (!next_token(tok)) throw Error("csv: unexpected end of input");
        double v = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw Error("csv: expected a number, got '" + std::string(tok) + "'");
        return v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string field_to_csv(const ScalarField2D& f) {
    std::string out;
    out.reserve(f.values.size() * 20 + 16);
    out += std::to_string(f.nx);
    out += ',';
    out += std::to_string(f.ny);
    out += '\n';
    for (int j = 0; j < f.ny; ++j) {
        for (int i = 0; i < f.nx; ++i) {
            if (i) out += ',';
            append_double(out, f.at(i, j));
        }
        out += '\n';
    }
    return out;
}

ScalarField2D field_from_csv(const std::string& text) {
    CsvScanner sc(text);
    const long nx = sc.next_int();
    const long ny = sc.next_int();
    if (nx < 3 || ny < 3 || nx > 1 << 20 || ny > 1 << 20)
        throw Error("csv: bad field dimensions");
    ScalarField2D f(static_cast<int>(nx), static_cast<int>(ny));
    for (double& v : f.values) v = sc.next_double();
    return f;
}

std::string grid_to_csv(const Grid2D& g) {
    std::string out;
    out.reserve(g.px.size() * 40 + 16);
    out += std::to_string(g.nx);
    out += ',';
    out += std::to_string(g.ny);
    out += '\n';
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (i) out += ',';
            append_double(out, g.x(i, j));
            out += ',';
            append_double(out, g.y(i, j));
        }
        out += '\n';
    }
    return out;
}

Grid2D grid_from_csv(const std::string& text) {
    CsvScanner sc(text);
    const long nx = sc.next_int();
    const long ny = sc.next_int();
    if (nx < 3 || ny < 3 || nx > 1 << 20 || ny > 1 << 20)
        throw Error("csv: bad grid dimensions");
    Grid2D g(static_cast<int>(nx), static_cast<int>(ny));
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            g.x(i, j) = sc.next_double();
            g.y(i, j) = sc.next_double();
        }
    return g;
}

RatingsTable ratings_from_csv(const std::string& text) {
    RatingsTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "image_id,method_id,rater_id,score") continue;
        }
        std::istringstream ls(line);
        Rating r;
        std::string score;
        if (!std::getline(ls, r.image_id, ',') ||
            !std::getline(ls, r.method_id, ',') ||
            !std::getline(ls, r.rater_id, ',') || !std::getline(ls, score))
            throw Error("ratings csv: expected image_id,method_id,rater_id,score");
        std::size_t used = 0;
        try {
            r.score = std::stoi(score, &used);
        } catch (const std::exception&) {
            throw InvalidScore("ratings csv: score is not an integer");
        }
        if (used != score.size())
            throw InvalidScore("ratings csv: score is not an integer");
        table.push_back(std::move(r));
    }
    if (table.empty()) throw EmptyTable("ratings csv has no records");
    return table;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw Error("failed writing '" + path + "'");
}

std::string pgm_to_bytes(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " +
                      std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

void write_pgm(const std::string& path, const GrayImage& img) {
    if (img.empty()) throw EmptyImage("refusing to write an empty image");
    write_text_file(path, pgm_to_bytes(img));
}

GrayImage read_pgm(const std::string& path) {
    const std::string bytes = read_text_file(path);
    std::size_t pos = 0;
    auto next_field = [&]() -> std::string {
        // skip whitespace and '#' comment lines between header fields
        while (pos < bytes.size()) {
            if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        const std::size_t start = pos;
        while (pos < bytes.size() &&
               !std::isspace(static_cast<unsigned char>(bytes[pos])))
            ++pos;
        return bytes.substr(start, pos - start);
    };
    if (next_field() != "P5") throw Error("'" + path + "' is not a P5 graymap");
    const long w = std::stol(next_field());
    const long h = std::stol(next_field());
    const long maxval = std::stol(next_field());
    if (w <= 0 || h <= 0) throw EmptyImage("graymap has no pixels");
    if (maxval <= 0 || maxval > 255)
        throw Error("only 8-bit graymaps are supported");
    ++pos;  // single whitespace after maxval
    const std::size_t need = static_cast<std::size_t>(w) * h;
    if (bytes.size() - pos < need) throw Error("graymap truncated");
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    for (std::size_t k = 0; k < need; ++k) {
        unsigned v = static_cast<unsigned char>(bytes[pos + k]);
        if (maxval != 255) v = (v * 255u + maxval / 2) / maxval;
        img.pixels[k] = static_cast<std::uint8_t>(v);
    }
    return img;
}

GrayImage read_png(const std::string& path) {
    png_image pim{};
    pim.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&pim, path.c_str()))
        throw Error("cannot read PNG '" + path + "': " + pim.message);

    const bool color = (pim.format & PNG_FORMAT_FLAG_COLOR) != 0;
    pim.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(pim));
    png_color bg{0, 0, 0};
    if (!png_image_finish_read(&pim, &bg, buf.data(), 0, nullptr)) {
        png_image_free(&pim);
        throw Error("cannot decode PNG '" + path + "': " + pim.message);
    }
    if (pim.width == 0 || pim.height == 0) throw EmptyImage("PNG has no pixels");

    GrayImage img(static_cast<int>(pim.width), static_cast<int>(pim.height));
    if (!color) {
        img.pixels.assign(buf.begin(), buf.end());
    } else {
        // BT.601 luma
        for (std::size_t k = 0; k < img.pixels.size(); ++k) {
            const double r = buf[3 * k], g = buf[3 * k + 1], b = buf[3 * k + 2];
            const double y = 0.299 * r + 0.587 * g + 0.114 * b;
            img.pixels[k] = static_cast<std::uint8_t>(std::lround(y));
        }
    }
    return img;
}

void write_png(const std::string& path, const GrayImage& img) {
    if (img.empty()) throw EmptyImage("refusing to write an empty image");
    png_image pim{};
    pim.version = PNG_IMAGE_VERSION;
    pim.width = static_cast<png_uint_32>(img.width);
    pim.height = static_cast<png_uint_32>(img.height);
    pim.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&pim, path.c_str(), 0, img.pixels.data(), 0, nullptr))
        throw Error("cannot write PNG '" + path + "': " + pim.message);
}

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

GrayImage read_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw Error("cannot open '" + path + "' for reading");
    char magic[2] = {0, 0};
    probe.read(magic, 2);
    probe.close();
    if (magic[0] == 'P' && magic[1] == '5') return read_pgm(path);
    return read_png(path);
}

void write_image(const std::string& path, const GrayImage& img) {
    if (has_suffix(path, ".pgm")) {
        write_pgm(path, img);
    } else if (has_suffix(path, ".png")) {
        write_png(path, img);
    } else {
        throw Error("unsupported image extension for '" + path +
                    "' (expected .png or .pgm)");
    }
}

}  // namespace deformlab
