#pragma once

#include <string>

#include "deformlab/field.hpp"
#include "deformlab/image.hpp"
#include "deformlab/metrics.hpp"

namespace deformlab {

// Fields serialize to CSV: one "nx,ny" header line, then ny lines of nx
// row-major values. Doubles use shortest round-trip formatting, '.' decimal
// separator, '\n' line endings. Grids store x,y pairs per node, so each line
// carries 2*nx values.

std::string field_to_csv(const ScalarField2D& f);
ScalarField2D field_from_csv(const std::string& text);

std::string grid_to_csv(const Grid2D& g);
Grid2D grid_from_csv(const std::string& text);

/// Ratings CSV columns: image_id,method_id,rater_id,score. A header line is
/// skipped when present.
RatingsTable ratings_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

/// Reads a P5 portable graymap or an 8-bit PNG. Color PNG input is converted
/// to grayscale with the BT.601 luma weights.
GrayImage read_image(const std::string& path);

/// Writes PNG or PGM depending on the file extension (.png / .pgm).
void write_image(const std::string& path, const GrayImage& img);

GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& img);
std::string pgm_to_bytes(const GrayImage& img);

GrayImage read_png(const std::string& path);
void write_png(const std::string& path, const GrayImage& img);

}  // namespace deformlab
