#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deformlab/image.hpp"

namespace deformlab {

/// Stabilization constants, comparison-function exponents, and the tile side
/// used by mean_ssim. Defaults: c1 = (0.01*255)^2, c2 = (0.03*255)^2,
/// unit exponents, 8-pixel tiles.
struct SSIMParams {
    double c1 = 6.5025;
    double c2 = 58.5225;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    int window = 8;
};

/// Mean square error over all pixels; the sum of squared integer differences
/// is accumulated exactly before the single division.
double mse(const GrayImage& a, const GrayImage& b);

/// 10 * log10(L^2 / MSE), in dB. Identical images give +infinity.
double psnr(const GrayImage& a, const GrayImage& b, double L = 255.0);

/// Structural similarity with whole-image statistics (population divisor N).
/// With unit exponents this is the single rational SSIM expression; general
/// exponents weight the luminance, contrast and structure comparisons.
double ssim_global(const GrayImage& a, const GrayImage& b,
                   const SSIMParams& p = {});

/// Average SSIM over non-overlapping window x window tiles; ragged right and
/// bottom tiles enter at their natural size. A single tile reproduces
/// ssim_global bitwise.
double mean_ssim(const GrayImage& a, const GrayImage& b,
                 const SSIMParams& p = {});

/// One human rating: integer score 1 (bad) .. 5 (excellent).
struct Rating {
    std::string image_id;
    std::string method_id;
    std::string rater_id;
    int score = 0;
};

using RatingsTable = std::vector<Rating>;

/// Mean opinion score per method: arithmetic mean over all (image, rater)
/// scores, results sorted by method id.
std::vector<std::pair<std::string, double>> mos_aggregate(const RatingsTable& table);

}  // namespace deformlab
