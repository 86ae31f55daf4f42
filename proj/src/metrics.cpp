#include "deformlab/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

void require_same_size(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw DimensionMismatch("image dimensions disagree");
}

// SSIM over one rectangular region. Pixel sums are accumulated in 64-bit
// integers, so the raw moments are exact.
double ssim_region(const GrayImage& a, const GrayImage& b, int x0, int y0,
                   int w, int h, const SSIMParams& p) {
    std::int64_t sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    for (int y = y0; y < y0 + h; ++y)
        for (int x = x0; x < x0 + w; ++x) {
            const std::int64_t va = a.at(x, y);
            const std::int64_t vb = b.at(x, y);
            sa += va;
            sb += vb;
            saa += va * va;
            sbb += vb * vb;
            sab += va * vb;
        }
    const double n = static_cast<double>(w) * h;
    const double mu_a = sa / n;
    const double mu_b = sb / n;
    const double var_a = saa / n - mu_a * mu_a;
    const double var_b = sbb / n - mu_b * mu_b;
    const double cov = sab / n - mu_a * mu_b;

    if (p.alpha == 1.0 && p.beta == 1.0 && p.gamma == 1.0) {
        // the common single-expression form
        return ((2.0 * mu_a * mu_b + p.c1) * (2.0 * cov + p.c2)) /
               ((mu_a * mu_a + mu_b * mu_b + p.c1) * (var_a + var_b + p.c2));
    }
    const double sd_a = std::sqrt(var_a > 0.0 ? var_a : 0.0);
    const double sd_b = std::sqrt(var_b > 0.0 ? var_b : 0.0);
    const double c3 = p.c2 / 2.0;
    const double lum = (2.0 * mu_a * mu_b + p.c1) / (mu_a * mu_a + mu_b * mu_b + p.c1);
    const double con = (2.0 * sd_a * sd_b + p.c2) / (var_a + var_b + p.c2);
    const double str = (cov + c3) / (sd_a * sd_b + c3);
    return std::pow(lum, p.alpha) * std::pow(con, p.beta) * std::pow(str, p.gamma);
}

void validate_params(const SSIMParams& p) {
    if (!(p.c1 > 0.0) || !(p.c2 > 0.0))
        throw std::invalid_argument("ssim stabilization constants must be positive");
    if (p.window < 3) throw std::invalid_argument("ssim window must be >= 3");
}

}  // namespace

double mse(const GrayImage& a, const GrayImage& b) {
    require_same_size(a, b);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < a.pixels.size(); ++k) {
        const std::int64_t d =
            static_cast<std::int64_t>(a.pixels[k]) - static_cast<std::int64_t>(b.pixels[k]);
        acc += d * d;
    }
    return static_cast<double>(acc) / static_cast<double>(a.pixels.size());
}

double psnr(const GrayImage& a, const GrayImage& b, double L) {
    const double m = mse(a, b);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(L * L / m);
}

double ssim_global(const GrayImage& a, const GrayImage& b, const SSIMParams& p) {
    require_same_size(a, b);
    validate_params(p);
    return ssim_region(a, b, 0, 0, a.width, a.height, p);
}

double mean_ssim(const GrayImage& a, const GrayImage& b, const SSIMParams& p) {
    require_same_size(a, b);
    validate_params(p);
    if (p.window > a.width || p.window > a.height)
        throw WindowTooLarge("ssim window exceeds image dimensions");
    double sum = 0.0;
    int tiles = 0;
    for (int y0 = 0; y0 < a.height; y0 += p.window)
        for (int x0 = 0; x0 < a.width; x0 += p.window) {
            const int w = std::min(p.window, a.width - x0);
            const int h = std::min(p.window, a.height - y0);
            sum += ssim_region(a, b, x0, y0, w, h, p);
            ++tiles;
        }
    return sum / tiles;
}

std::vector<std::pair<std::string, double>> mos_aggregate(const RatingsTable& table) {
    if (table.empty()) throw EmptyTable("ratings table is empty");
    std::map<std::string, std::pair<double, int>> acc;  // method -> (sum, count)
    for (const Rating& r : table) {
        if (r.score < 1 || r.score > 5)
            throw InvalidScore("score must be an integer in 1..5");
        auto& slot = acc[r.method_id];
        slot.first += r.score;
        slot.second += 1;
    }
    std::vector<std::pair<std::string, double>> out;
    out.reserve(acc.size());
    for (const auto& [method, slot] : acc)
        out.emplace_back(method, slot.first / slot.second);
    return out;
}

}  // namespace deformlab
