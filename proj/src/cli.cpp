#include "deformlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deformlab/deform.hpp"
#include "deformlab/errors.hpp"
#include "deformlab/features.hpp"
#include "deformlab/io.hpp"
#include "deformlab/losses.hpp"
#include "deformlab/monitor.hpp"
#include "deformlab/poisson.hpp"

namespace deformlab {

SolverOptions RunConfig::solver_options() const {
    SolverOptions opts;
    opts.tol = solver_tol;
    opts.max_iter = solver_max_iter;
    opts.method = solver_method_from_name(solver);
    return opts;
}

void RunConfig::validate() const {
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (!(solver_tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (solver_max_iter < 1) throw std::invalid_argument("max-iter must be >= 1");
    if (ssim.window < 3) throw std::invalid_argument("ssim-window must be >= 3");
    if (!(ssim.c1 > 0.0) || !(ssim.c2 > 0.0))
        throw std::invalid_argument("ssim constants must be > 0");
    solver_method_from_name(solver);
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "alpha") cfg.alpha = std::stod(value);
            else if (key == "steps") cfg.steps = std::stoi(value);
            else if (key == "solver_tol") cfg.solver_tol = std::stod(value);
            else if (key == "solver_max_iter") cfg.solver_max_iter = std::stoi(value);
            else if (key == "solver") cfg.solver = value;
            else if (key == "ssim_window") cfg.ssim.window = std::stoi(value);
            else if (key == "ssim_c1") cfg.ssim.c1 = std::stod(value);
            else if (key == "ssim_c2") cfg.ssim.c2 = std::stod(value);
            else if (key == "ssim_alpha") cfg.ssim.alpha = std::stod(value);
            else if (key == "ssim_beta") cfg.ssim.beta = std::stod(value);
            else if (key == "ssim_gamma") cfg.ssim.gamma = std::stod(value);
            else if (key == "seed") cfg.seed = static_cast<unsigned>(std::stoul(value));
            else
                throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                            ": unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": bad value for '" + key + "'");
        }
    }
}

namespace {

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string format_psnr(double v) {
    if (std::isinf(v)) return "inf";
    return format_double("%.6f", v);
}

std::vector<double> parse_probs(const std::string& text) {
    std::vector<double> probs;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string piece;
        std::istringstream ts(tok);
        while (std::getline(ts, piece, ',')) {
            if (piece.empty() || piece == "prob" || piece == "probability") continue;
            try {
                probs.push_back(std::stod(piece));
            } catch (const std::exception&) {
                throw Error("probs file: '" + piece + "' is not a number");
            }
        }
    }
    return probs;
}

int cmd_deform(const RunConfig& cfg, const std::string& image_path,
               const std::string& grid_out) {
    const GrayImage img = read_image(image_path);
    const ScalarField2D f1 = image_to_monitor(img, cfg.alpha);
    const MonitorPair pair =
        make_monitor_pair(uniform_monitor(img.width, img.height), f1);
    const VectorField2D u = velocity_from_monitor(pair, cfg.solver_options());
    const Grid2D grid = integrate_deformation(pair, u, cfg.steps);
    write_text_file(grid_out, grid_to_csv(grid));
    return 0;
}

int cmd_features(const RunConfig& cfg, const std::string& image_path,
                 const std::string& jd_out, const std::string& cv_out,
                 const std::string& jd_csv, const std::string& cv_csv) {
    const GrayImage img = read_image(image_path);
    const FeatureMaps maps =
        feature_maps(img, cfg.alpha, cfg.steps, cfg.solver_options());
    if (!jd_out.empty()) write_image(jd_out, render_feature_image(maps.jd));
    if (!cv_out.empty()) write_image(cv_out, render_feature_image(maps.cv));
    if (!jd_csv.empty()) write_text_file(jd_csv, field_to_csv(maps.jd));
    if (!cv_csv.empty()) write_text_file(cv_csv, field_to_csv(maps.cv));
    return 0;
}

int cmd_metrics(const RunConfig& cfg, const std::string& ref_path,
                const std::string& test_path) {
    const GrayImage ref = read_image(ref_path);
    const GrayImage test = read_image(test_path);
    const double p = psnr(ref, test);
    const double s = ssim_global(ref, test, cfg.ssim);
    const double ms = mean_ssim(ref, test, cfg.ssim);
    std::cout << "psnr_db,ssim,mean_ssim\n"
              << format_psnr(p) << ',' << format_double("%.6f", s) << ','
              << format_double("%.6f", ms) << '\n';
    return 0;
}

int cmd_loss(const RunConfig& cfg, const std::string& hr_path,
             const std::string& sr_path, const std::string& probs_path) {
    const GrayImage hr = read_image(hr_path);
    const GrayImage sr = read_image(sr_path);
    const double content =
        content_loss_cv(hr, sr, cfg.alpha, cfg.steps, cfg.solver_options());
    if (probs_path.empty()) {
        std::cout << "content,total\n"
                  << format_double("%.10g", content) << ','
                  << format_double("%.10g", content) << '\n';
        return 0;
    }
    DiscriminatorProbs probs{parse_probs(read_text_file(probs_path))};
    const double adv = adversarial_loss(probs);
    const double total = perceptual_loss(content, adv);
    std::cout << "content,adversarial,total\n"
              << format_double("%.10g", content) << ','
              << format_double("%.10g", adv) << ','
              << format_double("%.10g", total) << '\n';
    return 0;
}

int cmd_mos(const std::string& ratings_path) {
    const RatingsTable table = ratings_from_csv(read_text_file(ratings_path));
    std::cout << "method_id,mean_score\n";
    for (const auto& [method, mean] : mos_aggregate(table))
        std::cout << method << ',' << format_double("%.2f", mean) << '\n';
    return 0;
}

// --config is honored wherever it appears on the command line, so it is
// extracted before CLI11 sees the arguments.
std::string extract_config_path(std::vector<std::string>& args) {
    std::string path;
    if (const char* env = std::getenv("DEFORMLAB_CONFIG")) path = env;
    for (std::size_t k = 0; k < args.size();) {
        if (args[k] == "--config") {
            if (k + 1 >= args.size())
                throw std::invalid_argument("--config needs a file path");
            path = args[k + 1];
            args.erase(args.begin() + k, args.begin() + k + 2);
        } else if (args[k].rfind("--config=", 0) == 0) {
            path = args[k].substr(9);
            args.erase(args.begin() + k);
        } else {
            ++k;
        }
    }
    return path;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig cfg;
    try {
        const std::string config_path = extract_config_path(args);
        if (!config_path.empty()) apply_config_file(config_path, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    CLI::App app{"Grid deformations with a prescribed Jacobian determinant, "
                 "JD/CV feature maps, image quality metrics and losses"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string image_path, grid_out, jd_out, cv_out, jd_csv, cv_csv;
    std::string ref_path, test_path, hr_path, sr_path, probs_path, ratings_path;

    auto add_pipeline_flags = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", cfg.alpha, "monitor contrast weight");
        cmd->add_option("--steps", cfg.steps, "RK4 time steps");
        cmd->add_option("--tol", cfg.solver_tol, "Poisson residual tolerance");
        cmd->add_option("--max-iter", cfg.solver_max_iter, "solver iteration budget");
        cmd->add_option("--solver", cfg.solver, "poisson backend: dct or cg");
    };

    CLI::App* deform_cmd =
        app.add_subcommand("deform", "deform the identity grid toward an image monitor");
    deform_cmd->add_option("--image", image_path, "input image (PNG or PGM)")->required();
    deform_cmd->add_option("--grid", grid_out, "output grid CSV")->required();
    add_pipeline_flags(deform_cmd);

    CLI::App* features_cmd =
        app.add_subcommand("features", "compute JD and CV feature maps of an image");
    features_cmd->add_option("--image", image_path, "input image (PNG or PGM)")->required();
    features_cmd->add_option("--jd", jd_out, "JD feature image output");
    features_cmd->add_option("--cv", cv_out, "CV feature image output");
    features_cmd->add_option("--jd-csv", jd_csv, "JD field CSV output");
    features_cmd->add_option("--cv-csv", cv_csv, "CV field CSV output");
    add_pipeline_flags(features_cmd);

    CLI::App* metrics_cmd =
        app.add_subcommand("metrics", "PSNR / SSIM / mean-SSIM between two images");
    metrics_cmd->add_option("--ref", ref_path, "reference image")->required();
    metrics_cmd->add_option("--test", test_path, "image under test")->required();
    metrics_cmd->add_option("--ssim-window", cfg.ssim.window, "mean-SSIM tile side");

    CLI::App* loss_cmd = app.add_subcommand("loss", "content / adversarial / total loss");
    loss_cmd->add_option("--hr", hr_path, "reference image")->required();
    loss_cmd->add_option("--sr", sr_path, "reconstructed image")->required();
    loss_cmd->add_option("--probs", probs_path, "discriminator probabilities CSV");
    add_pipeline_flags(loss_cmd);

    CLI::App* mos_cmd = app.add_subcommand("mos", "aggregate mean opinion scores");
    mos_cmd->add_option("--ratings", ratings_path,
                        "CSV with image_id,method_id,rater_id,score")->required();

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (deform_cmd->parsed()) return cmd_deform(cfg, image_path, grid_out);
        if (features_cmd->parsed())
            return cmd_features(cfg, image_path, jd_out, cv_out, jd_csv, cv_csv);
        if (metrics_cmd->parsed()) return cmd_metrics(cfg, ref_path, test_path);
        if (loss_cmd->parsed()) return cmd_loss(cfg, hr_path, sr_path, probs_path);
        if (mos_cmd->parsed()) return cmd_mos(ratings_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace deformlab
