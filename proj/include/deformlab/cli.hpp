#pragma once

#include <string>

#include "deformlab/metrics.hpp"
#include "deformlab/poisson.hpp"

namespace deformlab {

/// Reproducible run configuration. Values come from built-in defaults,
/// overridden by a flat key=value config file (DEFORMLAB_CONFIG or --config),
/// overridden by command-line flags, in that order.
struct RunConfig {
    double alpha = 1.0;
    int steps = 100;
    double solver_tol = 1e-10;
    int solver_max_iter = 20000;
    std::string solver = "dct";
    SSIMParams ssim{};
    unsigned seed = 12345;

    SolverOptions solver_options() const;
    void validate() const;  // throws std::invalid_argument
};

/// Applies key=value pairs from a config file; '#' starts a comment.
/// Unknown keys are a usage error (std::invalid_argument).
void apply_config_file(const std::string& path, RunConfig& cfg);

/// CLI entry point. Exit codes: 0 success, 1 usage error, 2 computation
/// error (fold, solver divergence, incompatible or unreadable inputs).
int run_cli(int argc, const char* const* argv);

}  // namespace deformlab
