#pragma once

#include <cstdint>
#include <string>

namespace deltaric {

/// All tolerances and optimizer settings in one place. Every numeric knob
/// is addressable by key for config files and the C surface.
struct Config {
    double tol_sym = 1e-12;      // totally-real symmetry of J-coefficients
    double tol_tg = 1e-10;       // totally geodesic: max |h| threshold
    double tol_min = 1e-8;       // minimal: mean-curvature threshold
    double tol_pu = 1e-8;        // pseudo-umbilical: A_H vs scalar identity, max norm
    double tol_einstein = 1e-8;  // Einstein hypothesis: Ricci eigenvalue spread
    double tol_eq = 1e-8;        // equality detection in theorem checks
    double tol_cert = 1e-6;      // certificate residual bound

    int restarts = 32;           // multi-start count for the frame optimizer
    int max_iterations = 10000;  // per-restart iteration cap
    double min_decrease = 1e-12; // stop once an iteration improves less than this
    std::uint64_t seed = 1;      // base seed; restart r uses a derived stream

    long oracle_samples = 0;     // >0: delta_q_ric also runs the sampling oracle

    void set(const std::string& key, double value);  // unknown key: Domain error
    double get(const std::string& key) const;        // unknown key: Domain error
};

} // namespace deltaric
