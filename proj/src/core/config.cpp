#include "core/config.hpp"

#include <cmath>

#include "core/error.hpp"

namespace deltaric {

namespace {

template <typename F>
void with_entry(const std::string& key, Config& cfg, F&& fn) {
    if (key == "tol_sym") return fn(cfg.tol_sym);
    if (key == "tol_tg") return fn(cfg.tol_tg);
    if (key == "tol_min") return fn(cfg.tol_min);
    if (key == "tol_pu") return fn(cfg.tol_pu);
    if (key == "tol_einstein") return fn(cfg.tol_einstein);
    if (key == "tol_eq") return fn(cfg.tol_eq);
    if (key == "tol_cert") return fn(cfg.tol_cert);
    fail(ErrorKind::Domain, "unknown config key '" + key + "'");
}

} // namespace

void Config::set(const std::string& key, double value) {
    if (key == "restarts") {
        restarts = static_cast<int>(std::llround(value));
        if (restarts < 1) fail(ErrorKind::Domain, "restarts must be >= 1");
        return;
    }
    if (key == "max_iterations") {
        max_iterations = static_cast<int>(std::llround(value));
        if (max_iterations < 1) fail(ErrorKind::Domain, "max_iterations must be >= 1");
        return;
    }
    if (key == "min_decrease") { min_decrease = value; return; }
    if (key == "seed") {
        seed = static_cast<std::uint64_t>(std::llround(value));
        return;
    }
    if (key == "oracle_samples") {
        oracle_samples = static_cast<long>(std::llround(value));
        return;
    }
    with_entry(key, *this, [&](double& slot) { slot = value; });
}

double Config::get(const std::string& key) const {
    if (key == "restarts") return restarts;
    if (key == "max_iterations") return max_iterations;
    if (key == "min_decrease") return min_decrease;
    if (key == "seed") return static_cast<double>(seed);
    if (key == "oracle_samples") return static_cast<double>(oracle_samples);
    double out = 0.0;
    with_entry(key, const_cast<Config&>(*this), [&](double& slot) { out = slot; });
    return out;
}

} // namespace deltaric
