#pragma once

#include <string>

#include "core/config.hpp"
#include "core/instance.hpp"

namespace deltaric {

/// Instance document: a JSON object
///   { "n": 4, "m": 5, "c": 1.0,
///     "h": [ { "r": 1, "matrix": [[...], ...] }, ... ] }
/// with 1-based normal indices r; an omitted r means the zero matrix and
/// exact zero matrices are omitted on write. Doubles are emitted with
/// shortest round-trip precision, so parse(serialize(x)) restores every
/// value exactly.
///
/// Malformed documents (bad JSON, wrong types or shapes, duplicate or
/// out-of-range r) raise Parse errors; well-formed data that breaks an
/// instance invariant raises the Invariant error from validation.
Instance parse_instance(const std::string& text, const Config& cfg = {});
Instance load_instance(const std::string& path, const Config& cfg = {});
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

/// JSON object of config key -> number; unknown keys raise Parse errors.
void apply_config_file(Config& cfg, const std::string& path);

} // namespace deltaric
