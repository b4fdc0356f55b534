#pragma once

// Picture of the segment (0,0)-(a,b) over the a x b grid with its three line
// families, each crossing labelled by the letter it contributes to s([a,b]).

#include "rigidroots/roots.hpp"

#include <filesystem>
#include <string>

namespace rigid {

/// Deterministic SVG document; the crossing labels read crossing_word(r).
std::string render_svg(const Integer& m, const Root& r);

/// Writes render_svg to path; throws std::runtime_error if it cannot.
void emit_svg(const Integer& m, const Root& r, const std::filesystem::path& path);

}  // namespace rigid
