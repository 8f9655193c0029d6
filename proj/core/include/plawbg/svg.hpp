#pragma once

#include <string>

#include "plawbg/pipeline.hpp"

namespace plawbg {

/// Log-log scatter of observed, model and rebinned counts as a standalone
/// SVG document.
std::string render_fit_svg(const PipelineResult& r);

}  // namespace plawbg
