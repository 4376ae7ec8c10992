#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "radonsvm/svm.hpp"

namespace radonsvm {

/// Standalone SVG of a 2-D dataset: positive points as circles, negative as
/// squares, decision line solid with both margin lines dashed, support
/// vectors ringed, and the Radon point crossed when given. Fixed 800x800
/// viewport with 5% padding. Throws "plotting is 2-D only" otherwise.
void plot_svg(std::ostream& out, const LabeledPointSet& d, const SvmSolution* solution,
              const Vec* radon_point);

void plot_svg_file(const std::string& path, const LabeledPointSet& d,
                   const SvmSolution* solution, const Vec* radon_point);

}  // namespace radonsvm
