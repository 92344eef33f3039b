// Copyright 2026 The swapchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWAPCHAIN_DIAGRAMS_H
#define SWAPCHAIN_DIAGRAMS_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapchain/chain.h"
#include "swapchain/schmidt.h"

namespace swapchain {

/// Bar chart of (possibly unnormalized) Schmidt weights. Columns have unit
/// width, so each column's height is also its area.
struct AreaDiagram {
    std::vector<double> columns;
    std::string label;
};

/// Sorts descending and keeps the heights as given.
/// Throws EmptyInput or NegativeWeight.
AreaDiagram diagram_of(std::span<const double> weights, std::string label = {});
AreaDiagram diagram_of(std::initializer_list<double> weights, std::string label = {});

/// Column-wise sum. Throws EmptyInput for no diagrams and ShapeMismatch
/// for differing column counts.
AreaDiagram add(std::span<const AreaDiagram> diagrams, std::string label = {});

/// Box-weighted sum of the diagram: each box of width i contributes its
/// area times log2(i).
double emax_of_diagram(const AreaDiagram &d);

/// One diagram per gamma outcome of the chain, built from the
/// unnormalized end-pair weights, labelled "gamma=(...)".
std::vector<AreaDiagram> outcome_diagrams(const Chain &chain, const Limits &limits = {});

enum class DiagramFormat { Ascii, Svg };

/// Throws UnsupportedFormat for anything but "ascii" or "svg".
DiagramFormat parse_diagram_format(std::string_view name);

/// ASCII: 60-row height scale shared by all diagrams, numeric height
/// labels under each column. SVG 1.1 (g, rect, text only): unit columns
/// 40px wide, 200px per unit height, numbers printed with 6 decimals.
/// Output depends only on the input. Throws EmptyInput for no diagrams.
std::string render(std::span<const AreaDiagram> diagrams, DiagramFormat format);

}  // namespace swapchain

#endif
