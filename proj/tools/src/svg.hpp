// Copyright 2026 The okbody Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "okbody/polytope.hpp"

namespace okb::cli {

// Static SVG of a polytope in dimension 2, or of its three coordinate-plane
// projections in dimension 3. Vertices carry exact rational labels. Throws
// DimensionMismatch for other dimensions.
std::string render_svg(const geom::Polytope& p, const std::string& title);

}  // namespace okb::cli
