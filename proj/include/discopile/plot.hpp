// Copyright 2026 discopile contributors
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
#include <vector>

namespace discopile {

// Parses `iter,loss,accuracy` CSV text into the two curves.
// Throws ParseError (with line number) on malformed rows.
void parse_loss_csv(const std::string& text, std::vector<double>& loss,
                    std::vector<double>& accuracy);

// Standalone SVG with the loss and accuracy polylines on a shared y-axis
// plus tick labels. All coordinates print with fixed precision, so equal
// inputs yield byte-identical output. Throws Error on empty input.
std::string render_loss_svg(const std::vector<double>& loss,
                            const std::vector<double>& accuracy);

}  // namespace discopile
