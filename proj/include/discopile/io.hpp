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

namespace discopile {

// Reads a whole file as bytes. Throws IoError on failure.
std::string read_file(const std::string& path);

// Writes via a temp file in the same directory plus rename, so a failed
// write never leaves a partial file at `path`. Throws IoError on failure.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace discopile
