// Copyright 2026 The scarsim Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCARSIM_IO_HPP
#define SCARSIM_IO_HPP

#include <iosfwd>
#include <string>

namespace scarsim {

// All numeric output is formatted through these helpers so that identical
// configurations produce byte-identical files.

/// Shortest representation that is still lossless for doubles ("%.17g").
std::string fmt_full(double v);

/// Data-file precision ("%.12g").
std::string fmt_data(double v);

}  // namespace scarsim

#endif  // SCARSIM_IO_HPP
