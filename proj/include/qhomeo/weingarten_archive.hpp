// Copyright 2026 The qhomeo Authors
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

#include <iosfwd>
#include <string>

#include "qhomeo/commutant.hpp"

namespace qhomeo {

inline constexpr int kWeingartenSchemaVersion = 1;

/// Line-oriented text archive of a WeingartenTable. Reals are written as C99
/// hex floats so a round trip is bit exact. Layout:
///
///   qhomeo-weingarten
///   schema_version 1
///   normalization G_ab = d^-k tr(Omega_a^dag Omega_b) = d^-alpha_ab, d = 2^n
///   k <k> n <n> size <N> pseudo <0|1>
///   monomial <index> <m> <V columns as bit strings> <M rows as bit strings>
///   alpha <N integers>        (N lines)
///   gram <N hex floats>       (N lines)
///   weingarten <N hex floats> (N lines)
void write_weingarten_archive(std::ostream &os, const WeingartenTable &table);
WeingartenTable read_weingarten_archive(std::istream &is);

void save_weingarten_archive(const std::string &path, const WeingartenTable &table);
WeingartenTable load_weingarten_archive(const std::string &path);

} // namespace qhomeo
