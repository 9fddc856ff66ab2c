/*
 * Copyright 2026 The orbitcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORBITCODE_ORBITCODE_HPP
#define ORBITCODE_ORBITCODE_HPP

#include "orbitcode/analysis.hpp"
#include "orbitcode/bch.hpp"
#include "orbitcode/bitvec.hpp"
#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/groupaction.hpp"
#include "orbitcode/io.hpp"
#include "orbitcode/krawtchouk.hpp"
#include "orbitcode/linalg2.hpp"
#include "orbitcode/parallel.hpp"
#include "orbitcode/rng.hpp"
#include "orbitcode/tracecodes.hpp"

namespace orbitcode {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // ORBITCODE_ORBITCODE_HPP
