/* Copyright 2026 The setint Authors
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

#pragma once

#include "setint/balance.hpp"
#include "setint/counterexamples.hpp"
#include "setint/errors.hpp"
#include "setint/integrate.hpp"
#include "setint/multifunction.hpp"
#include "setint/partition.hpp"
#include "setint/random.hpp"
#include "setint/setops.hpp"
#include "setint/spaces.hpp"
