// Copyright 2026 The toric authors
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

#ifndef TORIC_TORIC_HPP
#define TORIC_TORIC_HPP

#include "toric/arith.hpp"
#include "toric/budget.hpp"
#include "toric/groebner.hpp"
#include "toric/parse.hpp"
#include "toric/poly.hpp"
#include "toric/radical.hpp"
#include "toric/system.hpp"
#include "toric/toricity.hpp"

#endif  // TORIC_TORIC_HPP
