// Copyright 2026 The ringchroma Authors
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


// Convenience header pulling in the whole library.

#ifndef RINGCHROMA_RINGCHROMA_HPP
#define RINGCHROMA_RINGCHROMA_HPP

#include "ringchroma/acceptance.hpp"
#include "ringchroma/bitset.hpp"
#include "ringchroma/bounds.hpp"
#include "ringchroma/chi_structure.hpp"
#include "ringchroma/coloring.hpp"
#include "ringchroma/dimacs.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/generators.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/gt_solver.hpp"
#include "ringchroma/hadwiger.hpp"
#include "ringchroma/matching.hpp"
#include "ringchroma/oracle.hpp"
#include "ringchroma/recognition.hpp"
#include "ringchroma/ring_coloring.hpp"

#endif  // RINGCHROMA_RINGCHROMA_HPP
