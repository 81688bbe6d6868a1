// Copyright 2026 The Authors.
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

#include "patsum/chains.hpp"
#include "patsum/collection.hpp"
#include "patsum/common.hpp"
#include "patsum/database.hpp"
#include "patsum/derivability.hpp"
#include "patsum/discretize.hpp"
#include "patsum/inverse.hpp"
#include "patsum/itemset.hpp"
#include "patsum/mining.hpp"
#include "patsum/ordering.hpp"
#include "patsum/profiles.hpp"
#include "patsum/projection.hpp"
#include "patsum/rational.hpp"
#include "patsum/rng.hpp"
#include "patsum/tiling.hpp"
