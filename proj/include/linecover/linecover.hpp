// Copyright 2026 The linecover Authors
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

#include "linecover/bgp.hpp"
#include "linecover/bup.hpp"
#include "linecover/config.hpp"
#include "linecover/error.hpp"
#include "linecover/evalsim.hpp"
#include "linecover/graph.hpp"
#include "linecover/graph_io.hpp"
#include "linecover/json_format.hpp"
#include "linecover/serialize.hpp"
#include "linecover/svg.hpp"
#include "linecover/synthetic.hpp"
#include "linecover/trob_router.hpp"
