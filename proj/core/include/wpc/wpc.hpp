// SPDX-License-Identifier: Apache-2.0
//
// wpc-lab: simulation and optimization laboratory for wirelessly powered communications
// Copyright (C) 2026 The wpc-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

#include "wpc/backscatter.hpp"
#include "wpc/channel.hpp"
#include "wpc/decoupler.hpp"
#include "wpc/error.hpp"
#include "wpc/random.hpp"
#include "wpc/rectenna.hpp"
#include "wpc/signal.hpp"
#include "wpc/types.hpp"
#include "wpc/ubiquitous_array.hpp"
