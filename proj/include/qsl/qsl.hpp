// Copyright 2026 The qsl-bounds Authors
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

#include "qsl/bounds.hpp"
#include "qsl/error.hpp"
#include "qsl/figures.hpp"
#include "qsl/moments.hpp"
#include "qsl/numerics.hpp"
#include "qsl/overlap.hpp"
#include "qsl/regime.hpp"
#include "qsl/sampling.hpp"
#include "qsl/serialize.hpp"
#include "qsl/spectral_state.hpp"
#include "qsl/state_io.hpp"
#include "qsl/verify/envelope_check.hpp"
#include "qsl/verify/falsify.hpp"
#include "qsl/verify/orthogonalization.hpp"
#include "qsl/verify/tangency.hpp"
