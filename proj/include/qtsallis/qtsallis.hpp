// Copyright 2026 The qtsallis developers
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

#include "qtsallis/channels.hpp"
#include "qtsallis/cli.hpp"
#include "qtsallis/complex_matrix.hpp"
#include "qtsallis/entropies.hpp"
#include "qtsallis/exchange.hpp"
#include "qtsallis/hermitian.hpp"
#include "qtsallis/random.hpp"
#include "qtsallis/report_io.hpp"
#include "qtsallis/states.hpp"
#include "qtsallis/suites.hpp"
#include "qtsallis/tolerances.hpp"
#include "qtsallis/verifiers.hpp"
