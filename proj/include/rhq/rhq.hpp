// Copyright 2026 The rhq Authors
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


// Umbrella header.

#pragma once

#include "rhq/cli/args.hpp"
#include "rhq/discriminator/discriminator.hpp"
#include "rhq/engine/builtin.hpp"
#include "rhq/engine/check.hpp"
#include "rhq/engine/sweep.hpp"
#include "rhq/error.hpp"
#include "rhq/io/json.hpp"
#include "rhq/qasm/emit.hpp"
#include "rhq/qasm/parser.hpp"
#include "rhq/qasm/perturb.hpp"
#include "rhq/randstate/local_random.hpp"
#include "rhq/rng.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"
#include "rhq/sim/gradient.hpp"
#include "rhq/sim/matrix.hpp"
#include "rhq/sim/param.hpp"
#include "rhq/sim/simulator.hpp"
#include "rhq/sim/statevector.hpp"
#include "rhq/train/adam.hpp"
#include "rhq/train/train.hpp"
#include "rhq/version.hpp"
