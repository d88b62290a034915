//
// Copyright 2026 The Prestige Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PRESTIGE_PRESTIGE_HPP_
#define PRESTIGE_PRESTIGE_HPP_

#include "prestige/data.hpp"
#include "prestige/errors.hpp"
#include "prestige/experiment.hpp"
#include "prestige/loss.hpp"
#include "prestige/mechanism.hpp"
#include "prestige/model.hpp"
#include "prestige/random.hpp"
#include "prestige/trainer.hpp"
#include "prestige/types.hpp"
#include "prestige/verify.hpp"

#endif  // PRESTIGE_PRESTIGE_HPP_
