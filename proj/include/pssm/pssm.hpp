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

#ifndef PSSM_PSSM_HPP_
#define PSSM_PSSM_HPP_

#include "pssm/data.hpp"
#include "pssm/experiment.hpp"
#include "pssm/noise.hpp"
#include "pssm/objective.hpp"
#include "pssm/objectives.hpp"
#include "pssm/oracle_checks.hpp"
#include "pssm/privacy.hpp"
#include "pssm/streaming.hpp"

#endif  // PSSM_PSSM_HPP_
