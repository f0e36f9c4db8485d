// SPDX-License-Identifier: Apache-2.0
//
// dqcap - discrete quadrature capacity calculator for bosonic gaussian channels
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

#ifndef DQCAP_DQCAP_HPP
#define DQCAP_DQCAP_HPP

#include "dqcap/capacity_result.hpp"
#include "dqcap/dq_engine.hpp"
#include "dqcap/errors.hpp"
#include "dqcap/multiuser.hpp"
#include "dqcap/optimizer.hpp"
#include "dqcap/phase_model.hpp"
#include "dqcap/rate_region.hpp"
#include "dqcap/reference.hpp"

#endif
