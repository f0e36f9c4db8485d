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

#ifndef DQCAP_ERRORS_HPP
#define DQCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dqcap
{
    // Malformed or out-of-range input (non-finite values, lambda outside (0,1], W < 1/2, ...).
    class invalid_input : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Input is well formed but outside the regime a model is defined for.
    class unsupported_regime : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A comparison was requested for a channel family without a known reference formula.
    class no_reference : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
