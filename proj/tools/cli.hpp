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

#ifndef DQCAP_TOOLS_CLI_HPP
#define DQCAP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dqcap::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_invalid = 2;
    inline constexpr int exit_no_reference = 3;

    enum class SweepParameter
    {
        lambda,
        power,
        mu2,
        n_e
    };

    enum class SweepScale
    {
        linear,
        log
    };

    struct SweepSpec
    {
        SweepParameter parameter = SweepParameter::lambda;
        double start = 0.0;
        double stop = 1.0;
        int steps = 2;
        SweepScale scale = SweepScale::linear;

        // Throws invalid_input unless start < stop, steps >= 2 and (log) start > 0.
        void validate() const;
        // Grid values; the last one is exactly `stop`.
        std::vector<double> values() const;
    };

    // Entry point shared by the dqcap binary and the tests. Output goes to `out` unless
    // --out redirects it to a file; diagnostics go to `err`.
    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

    // Convenience for tests: argv[0] is supplied.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
