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

#include "cli.hpp"
#include "output_record.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace dqcap::cli
{
    namespace
    {
        struct ChannelParams
        {
            std::optional<double> lambda, n_e, mu2, sigma_r, sigma_s;
        };

        struct CommonArgs
        {
            std::string channel;
            ChannelParams params;
            std::optional<double> power;
            bool integer_levels = false;
            std::string out;
        };

        struct SweepArgs
        {
            std::string param = "lambda";
            double start = 0.0, stop = 1.0;
            int steps = 2;
            std::string scale = "linear";
            std::string param2;
            double start2 = 0.0, stop2 = 1.0;
            int steps2 = 2;
            std::string scale2 = "linear";
        };

        struct RegionArgs
        {
            std::string kind;
            double lambda = 0.0;
            double power = 0.5;
            double power_b = 0.5;
            int points = 64;
            std::string out;
        };

        const std::map<std::string, CapacityKind> capacity_kinds{
            {"classical", CapacityKind::classical},
            {"quantum", CapacityKind::quantum},
            {"private", CapacityKind::private_},
        };

        const std::map<std::string, SweepParameter> sweep_parameters{
            {"lambda", SweepParameter::lambda},
            {"power", SweepParameter::power},
            {"mu2", SweepParameter::mu2},
            {"n_e", SweepParameter::n_e},
            {"ne", SweepParameter::n_e},
        };

        const std::map<std::string, SweepScale> sweep_scales{
            {"linear", SweepScale::linear},
            {"log", SweepScale::log},
        };

        template <class T>
        T lookup(const std::map<std::string, T> &table, const std::string &key, const char *what)
        {
            const auto it = table.find(key);
            if (it == table.end())
                throw invalid_input(std::string("unknown ") + what + " '" + key + "'");
            return it->second;
        }

        double require(const std::optional<double> &v, const char *flag, const std::string &family)
        {
            if (!v)
                throw invalid_input(std::string(flag) + " is required for channel '" + family + "'");
            return *v;
        }

        void reject(const std::optional<double> &v, const char *flag, const std::string &family)
        {
            if (v)
                throw invalid_input(std::string(flag) + " does not apply to channel '" + family + "'");
        }

        ChannelModel build_channel(const std::string &family, const ChannelParams &p)
        {
            ChannelModel channel;
            if (family == "attenuation")
            {
                reject(p.n_e, "--ne", family);
                reject(p.mu2, "--mu2", family);
                reject(p.sigma_r, "--sigma-r", family);
                reject(p.sigma_s, "--sigma-s", family);
                channel = Attenuation{require(p.lambda, "--lambda", family)};
            }
            else if (family == "thermal")
            {
                reject(p.mu2, "--mu2", family);
                reject(p.sigma_r, "--sigma-r", family);
                reject(p.sigma_s, "--sigma-s", family);
                channel = ThermalNoise{require(p.lambda, "--lambda", family), require(p.n_e, "--ne", family)};
            }
            else if (family == "classical-noise" || family == "dephasing")
            {
                reject(p.lambda, "--lambda", family);
                reject(p.n_e, "--ne", family);
                reject(p.sigma_r, "--sigma-r", family);
                reject(p.sigma_s, "--sigma-s", family);
                const double mu2 = require(p.mu2, "--mu2", family);
                if (family == "dephasing")
                    channel = Dephasing{mu2};
                else
                    channel = ClassicalNoise{mu2};
            }
            else if (family == "additive")
            {
                reject(p.n_e, "--ne", family);
                reject(p.mu2, "--mu2", family);
                channel = AdditiveGaussian{require(p.lambda, "--lambda", family),
                                           require(p.sigma_r, "--sigma-r", family),
                                           require(p.sigma_s, "--sigma-s", family)};
            }
            else
                throw invalid_input("unknown channel '" + family + "'");
            validate_channel(channel);
            return channel;
        }

        CapacityResult compute(CapacityKind kind, const ChannelModel &channel, const PowerBudget &budget,
                               bool integer_levels)
        {
            switch (kind)
            {
            case CapacityKind::classical:
                return classical_capacity(channel, budget, integer_levels);
            case CapacityKind::quantum:
                return quantum_capacity(channel, budget);
            case CapacityKind::private_:
                return private_capacity(channel, budget);
            }
            throw invalid_input("unknown capacity kind");
        }

        std::optional<ReferenceValue> reference_for(CapacityKind kind, const ChannelModel &channel,
                                                    const PowerBudget &budget)
        {
            return kind == CapacityKind::classical ? classical_reference(channel, budget) : quantum_reference(channel);
        }

        OutputRecord evaluate(CapacityKind kind, const ChannelModel &channel, double power, bool integer_levels,
                              bool with_reference)
        {
            const PowerBudget budget(power);
            OutputRecord rec{channel, kind, power, compute(kind, channel, budget, integer_levels), {}, {}, {}};
            if (!with_reference)
                return rec;
            if (const auto ref = reference_for(kind, channel, budget))
            {
                rec.reference_bits = ref->bits;
                rec.reference_kind = ref->kind;
                if (std::isfinite(rec.dq.bits) && std::isfinite(ref->bits))
                    rec.gap_bits = gap_report(rec.dq, ref->bits, ref->kind).gap_bits;
            }
            return rec;
        }

        // Writes `text` to --out if given, else to `out`.
        void emit(const std::string &text, const std::string &path, std::ostream &out)
        {
            if (path.empty())
            {
                out << text;
                return;
            }
            std::ofstream file(path, std::ios::binary);
            if (!file)
                throw invalid_input("cannot open output file '" + path + "'");
            file << text;
        }

        void add_channel_options(CLI::App *sub, CommonArgs &a)
        {
            sub->add_option("--channel", a.channel, "attenuation | thermal | classical-noise | dephasing | additive")
                ->required();
            sub->add_option("--lambda", a.params.lambda, "Transmissivity in (0, 1]");
            sub->add_option("--ne", a.params.n_e, "Thermal environment mean photon number");
            sub->add_option("--mu2", a.params.mu2, "Classical noise power");
            sub->add_option("--sigma-r", a.params.sigma_r, "Environment P std (additive channel)");
            sub->add_option("--sigma-s", a.params.sigma_s, "Environment Q std (additive channel)");
            sub->add_option("--power", a.power, "Mean signal power W >= 1/2");
            sub->add_flag("--integer-levels", a.integer_levels, "Round state counts up to integers");
            sub->add_option("--out", a.out, "Write output to a file instead of stdout");
        }

        int cmd_capacity(const std::string &kind, const CommonArgs &a, std::ostream &out)
        {
            const CapacityKind k = lookup(capacity_kinds, kind, "capacity kind");
            const ChannelModel channel = build_channel(a.channel, a.params);
            if (!a.power)
                throw invalid_input("--power is required");
            const OutputRecord rec = evaluate(k, channel, *a.power, a.integer_levels, false);
            emit(to_json(rec, "capacity").dump() + "\n", a.out, out);
            return exit_ok;
        }

        int cmd_compare(const std::string &kind, const CommonArgs &a, std::ostream &out, std::ostream &err)
        {
            const CapacityKind k = lookup(capacity_kinds, kind, "capacity kind");
            const ChannelModel channel = build_channel(a.channel, a.params);
            if (!a.power)
                throw invalid_input("--power is required");
            const OutputRecord rec = evaluate(k, channel, *a.power, a.integer_levels, true);
            if (!rec.reference_bits)
            {
                err << "dqcap: no reference available for " << to_string(k) << " capacity of channel '"
                    << a.channel << "'\n";
                return exit_no_reference;
            }
            emit(to_json(rec, "compare").dump() + "\n", a.out, out);
            return exit_ok;
        }

        int cmd_region(const RegionArgs &a, std::ostream &out)
        {
            std::optional<RateRegion> region;
            if (a.kind == "broadcast")
                region = broadcast_region(a.lambda, PowerBudget(a.power));
            else if (a.kind == "mac")
                region = mac_region(a.lambda, PowerBudget(a.power), PowerBudget(a.power_b));
            else if (a.kind == "cq-tradeoff")
                region = cq_tradeoff_region(Attenuation{a.lambda}, PowerBudget(a.power));
            else
                throw invalid_input("unknown region '" + a.kind + "'");

            std::string text = "x_rate,y_rate\n";
            for (const RatePoint &p : region_boundary(*region, a.points))
                text += format_number(p[0]) + "," + format_number(p[1]) + "\n";
            emit(text, a.out, out);
            return exit_ok;
        }

        void apply(ChannelParams &p, double &power, SweepParameter which, double v)
        {
            switch (which)
            {
            case SweepParameter::lambda:
                p.lambda = v;
                break;
            case SweepParameter::power:
                power = v;
                break;
            case SweepParameter::mu2:
                p.mu2 = v;
                break;
            case SweepParameter::n_e:
                p.n_e = v;
                break;
            }
        }

        SweepSpec make_spec(const std::string &param, double start, double stop, int steps, const std::string &scale)
        {
            SweepSpec s{lookup(sweep_parameters, param, "sweep parameter"), start, stop, steps,
                        lookup(sweep_scales, scale, "sweep scale")};
            s.validate();
            return s;
        }

        int cmd_sweep(const std::string &kind, const CommonArgs &a, const SweepArgs &s, std::ostream &out)
        {
            const CapacityKind k = lookup(capacity_kinds, kind, "capacity kind");
            std::vector<SweepSpec> axes{make_spec(s.param, s.start, s.stop, s.steps, s.scale)};
            if (!s.param2.empty())
                axes.push_back(make_spec(s.param2, s.start2, s.stop2, s.steps2, s.scale2));
            if (axes.size() == 2 && axes[0].parameter == axes[1].parameter)
                throw invalid_input("sweep axes must differ");

            const std::vector<double> outer = axes[0].values();
            const std::vector<double> inner = axes.size() == 2 ? axes[1].values() : std::vector<double>{0.0};

            std::string text = csv_header() + "\n";
            for (double u : outer)
            {
                for (double v : inner)
                {
                    ChannelParams params = a.params;
                    double power = a.power.value_or(std::nan(""));
                    apply(params, power, axes[0].parameter, u);
                    if (axes.size() == 2)
                        apply(params, power, axes[1].parameter, v);
                    if (std::isnan(power))
                        throw invalid_input("--power is required unless power is swept");
                    const ChannelModel channel = build_channel(a.channel, params);
                    text += csv_row(evaluate(k, channel, power, a.integer_levels, true)) + "\n";
                }
            }
            emit(text, a.out, out);
            return exit_ok;
        }
    }

    void SweepSpec::validate() const
    {
        if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
            throw invalid_input("sweep needs finite start < stop");
        if (steps < 2)
            throw invalid_input("sweep needs at least 2 steps");
        if (scale == SweepScale::log && start <= 0.0)
            throw invalid_input("log-scale sweep needs start > 0");
    }

    std::vector<double> SweepSpec::values() const
    {
        validate();
        std::vector<double> v(static_cast<std::size_t>(steps));
        const double denom = static_cast<double>(steps - 1);
        for (int i = 0; i < steps; ++i)
        {
            const double t = static_cast<double>(i) / denom;
            v[static_cast<std::size_t>(i)] = scale == SweepScale::linear
                                                 ? start + t * (stop - start)
                                                 : std::exp(std::log(start) + t * (std::log(stop) - std::log(start)));
        }
        v.front() = start;
        v.back() = stop;
        return v;
    }

    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"dqcap: discrete quadrature capacities of bosonic gaussian channels", "dqcap"};
        app.require_subcommand(1);

        std::string cap_kind;
        CommonArgs cap_args;
        auto *capacity = app.add_subcommand("capacity", "Single-point DQ capacity as JSON");
        capacity->add_option("kind", cap_kind, "classical | quantum | private")->required();
        add_channel_options(capacity, cap_args);

        std::string cmp_kind = "classical";
        CommonArgs cmp_args;
        auto *compare = app.add_subcommand("compare", "DQ capacity against the gaussian reference, as JSON");
        compare->add_option("kind", cmp_kind, "classical | quantum (default classical)");
        add_channel_options(compare, cmp_args);

        RegionArgs reg_args;
        auto *region = app.add_subcommand("region", "Pareto boundary of a rate region as CSV");
        region->add_option("kind", reg_args.kind, "broadcast | mac | cq-tradeoff")->required();
        region->add_option("--lambda", reg_args.lambda, "Beamsplitter transmissivity")->required();
        region->add_option("--power", reg_args.power, "Power W (sender A for mac)")->required();
        region->add_option("--power-b", reg_args.power_b, "Power of sender B (mac only)");
        region->add_option("--points", reg_args.points, "Number of boundary points (>= 2)");
        region->add_option("--out", reg_args.out, "Write output to a file instead of stdout");

        std::string swp_kind;
        CommonArgs swp_args;
        SweepArgs swp;
        auto *sweep = app.add_subcommand("sweep", "Parameter sweep as CSV, rows in row-major order");
        sweep->add_option("kind", swp_kind, "classical | quantum | private")->required();
        add_channel_options(sweep, swp_args);
        sweep->add_option("--param", swp.param, "Swept parameter: lambda | power | mu2 | n_e");
        sweep->add_option("--start", swp.start)->required();
        sweep->add_option("--stop", swp.stop)->required();
        sweep->add_option("--steps", swp.steps, "Grid points (>= 2)")->required();
        sweep->add_option("--scale", swp.scale, "linear | log");
        sweep->add_option("--param2", swp.param2, "Optional inner sweep parameter");
        sweep->add_option("--start2", swp.start2);
        sweep->add_option("--stop2", swp.stop2);
        sweep->add_option("--steps2", swp.steps2);
        sweep->add_option("--scale2", swp.scale2);

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForAllHelp &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError &e)
        {
            err << "dqcap: " << e.what() << "\n";
            return exit_invalid;
        }

        try
        {
            if (capacity->parsed())
                return cmd_capacity(cap_kind, cap_args, out);
            if (compare->parsed())
                return cmd_compare(cmp_kind, cmp_args, out, err);
            if (region->parsed())
                return cmd_region(reg_args, out);
            return cmd_sweep(swp_kind, swp_args, swp, out);
        }
        catch (const no_reference &e)
        {
            err << "dqcap: " << e.what() << "\n";
            return exit_no_reference;
        }
        catch (const std::logic_error &e)
        {
            // invalid_input, unsupported_regime and g's domain_error all land here
            err << "dqcap: " << e.what() << "\n";
            return exit_invalid;
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        std::vector<const char *> argv{"dqcap"};
        for (const auto &a : args)
            argv.push_back(a.c_str());
        return run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
}
