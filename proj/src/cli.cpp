#include "hydrocomplex/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hydrocomplex/closedform.hpp"
#include "hydrocomplex/compute.hpp"
#include "hydrocomplex/measures.hpp"
#include "hydrocomplex/parallel.hpp"
#include "hydrocomplex/quadrature.hpp"
#include "hydrocomplex/validation.hpp"

namespace hydrocomplex::cli {

namespace {

    struct UsageError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };

    std::string trim(std::string s) {
        auto const first = s.find_first_not_of(" \t");
        auto const last = s.find_last_not_of(" \t");
        return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
    }

    int to_int(std::string const& text) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(text, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (used == 0 || used != text.size()) throw std::invalid_argument("'" + text + "' is not an integer");
        return value;
    }

    double to_double(std::string const& text) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(text, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (used == 0 || used != text.size()) throw std::invalid_argument("'" + text + "' is not a number");
        return value;
    }

    // ------------------------------------------------------------------
    // Shared option values

    struct RunConfig {
        int dim = 0;
        std::string dims = "";
        std::optional<int> n;
        std::string n_range = "1";
        std::string mu;
        std::string state;
        double Z = 1.0;
        std::string space = "both";
        std::string method = "pipeline";
        double rel_tol = measures::default_rel_tol;
        std::string format = "table";
        std::string output;
        std::string plot_script;
        unsigned threads = 0;

        // validate
        std::string z_list = "1,2,5,10";
        int n_max = 3;
        std::string k1_exponent = "corrected";
    };

    std::vector<Space> spaces_of(std::string const& name) {
        if (name == "position") return {Space::Position};
        if (name == "momentum") return {Space::Momentum};
        return {Space::Position, Space::Momentum};
    }

    std::vector<Method> methods_for(std::string const& name, QuantumState const& state) {
        if (name != "all") return {parse_method(name)};
        std::vector<Method> methods;
        if (closedform::has_closed_form(state)) methods.push_back(Method::ClosedForm);
        methods.push_back(Method::AnalyticPipeline);
        methods.push_back(Method::Oracle);
        return methods;
    }

    bool all_finite(ComplexityReport const& r) {
        for (auto const* m : {&r.disequilibrium_pos, &r.shannon_pos, &r.complexity_pos, &r.disequilibrium_mom,
                              &r.shannon_mom, &r.complexity_mom})
            if (!std::isfinite(m->value)) return false;
        return true;
    }

    QuantumState resolve_state(RunConfig const& c) {
        if (c.state == "ground") {
            if (c.n && *c.n != 1) throw UsageError("the ground state has n = 1, got --n " + std::to_string(*c.n));
            return QuantumState::ground(c.dim);
        }
        if (!c.n) throw UsageError("--n is required unless --state ground");
        if (c.state == "circular") return QuantumState::circular(c.dim, *c.n);
        if (c.mu.empty()) throw UsageError("give the tower with --mu or use --state ground|circular");
        return QuantumState(c.dim, *c.n, parse_mu_tower(c.mu));
    }

    // ------------------------------------------------------------------
    // Rendering

    struct Row {
        QuantumState state;
        Method method;
        std::variant<ComplexityReport, std::string> result; // report or error message
    };

    nlohmann::ordered_json row_json(Row const& row, double Z) {
        if (auto const* report = std::get_if<ComplexityReport>(&row.result))
            return nlohmann::ordered_json::parse(report_json(*report, -1));
        nlohmann::ordered_json j;
        j["D"] = row.state.dim();
        j["n"] = row.state.n();
        j["mu"] = row.state.mu();
        j["Z"] = Z;
        j["method"] = std::string(method_name(row.method));
        j["error"] = std::get<std::string>(row.result);
        return j;
    }

    void render_json(std::vector<Row> const& rows, double Z, std::ostream& out) {
        auto array = nlohmann::ordered_json::array();
        for (auto const& row : rows) array.push_back(row_json(row, Z));
        out << array.dump(2) << '\n';
    }

    void render_csv(std::vector<Row> const& rows, double Z, std::vector<Space> const& spaces, std::ostream& out) {
        out << csv_header << '\n';
        for (auto const& row : rows)
            for (Space space : spaces) {
                if (auto const* report = std::get_if<ComplexityReport>(&row.result))
                    out << csv_row(*report, space) << '\n';
                else
                    out << csv_error_row(row.state, Z, space, row.method, std::get<std::string>(row.result)) << '\n';
            }
    }

    void render_table(std::vector<Row> const& rows, std::vector<Space> const& spaces, std::ostream& out) {
        constexpr int digits = 9;
        auto cell = [](std::string const& s, int width) {
            std::ostringstream os;
            os << std::left << std::setw(width) << s;
            return os.str();
        };
        out << cell("D", 4) << cell("n", 4) << cell("mu", 14) << cell("method", 10) << cell("space", 10)
            << cell("disequilibrium", 18) << cell("shannon", 18) << cell("complexity", 18) << cell("err_est", 12)
            << "product\n";
        for (auto const& row : rows) {
            std::string const head = cell(std::to_string(row.state.dim()), 4) + cell(std::to_string(row.state.n()), 4) +
                                     cell(row.state.mu_string(), 14) + cell(std::string(method_name(row.method)), 10);
            auto const* report = std::get_if<ComplexityReport>(&row.result);
            if (!report) {
                out << head << "error: " << std::get<std::string>(row.result) << '\n';
                continue;
            }
            for (Space space : spaces) {
                bool const pos = space == Space::Position;
                auto const& d = pos ? report->disequilibrium_pos : report->disequilibrium_mom;
                auto const& s = pos ? report->shannon_pos : report->shannon_mom;
                auto const& c = pos ? report->complexity_pos : report->complexity_mom;
                out << head << cell(std::string(space_name(space)), 10) << cell(format_number(d.value, digits), 18)
                    << cell(format_number(s.value, digits), 18) << cell(format_number(c.value, digits), 18)
                    << cell(format_number(c.err_est, 3), 12) << format_number(report->product.value, digits) << '\n';
            }
        }
    }

    void render(std::vector<Row> const& rows, RunConfig const& c, std::ostream& out) {
        if (c.format == "json")
            render_json(rows, c.Z, out);
        else if (c.format == "csv")
            render_csv(rows, c.Z, spaces_of(c.space), out);
        else
            render_table(rows, spaces_of(c.space), out);
    }

    // ------------------------------------------------------------------
    // Commands

    int cmd_compute(RunConfig const& c, std::ostream& out, std::ostream& err) {
        auto const state = resolve_state(c);
        std::vector<Row> rows;
        for (Method method : methods_for(c.method, state)) {
            if (method == Method::ClosedForm && !closedform::has_closed_form(state))
                throw UsageError("no closed form for D=" + std::to_string(state.dim()) + " n=" +
                                 std::to_string(state.n()) + " mu=" + state.mu_string() +
                                 "; closed forms exist for ground and circular states only");
            rows.push_back({state, method, compute_report(state, c.Z, method, c.rel_tol)});
        }
        render(rows, c, out);
        for (auto const& row : rows)
            if (!all_finite(std::get<ComplexityReport>(row.result))) {
                err << "error: non-finite measure from the " << method_name(row.method) << " route\n";
                return exit_numerical;
            }
        return exit_ok;
    }

    std::vector<QuantumState> sweep_states(RunConfig const& c) {
        auto const dims = parse_int_range(c.dims);
        auto const ns = parse_int_range(c.n_range);
        for (int D : dims)
            if (D < 2) throw UsageError("dimension must satisfy D >= 2, got " + std::to_string(D));
        for (int n : ns)
            if (n < 1) throw UsageError("principal quantum number must satisfy n >= 1, got " + std::to_string(n));

        std::vector<QuantumState> states;
        for (int D : dims) {
            if (c.state == "ground") {
                if (ns != std::vector<int>{1}) throw UsageError("--n does not apply to --state ground");
                states.push_back(QuantumState::ground(D));
                continue;
            }
            for (int n : ns) {
                if (c.state == "circular") {
                    states.push_back(QuantumState::circular(D, n));
                } else {
                    auto towers = enumerate_states(D, n);
                    states.insert(states.end(), towers.begin(), towers.end());
                }
            }
        }
        return states;
    }

    int cmd_sweep(RunConfig const& c, std::ostream& out, std::ostream& err) {
        if (!c.plot_script.empty() && (c.output.empty() || c.format != "csv"))
            throw UsageError("--plot-script needs --output with --format csv");

        std::vector<Row> rows;
        for (auto const& state : sweep_states(c)) {
            if (c.method == "all") {
                for (Method m : methods_for("all", state)) rows.push_back({state, m, std::string{}});
            } else {
                rows.push_back({state, parse_method(c.method), std::string{}});
            }
        }

        parallel_for(rows.size(), c.threads, [&](std::size_t i) {
            auto& row = rows[i];
            try {
                auto report = compute_report(row.state, c.Z, row.method, c.rel_tol);
                if (all_finite(report))
                    row.result = std::move(report);
                else
                    row.result = std::string("non-finite measure");
            } catch (std::exception const& e) {
                row.result = std::string(e.what());
            }
        });

        if (c.output.empty()) {
            render(rows, c, out);
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!file) throw UsageError("cannot open '" + c.output + "' for writing");
            render(rows, c, file);
        }
        if (!c.plot_script.empty()) {
            std::ofstream script(c.plot_script, std::ios::binary);
            if (!script) throw UsageError("cannot open '" + c.plot_script + "' for writing");
            script << plot_script(c.output);
        }

        auto const failures = std::count_if(rows.begin(), rows.end(), [](Row const& r) {
            return std::holds_alternative<std::string>(r.result);
        });
        if (failures > 0) {
            err << "error: " << failures << " of " << rows.size() << " rows failed; see the error column\n";
            return exit_numerical;
        }
        return exit_ok;
    }

    int cmd_validate(RunConfig const& c, std::ostream& out, std::ostream& err) {
        validation::ValidationConfig config;
        config.dims = parse_int_range(c.dims.empty() ? "2..5" : c.dims);
        config.n_max = c.n_max;
        config.z_list = parse_double_list(c.z_list);
        config.rel_tol = c.rel_tol;
        config.k1_exponent =
            c.k1_exponent == "printed" ? measures::K1Exponent::AsPrinted : measures::K1Exponent::Corrected;
        config.threads = c.threads;

        auto const summary = validation::run_validation(config);
        std::string const json = summary.to_json(2);
        if (c.output.empty()) {
            out << json << '\n';
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!file) throw UsageError("cannot open '" + c.output + "' for writing");
            file << json << '\n';
        }
        for (auto const& check : summary.checks)
            if (!check.passed)
                err << "FAIL " << check.name << " (residual " << format_number(check.max_residual, 3) << " > "
                    << format_number(check.tolerance, 3) << "): " << check.worst_case << '\n';
        return summary.all_passed() ? exit_ok : exit_numerical;
    }

    double default_rel_tol() {
        char const* env = std::getenv(rel_tol_env);
        if (!env || !*env) return measures::default_rel_tol;
        try {
            return to_double(trim(env));
        } catch (std::invalid_argument const&) {
            throw UsageError(std::string(rel_tol_env) + " must be a number, got '" + env + "'");
        }
    }

} // namespace

std::vector<int> parse_int_range(std::string const& raw) {
    std::string const text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty range");
    std::vector<int> values;
    if (auto const dots = text.find(".."); dots != std::string::npos) {
        int const lo = to_int(trim(text.substr(0, dots)));
        int const hi = to_int(trim(text.substr(dots + 2)));
        if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
        for (int v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) values.push_back(to_int(trim(item)));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<double> parse_double_list(std::string const& raw) {
    std::vector<double> values;
    std::stringstream ss(raw);
    for (std::string item; std::getline(ss, item, ',');) values.push_back(to_double(trim(item)));
    if (values.empty()) throw std::invalid_argument("empty list");
    return values;
}

std::string plot_script(std::string const& csv_path) {
    nlohmann::json const path = csv_path; // JSON string literals are valid Python literals
    std::string script = R"(#!/usr/bin/env python3
"""Shape complexity against D and against n, from a hydrocomplex sweep CSV.

usage: python3 this_script.py [output.png]
"""
import csv
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

CSV_PATH = @PATH@

rows = []
with open(CSV_PATH, newline="") as fh:
    for row in csv.DictReader(fh):
        if not row["error"]:
            rows.append(row)

by_dim = defaultdict(list)
by_n = defaultdict(list)
for row in rows:
    D, n, C = int(row["D"]), int(row["n"]), float(row["complexity"])
    tag = (row["space"], row["method"])
    by_dim[tag + (n,)].append((D, C))
    by_n[tag + (D,)].append((n, C))

fig, (ax_d, ax_n) = plt.subplots(1, 2, figsize=(11, 4.5))
for key in sorted(by_dim):
    pts = sorted(by_dim[key])
    if len(pts) > 1:
        space, method, n = key
        ax_d.plot(*zip(*pts), marker="o", label=f"{space} {method} n={n}")
for key in sorted(by_n):
    pts = sorted(by_n[key])
    if len(pts) > 1:
        space, method, D = key
        ax_n.plot(*zip(*pts), marker="o", label=f"{space} {method} D={D}")
ax_d.set_xlabel("D")
ax_n.set_xlabel("n")
for ax in (ax_d, ax_n):
    ax.set_ylabel("shape complexity C")
    ax.set_yscale("log")
    if ax.lines:
        ax.legend(fontsize="small")
fig.tight_layout()
target = sys.argv[1] if len(sys.argv) > 1 else CSV_PATH.rsplit(".", 1)[0] + ".png"
fig.savefig(target, dpi=150)
print(target)
)";
    script.replace(script.find("@PATH@"), 6, path.dump());
    return script;
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c.rel_tol = default_rel_tol();
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App app{"Shape complexity of D-dimensional hydrogenic states", "hydrocomplex"};
    app.require_subcommand(1);

    std::vector<std::string> const formats{"table", "csv", "json"};
    std::vector<std::string> const methods{"closed", "pipeline", "oracle", "all"};
    std::vector<std::string> const spaces{"position", "momentum", "both"};

    auto common = [&](CLI::App* sub, bool with_charge) {
        if (with_charge) sub->add_option("--z", c.Z, "nuclear charge")->check(CLI::PositiveNumber);
        sub->add_option("--rel-tol", c.rel_tol,
                        std::string("relative tolerance of the adaptive quadratures (default from ") + rel_tol_env +
                            " or 1e-10)")
            ->check(CLI::Range(1e-13, 1e-2));
        sub->add_option("--threads", c.threads, "worker threads, 0 for one per core");
    };

    auto* compute = app.add_subcommand("compute", "all six measures for one state");
    compute->add_option("--dim", c.dim, "dimension D")->required();
    compute->add_option("--n", c.n, "principal quantum number");
    auto* mu_opt = compute->add_option("--mu", c.mu, "tower l,mu_2,...,m with D-1 entries");
    compute->add_option("--state", c.state, "ground or circular")
        ->check(CLI::IsMember({"ground", "circular"}))
        ->excludes(mu_opt);
    compute->add_option("--space", c.space)->check(CLI::IsMember(spaces));
    compute->add_option("--method", c.method)->check(CLI::IsMember(methods));
    compute->add_option("--format", c.format)->check(CLI::IsMember(formats));
    common(compute, true);

    auto* sweep = app.add_subcommand("sweep", "one row per state over ranges of D and n");
    sweep->add_option("--dim", c.dims, "range such as 2..6 or 2,3,5")->required();
    sweep->add_option("--n", c.n_range, "range of n");
    sweep->add_option("--state", c.state, "ground, circular or all towers")
        ->required()
        ->check(CLI::IsMember({"ground", "circular", "all"}));
    sweep->add_option("--space", c.space)->check(CLI::IsMember(spaces));
    sweep->add_option("--method", c.method)->check(CLI::IsMember(methods));
    sweep->add_option("--format", c.format)->check(CLI::IsMember(formats));
    sweep->add_option("--output", c.output, "write the series here instead of stdout");
    sweep->add_option("--plot-script", c.plot_script, "write a matplotlib script for the CSV");
    common(sweep, true);

    auto* validate = app.add_subcommand("validate", "acceptance checks; JSON summary on stdout");
    validate->add_option("--dims", c.dims, "dimensions of the tower matrix (default 2..5)");
    validate->add_option("--n-max", c.n_max, "largest n of the tower matrix")->check(CLI::PositiveNumber);
    validate->add_option("--z-list", c.z_list, "charges for the Z-invariance check");
    validate->add_option("--k1-exponent", c.k1_exponent, "corrected, or printed for the negative control")
        ->check(CLI::IsMember({"corrected", "printed"}));
    validate->add_option("--output", c.output, "write the summary here instead of stdout");
    common(validate, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (sweep->parsed() && !sweep->count("--format")) c.format = "csv";

    try {
        if (compute->parsed()) return cmd_compute(c, out, err);
        if (sweep->parsed()) return cmd_sweep(c, out, err);
        return cmd_validate(c, out, err);
    } catch (quadrature::ConvergenceError const& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (std::domain_error const& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    }
}

} // namespace hydrocomplex::cli
