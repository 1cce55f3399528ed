#include "hydrocomplex/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "hydrocomplex/closedform.hpp"
#include "hydrocomplex/parallel.hpp"
#include "hydrocomplex/quadrature.hpp"

namespace hydrocomplex::validation {

namespace {

    constexpr double inf = std::numeric_limits<double>::infinity();

    struct Outcome {
        double residual = 0.0;
        std::string label;
    };

    using CaseFn = std::function<Outcome()>;

    // Cases are independent; results land in their own slot so the worst case
    // reported does not depend on scheduling.
    std::vector<Outcome> run_cases(std::vector<CaseFn> const& cases, unsigned threads) {
        std::vector<Outcome> out(cases.size());
        parallel_for(cases.size(), threads, [&](std::size_t i) {
            try {
                out[i] = cases[i]();
            } catch (std::exception const& e) {
                out[i] = {inf, e.what()};
            }
            if (std::isnan(out[i].residual)) out[i].residual = inf;
        });
        return out;
    }

    CheckResult summarize(std::string name, std::string description, double tolerance,
                          std::vector<Outcome> const& outcomes) {
        CheckResult check;
        check.name = std::move(name);
        check.description = std::move(description);
        check.tolerance = tolerance;
        check.cases = outcomes.size();
        std::size_t worst = 0;
        for (std::size_t i = 0; i < outcomes.size(); ++i)
            if (outcomes[i].residual > outcomes[worst].residual) worst = i;
        if (!outcomes.empty()) {
            check.max_residual = outcomes[worst].residual;
            check.worst_case = outcomes[worst].label;
        }
        check.passed = !outcomes.empty() && check.max_residual <= tolerance;
        return check;
    }

    std::string state_label(QuantumState const& s) {
        return "D=" + std::to_string(s.dim()) + " n=" + std::to_string(s.n()) + " mu=" + s.mu_string();
    }

    std::string number(double v) { return format_number(v, 12); }

    measures::PipelineOptions pipeline_options(ValidationConfig const& c) { return {c.rel_tol, c.k1_exponent}; }
    measures::OracleOptions oracle_options(ValidationConfig const& c) { return {c.rel_tol}; }

    struct Measure {
        char const* name;
        MeasureResult ComplexityReport::*member;
        bool entropy;
    };

    constexpr Measure six_measures[] = {
        {"disequilibrium_pos", &ComplexityReport::disequilibrium_pos, false},
        {"shannon_pos", &ComplexityReport::shannon_pos, true},
        {"complexity_pos", &ComplexityReport::complexity_pos, false},
        {"disequilibrium_mom", &ComplexityReport::disequilibrium_mom, false},
        {"shannon_mom", &ComplexityReport::shannon_mom, true},
        {"complexity_mom", &ComplexityReport::complexity_mom, false},
    };

    // worst disagreement between the first report and each of the others
    Outcome disagreement(std::vector<ComplexityReport> const& reports) {
        Outcome worst;
        for (std::size_t i = 1; i < reports.size(); ++i) {
            std::string measure;
            double const r = report_residual(reports[0], reports[i], &measure);
            if (std::isnan(r) || r > worst.residual || worst.label.empty()) {
                auto const* m = std::find_if(std::begin(six_measures), std::end(six_measures),
                                             [&](Measure const& x) { return measure == x.name; });
                worst.residual = std::isnan(r) ? inf : r;
                worst.label = "route disagreement at " + state_label(reports[0].state) + ": " + measure + " " +
                              std::string(method_name(reports[0].method)) + "=" +
                              number((reports[0].*(m->member)).value) + " vs " +
                              std::string(method_name(reports[i].method)) + "=" +
                              number((reports[i].*(m->member)).value);
            }
        }
        return worst;
    }

    std::vector<ComplexityReport> all_routes(QuantumState const& s, double Z, ValidationConfig const& c) {
        std::vector<ComplexityReport> reports;
        if (closedform::has_closed_form(s)) reports.push_back(closedform::closed_report(s, Z));
        reports.push_back(measures::analytic_report(s, Z, pipeline_options(c)));
        reports.push_back(measures::oracle_measures(s, Z, oracle_options(c)));
        return reports;
    }

    std::vector<QuantumState> tower_matrix(ValidationConfig const& c) {
        std::vector<QuantumState> states;
        for (int D : c.dims)
            for (int n = 1; n <= c.n_max; ++n) {
                auto towers = enumerate_states(D, n);
                states.insert(states.end(), towers.begin(), towers.end());
            }
        return states;
    }

} // namespace

double relative_residual(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) return inf;
    double const scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b)/scale;
}

double entropy_residual(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) return inf;
    return std::abs(a - b)/std::max({1.0, std::abs(a), std::abs(b)});
}

double report_residual(ComplexityReport const& a, ComplexityReport const& b, std::string* worst_measure) {
    double worst = -1.0;
    for (auto const& m : six_measures) {
        double const va = (a.*(m.member)).value, vb = (b.*(m.member)).value;
        double const r = m.entropy ? entropy_residual(va, vb) : relative_residual(va, vb);
        if (r > worst) {
            worst = r;
            if (worst_measure) *worst_measure = m.name;
        }
    }
    return worst;
}

CheckResult ground_closed_form(int max_dim) {
    std::vector<Outcome> outcomes;
    for (int D = 2; D <= max_dim; ++D) {
        double const expected = std::pow(std::numbers::e/2.0, D);
        double const got = closedform::ground_report(D).complexity_pos.value;
        double const ulps = std::abs(got - expected)/(expected*std::numeric_limits<double>::epsilon());
        outcomes.push_back({ulps, "D=" + std::to_string(D) + ": " + number(got) + " vs (e/2)^D=" + number(expected)});
    }
    return summarize("ground_closed_form", "closed-form C[rho] of the ground state equals (e/2)^D, in units of eps",
                     4.0, outcomes);
}

CheckResult ground_route_agreement(ValidationConfig const& config, int max_dim) {
    std::vector<CaseFn> cases;
    for (int D = 2; D <= max_dim; ++D)
        cases.push_back([D, &config] { return disagreement(all_routes(QuantumState::ground(D), 1.0, config)); });
    return summarize("ground_route_agreement", "ground states: closed form, pipeline and oracle agree on all six measures",
                     1e-6, run_cases(cases, config.threads));
}

CheckResult ground_momentum_printed(ValidationConfig const& config) {
    struct Anchor {
        int D;
        double value;
    };
    static constexpr Anchor anchors[] = {{2, 1.7926}, {3, 2.3545}, {4, 3.0799}};
    std::vector<CaseFn> cases;
    for (auto const& a : anchors)
        cases.push_back([a, &config] {
            Outcome worst;
            for (auto const& r : all_routes(QuantumState::ground(a.D), 1.0, config)) {
                double const diff = std::abs(r.complexity_mom.value - a.value);
                if (!(diff <= worst.residual) || worst.label.empty())
                    worst = {std::isnan(diff) ? inf : diff, "D=" + std::to_string(a.D) + " " +
                                                                std::string(method_name(r.method)) + ": " +
                                                                number(r.complexity_mom.value) + " vs " +
                                                                format_number(a.value, 5)};
            }
            return worst;
        });
    return summarize("ground_momentum_printed",
                     "ground-state C[gamma] for D = 2, 3, 4 within one unit of the fourth printed decimal",
                     1e-4, run_cases(cases, config.threads));
}

CheckResult z_invariance(ValidationConfig const& config, int max_circular_n) {
    std::vector<QuantumState> states;
    for (int D : config.dims)
        for (int n = 1; n <= max_circular_n; ++n) states.push_back(QuantumState::circular(D, n));

    std::vector<CaseFn> cases;
    for (auto const& s : states)
        for (Method method : {Method::AnalyticPipeline, Method::Oracle})
            cases.push_back([s, method, &config] {
                auto compute = [&](double Z) {
                    return method == Method::Oracle ? measures::oracle_measures(s, Z, oracle_options(config))
                                                    : measures::analytic_report(s, Z, pipeline_options(config));
                };
                auto const base = compute(1.0);
                Outcome worst;
                for (double Z : config.z_list) {
                    auto const r = compute(Z);
                    double const rp = relative_residual(r.complexity_pos.value, base.complexity_pos.value);
                    double const rm = relative_residual(r.complexity_mom.value, base.complexity_mom.value);
                    double const w = std::max(rp, rm);
                    if (w > worst.residual || worst.label.empty())
                        worst = {w, state_label(s) + " " + std::string(method_name(method)) + " Z=" + number(Z) +
                                        (rp >= rm ? " C[rho]" : " C[gamma]")};
                }
                return worst;
            });
    return summarize("z_invariance", "C[rho] and C[gamma] at every Z match Z = 1 (ground and circular states)", 1e-9,
                     run_cases(cases, config.threads));
}

CheckResult circular_reduction(int max_dim) {
    std::vector<Outcome> outcomes;
    for (int D = 2; D <= max_dim; ++D) {
        auto const c = closedform::circular_report(D, 1);
        auto const g = closedform::ground_report(D);
        std::string measure;
        double const r = report_residual(c, g, &measure);
        outcomes.push_back({r, "D=" + std::to_string(D) + " " + measure});
    }
    return summarize("circular_reduction", "circular closed forms at n = 1 reduce to the ground-state ones", 1e-12,
                     outcomes);
}

CheckResult normalization(ValidationConfig const& config) {
    std::vector<CaseFn> cases;
    for (auto const& s : tower_matrix(config))
        cases.push_back([s, &config] {
            auto const r = measures::oracle_measures(s, 1.0, oracle_options(config));
            double const dp = std::abs(r.normalization_pos.value_or(inf) - 1.0);
            double const dm = std::abs(r.normalization_mom.value_or(inf) - 1.0);
            return Outcome{std::max(dp, dm), state_label(s) + (dp >= dm ? " position" : " momentum")};
        });
    return summarize("normalization", "integrals of rho and gamma equal one", 1e-9, run_cases(cases, config.threads));
}

CheckResult route_agreement(ValidationConfig const& config) {
    std::vector<CaseFn> cases;
    for (auto const& s : tower_matrix(config))
        cases.push_back([s, &config] { return disagreement(all_routes(s, 1.0, config)); });
    return summarize("route_agreement", "analytic pipeline matches the quadrature oracle on every tower", 1e-6,
                     run_cases(cases, config.threads));
}

CheckResult circular_route_agreement(ValidationConfig const& config) {
    std::vector<CaseFn> cases;
    for (int D = 2; D <= 6; ++D)
        for (int n = 1; n <= 5; ++n)
            cases.push_back([D, n, &config] { return disagreement(all_routes(QuantumState::circular(D, n), 1.0, config)); });
    return summarize("circular_route_agreement", "circular states: closed form, pipeline and oracle agree", 1e-6,
                     run_cases(cases, config.threads));
}

CheckResult hydrogen_anchors(ValidationConfig const& config) {
    auto const r = measures::oracle_measures(QuantumState::ground(3), 1.0, oracle_options(config));
    double const pi = std::numbers::pi;
    struct Anchor {
        char const* name;
        double got, expected;
    };
    Anchor const anchors[] = {
        {"S[rho]", r.shannon_pos.value, 3.0 + std::log(pi)},
        {"<rho>", r.disequilibrium_pos.value, 1.0/(8.0*pi)},
        {"S[gamma]", r.shannon_mom.value, 2.4218623411651936}, // 30-digit mpmath quadrature
        {"<gamma>", r.disequilibrium_mom.value, 33.0/(16.0*pi*pi)},
    };
    std::vector<Outcome> outcomes;
    for (auto const& a : anchors)
        outcomes.push_back({std::isfinite(a.got) ? std::abs(a.got - a.expected) : inf,
                            std::string(a.name) + ": " + number(a.got) + " vs " + number(a.expected)});
    return summarize("hydrogen_anchors", "D = 3 ground-state entropies and disequilibria by the oracle", 1e-7,
                     outcomes);
}

CheckResult polynomial_infrastructure() {
    using specfun::PolyFamily;
    using quadrature::WeightFunction;
    std::vector<Outcome> outcomes;

    // orthonormality through a 32-point rule, whose exactness is checked below
    auto gram = [&](PolyFamily family, double param) {
        auto const weight = family == PolyFamily::LaguerreOrthonormal ? WeightFunction::gen_laguerre(param)
                                                                       : WeightFunction::gegenbauer(param);
        auto const rule = quadrature::gauss_rule(weight, 32);
        constexpr int max_degree = 20;
        std::vector<std::vector<double>> values(max_degree + 1, std::vector<double>(rule.order()));
        for (int k = 0; k <= max_degree; ++k)
            for (int i = 0; i < rule.order(); ++i) values[k][i] = specfun::poly_eval({family, k, param}, rule.nodes[i]);
        double worst = 0.0;
        for (int a = 0; a <= max_degree; ++a)
            for (int b = 0; b <= a; ++b) {
                double s = 0.0;
                for (int i = 0; i < rule.order(); ++i) s += rule.weights[i]*values[a][i]*values[b][i];
                worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
            }
        return worst;
    };

    // Σ w_i x_i^j against the exact moment, in log form to reach degree 127
    auto exactness = [&](PolyFamily family, double param, int n) {
        bool const laguerre = family == PolyFamily::LaguerreOrthonormal;
        auto const rule = quadrature::gauss_rule(
            laguerre ? WeightFunction::gen_laguerre(param) : WeightFunction::gegenbauer(param), n);
        double worst = 0.0;
        for (int j = 0; j <= 2*n - 1; ++j) {
            if (laguerre) {
                double const ln_moment = std::lgamma(param + j + 1.0);
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += std::exp(std::log(rule.weights[i]) + j*std::log(rule.nodes[i]) - ln_moment);
                worst = std::max(worst, std::abs(s - 1.0));
            } else if (j % 2 == 1) {
                double s = 0.0, scale = 0.0;
                for (int i = 0; i < n; ++i) {
                    double const t = rule.weights[i]*std::pow(rule.nodes[i], j);
                    s += t;
                    scale += std::abs(t);
                }
                worst = std::max(worst, std::abs(s)/scale);
            } else {
                double const ln_moment =
                    std::lgamma(0.5*(j + 1)) + std::lgamma(param + 0.5) - std::lgamma(0.5*j + param + 1.0);
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += rule.weights[i]*std::pow(rule.nodes[i], j);
                worst = std::max(worst, std::abs(s*std::exp(-ln_moment) - 1.0));
            }
        }
        return worst;
    };

    std::vector<double> const laguerre_params{0.0, 0.5, 1.0, 2.5, 4.0, 7.5};
    std::vector<double> const gegenbauer_params{0.5, 1.0, 1.5, 2.0, 2.5, 4.5};

    double ortho = 0.0, exact = 0.0, anchors = 0.0;
    std::string ortho_where, exact_where, anchor_where;
    auto track = [](double value, double& worst, std::string& where, std::string label) {
        if (!(value <= worst)) {
            worst = std::isnan(value) ? inf : value;
            where = std::move(label);
        }
    };
    for (double a : laguerre_params) {
        track(gram(PolyFamily::LaguerreOrthonormal, a), ortho, ortho_where, "Laguerre alpha=" + number(a));
        for (int n : {4, 16, 64})
            track(exactness(PolyFamily::LaguerreOrthonormal, a, n), exact, exact_where,
                  "Laguerre alpha=" + number(a) + " n=" + std::to_string(n));
        double const e1 = measures::E1_laguerre_quadrature(0, a).value;
        track(std::abs(e1 - (a + 1.0)*std::lgamma(a + 1.0)), anchors, anchor_where, "E1 alpha=" + number(a));
    }
    for (double l : gegenbauer_params) {
        track(gram(PolyFamily::GegenbauerOrthonormal, l), ortho, ortho_where, "Gegenbauer lambda=" + number(l));
        for (int n : {4, 16, 64})
            track(exactness(PolyFamily::GegenbauerOrthonormal, l, n), exact, exact_where,
                  "Gegenbauer lambda=" + number(l) + " n=" + std::to_string(n));
        double const e2 = measures::E2_gegenbauer_quadrature(0, l).value;
        double const expected = 0.5*std::log(std::numbers::pi) + std::lgamma(l + 0.5) - std::lgamma(l + 1.0);
        track(std::abs(e2 - expected), anchors, anchor_where, "E2 lambda=" + number(l));
    }

    // Each part has its own tolerance; the residual is reported as the worst
    // ratio to tolerance.
    outcomes.push_back({ortho/1e-11, "orthonormality " + ortho_where + ": " + number(ortho)});
    outcomes.push_back({exact/1e-12, "Gauss exactness " + exact_where + ": " + number(exact)});
    outcomes.push_back({anchors/1e-10, "degree-0 entropic anchor " + anchor_where + ": " + number(anchors)});
    return summarize("polynomial_infrastructure",
                     "orthonormality (1e-11), Gauss exactness (1e-12), E1/E2 degree-0 anchors (1e-10); residual is "
                     "the worst ratio to tolerance",
                     1.0, outcomes);
}

bool ValidationSummary::all_passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.passed; });
}

std::string ValidationSummary::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["passed"] = all_passed();
    nlohmann::ordered_json cfg;
    cfg["dims"] = config.dims;
    cfg["n_max"] = config.n_max;
    cfg["z_list"] = config.z_list;
    cfg["rel_tol"] = config.rel_tol;
    cfg["k1_exponent"] = config.k1_exponent == measures::K1Exponent::Corrected ? "corrected" : "printed";
    j["config"] = cfg;
    auto& list = j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["tolerance"] = c.tolerance;
        e["max_residual"] = std::isfinite(c.max_residual) ? nlohmann::ordered_json(c.max_residual) : nullptr;
        e["cases"] = c.cases;
        e["worst_case"] = c.worst_case;
        e["description"] = c.description;
        list.push_back(std::move(e));
    }
    return j.dump(indent);
}

ValidationSummary run_validation(ValidationConfig const& config) {
    if (config.dims.empty()) throw std::invalid_argument("validation needs at least one dimension");
    for (int D : config.dims)
        if (D < 2) throw std::invalid_argument("dimension must satisfy D >= 2, got " + std::to_string(D));
    if (config.n_max < 1) throw std::invalid_argument("validation needs n_max >= 1");
    if (config.z_list.empty()) throw std::invalid_argument("validation needs at least one Z");
    for (double Z : config.z_list)
        if (!(Z > 0.0) || !std::isfinite(Z)) throw std::invalid_argument("every Z must be positive and finite");

    ValidationSummary summary;
    summary.config = config;
    summary.checks.push_back(ground_closed_form());
    summary.checks.push_back(ground_route_agreement(config));
    summary.checks.push_back(ground_momentum_printed(config));
    summary.checks.push_back(z_invariance(config));
    summary.checks.push_back(circular_reduction());
    summary.checks.push_back(normalization(config));
    summary.checks.push_back(route_agreement(config));
    summary.checks.push_back(circular_route_agreement(config));
    summary.checks.push_back(hydrogen_anchors(config));
    summary.checks.push_back(polynomial_infrastructure());
    return summary;
}

} // namespace hydrocomplex::validation
