#include "hydrocomplex/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace hydrocomplex {

std::string_view method_name(Method method) {
    switch (method) {
    case Method::ClosedForm: return "closed";
    case Method::AnalyticPipeline: return "pipeline";
    case Method::Oracle: return "oracle";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "closed") return Method::ClosedForm;
    if (name == "pipeline") return Method::AnalyticPipeline;
    if (name == "oracle") return Method::Oracle;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string_view space_name(Space space) { return space == Space::Position ? "position" : "momentum"; }

void assemble_complexities(ComplexityReport& report) {
    auto combine = [&](MeasureResult const& diseq, MeasureResult const& shannon) {
        MeasureResult c;
        c.method = report.method;
        c.value = diseq.value*std::exp(shannon.value);
        double const rel_d = diseq.value != 0.0 ? diseq.err_est/std::abs(diseq.value) : 0.0;
        c.err_est = std::abs(c.value)*std::hypot(rel_d, shannon.err_est);
        return c;
    };
    report.complexity_pos = combine(report.disequilibrium_pos, report.shannon_pos);
    report.complexity_mom = combine(report.disequilibrium_mom, report.shannon_mom);

    auto const& a = report.complexity_pos;
    auto const& b = report.complexity_mom;
    report.product.method = report.method;
    report.product.value = a.value*b.value;
    double const rel_a = a.value != 0.0 ? a.err_est/std::abs(a.value) : 0.0;
    double const rel_b = b.value != 0.0 ? b.err_est/std::abs(b.value) : 0.0;
    report.product.err_est = std::abs(report.product.value)*std::hypot(rel_a, rel_b);
}

std::string format_number(double value, int digits) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

namespace {

    std::string csv_prefix(QuantumState const& state, double Z, Space space, Method method) {
        std::string row;
        row += std::to_string(state.dim()) + ',' + std::to_string(state.n()) + ',';
        row += '"' + state.mu_string() + '"' + ',';
        row += format_number(Z, 17) + ',';
        row += std::string(space_name(space)) + ',' + std::string(method_name(method)) + ',';
        return row;
    }

    std::string csv_quote(std::string const& text) {
        std::string out = "\"";
        for (char c : text) {
            if (c == '"') out += '"';
            out += c == '\n' ? ' ' : c;
        }
        return out + '"';
    }

} // namespace

std::string csv_row(ComplexityReport const& report, Space space) {
    bool const pos = space == Space::Position;
    auto const& d = pos ? report.disequilibrium_pos : report.disequilibrium_mom;
    auto const& s = pos ? report.shannon_pos : report.shannon_mom;
    auto const& c = pos ? report.complexity_pos : report.complexity_mom;
    std::string row = csv_prefix(report.state, report.Z, space, report.method);
    row += format_number(d.value, 17) + ',' + format_number(s.value, 17) + ',' + format_number(c.value, 17) + ',';
    row += format_number(report.product.value, 17) + ',' + format_number(c.err_est, 17) + ',';
    return row;
}

std::string csv_error_row(QuantumState const& state, double Z, Space space, Method method, std::string const& error) {
    return csv_prefix(state, Z, space, method) + ",,,,," + csv_quote(error);
}

namespace {

    nlohmann::ordered_json number(double v) {
        if (!std::isfinite(v)) return nullptr;
        return v;
    }

    nlohmann::ordered_json triplet(MeasureResult const& m) {
        nlohmann::ordered_json j;
        j["value"] = number(m.value);
        j["err_est"] = number(m.err_est);
        j["method"] = std::string(method_name(m.method));
        return j;
    }

} // namespace

std::string report_json(ComplexityReport const& report, int indent) {
    nlohmann::ordered_json j;
    j["D"] = report.state.dim();
    j["n"] = report.state.n();
    j["mu"] = report.state.mu();
    j["Z"] = report.Z;
    j["method"] = std::string(method_name(report.method));

    nlohmann::ordered_json pos;
    pos["disequilibrium"] = triplet(report.disequilibrium_pos);
    pos["shannon"] = triplet(report.shannon_pos);
    pos["complexity"] = triplet(report.complexity_pos);
    if (report.normalization_pos) pos["normalization"] = number(*report.normalization_pos);
    j["position"] = pos;

    nlohmann::ordered_json mom;
    mom["disequilibrium"] = triplet(report.disequilibrium_mom);
    mom["shannon"] = triplet(report.shannon_mom);
    mom["complexity"] = triplet(report.complexity_mom);
    if (report.normalization_mom) mom["normalization"] = number(*report.normalization_mom);
    j["momentum"] = mom;

    j["product"] = triplet(report.product);
    return j.dump(indent);
}

} // namespace hydrocomplex
