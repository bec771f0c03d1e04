// Copyright 2026 The Stellar Authors
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

#include "stellar/commands.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "stellar/entanglement.h"
#include "stellar/majorana.h"

namespace stellar {

namespace {

constexpr double kRoundTripTolerance = 1e-9;
constexpr double kConcurrenceTolerance = 1e-9;
constexpr double kClosedFormTolerance = 1e-10;
constexpr double kUpperBoundSlack = 1e-10;
constexpr double kSingleQubitTolerance = 1e-8;
constexpr double kChartTolerance = 1e-10;
constexpr double kRatioLow = 3.0;
constexpr double kRatioHigh = 5.0;

json check(const std::string &name, bool pass, double residual) {
    return json{{"name", name}, {"pass", pass}, {"residual", residual}};
}

json stars_array(const StarSet &stars, const MajoranaPolynomial *poly) {
    const auto mult = star_multiplicities(stars, kDefaultSeparabilityTol);
    json out = json::array();
    for (int i = 0; i < stars.size(); ++i) {
        json s = star_json(stars[i]);
        s["multiplicity"] = mult[static_cast<std::size_t>(i)];
        if (poly) s["residual"] = poly->relative_residual(stars[i]);
        out.push_back(std::move(s));
    }
    return out;
}

json bloch_array(const StarSet &stars) {
    json out = json::array();
    for (const auto &s : stars.stars) {
        const auto n = bloch_vector(s);
        out.push_back(json::array({n[0], n[1], n[2]}));
    }
    return out;
}

json matrix_json(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool any_failed(const json &doc) {
    if (!doc.contains("checks")) return false;
    return std::any_of(doc["checks"].begin(), doc["checks"].end(), [](const json &c) { return !c["pass"].get<bool>(); });
}

CommandOutput error_output(const Error &e) {
    return {json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}, exit_code_for(e.code())};
}

CommandOutput run_per_state(std::string_view input, const std::function<json(const StateFile &)> &build) {
    try {
        const auto doc = parse_state_document(input);
        json results = json::array();
        bool failed = false;
        for (const auto &file : doc.files) {
            json r = build(file);
            failed = failed || any_failed(r);
            results.push_back(std::move(r));
        }
        CommandOutput out;
        out.document = doc.is_array ? std::move(results) : std::move(results[0]);
        out.exit_code = failed ? kExitCheckFailed : kExitOk;
        return out;
    } catch (const Error &e) {
        return error_output(e);
    }
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::RootFindingFailed: return kExitRootFinding;
        case ErrorCode::SizeLimit: return kExitSizeLimit;
        case ErrorCode::StarAtInfinity:
        case ErrorCode::StarsTooClose:
        case ErrorCode::DegenerateRotation: return kExitGeometry;
        case ErrorCode::ExpmNoConvergence: return kExitCheckFailed;
        case ErrorCode::AllZero:
        case ErrorCode::NotNormalized:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::RangeError:
        case ErrorCode::UnsupportedDimension:
        case ErrorCode::ParseError: return kExitUsage;
    }
    return kExitCheckFailed;
}

json stars_document(const StateFile &file) {
    const auto state = to_state(file);
    const MajoranaPolynomial poly(state);
    const auto stars = stars_from_state(state);

    double max_residual = 0.0;
    double max_chordal = 0.0;
    for (int i = 0; i < stars.size(); ++i) {
        max_residual = std::max(max_residual, poly.relative_residual(stars[i]));
        for (int j = i + 1; j < stars.size(); ++j) max_chordal = std::max(max_chordal, chordal_distance(stars[i], stars[j]));
    }
    const double round_trip = 1.0 - fidelity(state, state_from_stars(stars));

    json doc;
    doc["input"] = to_json(file);
    doc["stars"] = stars_array(stars, &poly);
    doc["separable"] = max_chordal <= kDefaultSeparabilityTol;
    doc["checks"] = json::array({
        check("star_residual", max_residual <= kDefaultRootTol, max_residual),
        check("round_trip_fidelity", round_trip <= kRoundTripTolerance, round_trip),
    });
    return doc;
}

json perma_document(const StateFile &file) {
    const auto state = to_state(file);
    const auto stars = stars_from_state(state);
    const auto report = perma_concurrence(stars);
    const int n = stars.size();

    json doc;
    doc["input"] = to_json(file);
    doc["stars"] = stars_array(stars, nullptr);
    doc["p_d"] = report.p_d;
    doc["permanent"] = complex_json(report.permanent);
    doc["bloch"] = bloch_array(stars);
    json checks = json::array();
    checks.push_back(check("p_d_upper_bound", report.p_d <= 1.0 + kUpperBoundSlack, std::max(0.0, report.p_d - 1.0)));

    if (n == 2) {
        const double c = concurrence_d3(state);
        doc["concurrence"] = c;
        const double identity = std::abs(c - (1.0 / report.p_d - 1.0));
        const double overlap_identity = std::abs(std::norm(overlap(stars[0], stars[1])) - (1.0 - c) / (1.0 + c));
        checks.push_back(check("concurrence_identity", identity <= kConcurrenceTolerance, identity));
        checks.push_back(check("overlap_identity", overlap_identity <= kConcurrenceTolerance, overlap_identity));
    } else {
        doc["concurrence"] = nullptr;
    }

    if (n >= 2 && n <= 4) {
        const auto forms = closed_form_p(stars);
        const double deviation =
            std::max(std::abs(forms.overlap_form - report.p_d), std::abs(forms.bloch_form - report.p_d));
        json cf{{"overlap", forms.overlap_form}, {"bloch", forms.bloch_form}, {"deviation", deviation}};
        if (forms.reduced_form) cf["reduced"] = *forms.reduced_form;
        // The four-star form is compared but not gated.
        cf["gating"] = n <= 3;
        doc["closed_forms"] = std::move(cf);
        if (n <= 3) checks.push_back(check("closed_form", deviation <= kClosedFormTolerance, deviation));
    } else {
        doc["closed_forms"] = nullptr;
    }
    doc["checks"] = std::move(checks);
    return doc;
}

json metric_document(const StateFile &file, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw Error(ErrorCode::RangeError, "--step must be positive");
    }
    const auto state = to_state(file);
    const auto stars = stars_from_state(state);
    const bool identity = !stars.any_infinite();
    const Star target = choose_chart_target(stars);
    const auto chart = rotate_chart(stars, target);

    const auto metric = metric_symmetric(chart.stars, step);
    const double min_eig = min_eigenvalue(metric);
    const auto at_step = step_halving(chart.stars, step);
    std::optional<double> ratio;
    try {
        ratio = step_halving(chart.stars, kRichardsonProbeStep).ratio;
    } catch (const Error &e) {
        // The probe step needs the stars farther apart than the user step does.
        if (e.code() != ErrorCode::StarsTooClose) throw;
    }
    const double chart_drift = std::abs(perma_value(chart.stars) - perma_value(stars));

    json doc;
    doc["input"] = to_json(file);
    doc["stars"] = stars_array(stars, nullptr);
    json unitary = matrix_json(chart.rotation.unitary);
    doc["chart"] = json{{"identity", identity}, {"target", star_json(target)}, {"unitary", unitary}};
    doc["chart_stars"] = stars_array(chart.stars, nullptr);
    doc["step"] = step;
    doc["metric"] = matrix_json(metric.entries);
    doc["hermitian_residual"] = metric.hermitian_residual;
    doc["min_eigenvalue"] = min_eig;
    doc["step_halving"] = json{{"max_change", at_step.max_change},
                               {"probe_step", kRichardsonProbeStep},
                               {"ratio", ratio ? json(*ratio) : json(nullptr)}};

    // Negative eigenvalues smaller than the observed stencil noise are not significant.
    const double psd_tol = 10.0 * at_step.max_change + 1e-12;
    json checks = json::array({
        check("hermitian", metric.hermitian_residual <= kHermitianTolerance, metric.hermitian_residual),
        check("positive_semidefinite", min_eig >= -psd_tol, std::max(0.0, -min_eig)),
        check("chart_invariance", chart_drift <= kChartTolerance, chart_drift),
    });
    if (chart.stars.size() == 1) {
        const double diff = std::abs(metric.entries(0, 0) - metric_single_qubit(chart.stars[0].z()));
        checks.push_back(check("single_qubit", diff <= kSingleQubitTolerance, diff));
    }
    if (ratio) {
        const double off = std::max(0.0, std::max(kRatioLow - *ratio, *ratio - kRatioHigh));
        checks.push_back(check("richardson_ratio", off == 0.0, *ratio));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

CommandOutput cmd_stars(std::string_view input) { return run_per_state(input, stars_document); }

CommandOutput cmd_perma(std::string_view input) { return run_per_state(input, perma_document); }

CommandOutput cmd_metric(std::string_view input, double step) {
    return run_per_state(input, [step](const StateFile &f) { return metric_document(f, step); });
}

CommandOutput cmd_random(int d, int count, std::uint64_t seed) {
    try {
        json out = json::array();
        for (const auto &f : random_states(d, count, seed)) out.push_back(to_json(f));
        return {std::move(out), kExitOk};
    } catch (const Error &e) {
        return error_output(e);
    }
}

}  // namespace stellar
