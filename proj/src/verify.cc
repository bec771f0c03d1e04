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

#include "stellar/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "stellar/commands.h"
#include "stellar/entanglement.h"
#include "stellar/geometry.h"
#include "stellar/majorana.h"
#include "stellar/oracle.h"

namespace stellar {

namespace {

constexpr double kRoundTripTol = 1e-9;
constexpr double kNaivePermanentTol = 1e-12;
constexpr double kOraclePermanentTol = 1e-9;
constexpr double kRealPermanentTol = 1e-10;
constexpr double kPermutationTol = 1e-12;
constexpr double kUpperBoundTol = 1e-10;
constexpr double kConcurrenceTol = 1e-9;
constexpr double kBargmannTol = 1e-10;
constexpr double kBlochProductTol = 1e-12;
constexpr double kClosedFormTol = 1e-10;
constexpr double kCoherentTol = 1e-9;
constexpr double kLandmarkTol = 1e-10;
constexpr double kSingleQubitTol = 1e-8;
constexpr double kChartTol = 1e-10;
constexpr double kAnalyticStep = 1e-4;
constexpr double kAnalyticRelTol = 1e-4;
constexpr double kDecouplingClaim = 0.05;
constexpr double kDecouplingOverlap = 0.1;
constexpr double kMetricSpread = 0.25;
constexpr double kMaxXi = 1.5;

class Sampler {
   public:
    Sampler(std::uint64_t seed, int n, int tag) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(tag)};
        rng_.seed(seq);
    }

    Complex gauss() {
        const double re = normal_(rng_);
        const double im = normal_(rng_);
        return {re, im};
    }
    double uniform() { return uniform_(rng_); }

    // Gaussian (alpha, beta) gives stars uniformly distributed on the sphere.
    Star star() {
        const Complex a = gauss();
        const Complex b = gauss();
        return Star::homogeneous(a, b);
    }

    StarSet stars(int n) {
        std::vector<Star> s;
        for (int i = 0; i < n; ++i) s.push_back(star());
        return StarSet(std::move(s));
    }

    // Finite stars with every pair at least min_chordal apart.
    StarSet spread_stars(int n, double min_chordal) {
        std::vector<Star> s;
        while (static_cast<int>(s.size()) < n) {
            const Star c = Star::finite(gauss());
            const bool far =
                std::all_of(s.begin(), s.end(), [&](const Star &x) { return chordal_distance(x, c) >= min_chordal; });
            if (far) s.push_back(c);
        }
        return StarSet(std::move(s));
    }

    std::vector<Complex> amplitudes(int d) {
        std::vector<Complex> c;
        for (int k = 0; k < d; ++k) c.push_back(gauss());
        return c;
    }

    SymmetricState state(int n) { return normalize(amplitudes(n + 1)); }

    Eigen::MatrixXcd matrix(int n) {
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = gauss();
        }
        return m;
    }

   private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Tracks the worst residual; NaN counts as a failure.
struct Worst {
    double value = 0.0;
    bool nan = false;
    void add(double r) {
        if (std::isnan(r)) nan = true;
        value = std::max(value, r);
    }
};

class Recorder {
   public:
    explicit Recorder(VerifyReport &report) : report_(report) {}

    void gate(const std::string &name, int n, const Worst &w, double tol, json extra = json::object()) {
        report_.lines.push_back({name, n, !w.nan && w.value <= tol, w.nan ? std::numeric_limits<double>::quiet_NaN() : w.value,
                                 false, std::move(extra)});
    }
    void gate_value(const std::string &name, int n, double residual, double tol) {
        Worst w;
        w.add(residual);
        gate(name, n, w, tol);
    }
    void forward(const std::string &name, int n, bool pass, double residual) {
        report_.lines.push_back({name, n, pass, residual, false, json::object()});
    }
    void experiment(const std::string &name, int n, bool consistent, double residual, json extra) {
        report_.lines.push_back({name, n, consistent, residual, true, std::move(extra)});
    }

   private:
    VerifyReport &report_;
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int capped(int trials, int cap) { return std::min(trials, cap); }

void algebra_checks(Recorder &rec, int n) {
    for (const auto &c : oracle::check_algebra(n)) rec.forward("algebra." + c.name, n, c.pass, c.max_residual);
    for (const auto &c : oracle::check_ladder(n)) rec.forward(c.name, n, c.pass, c.max_residual);
    if (n >= 2) {
        const auto r = oracle::check_dicke_recursion(n);
        rec.forward("dicke.recursion", n, r.pass, r.max_residual);
    }
}

double round_trip_error(const SymmetricState &state) {
    return 1.0 - fidelity(state, state_from_stars(stars_from_state(state)));
}

void star_checks(Recorder &rec, int n, int trials, std::uint64_t seed) {
    Sampler s(seed, n, 1);
    Worst generic, infinite, separable, witness, entangled;
    for (int t = 0; t < trials; ++t) generic.add(round_trip_error(s.state(n)));
    for (int t = 0; t < capped(trials, 100); ++t) {
        auto c = s.amplitudes(n + 1);
        c[0] = 0.0;
        infinite.add(round_trip_error(normalize(c)));
    }
    for (int t = 0; t < capped(trials, 100); ++t) {
        const Star z = s.star();
        const auto state = coherent_state(n, z);
        separable.add(round_trip_error(state));
        const auto sep = is_separable(state);
        witness.add(sep.separable && sep.witness ? 1.0 - fidelity(state, coherent_state(n, *sep.witness)) : 1.0);
    }
    rec.gate("stars.round_trip", n, generic, kRoundTripTol);
    rec.gate("stars.round_trip_infinity", n, infinite, kRoundTripTol);
    rec.gate("stars.round_trip_separable", n, separable, kRoundTripTol);
    rec.gate("stars.separable_witness", n, witness, kRoundTripTol);
    if (n >= 2) {
        // Generic random states are entangled: their stars do not all coincide.
        for (int t = 0; t < capped(trials, 100); ++t) entangled.add(is_separable(s.state(n)).separable ? 1.0 : 0.0);
        rec.gate("stars.entangled_not_separable", n, entangled, 0.0);
    }
}

void permanent_checks(Recorder &rec, int n, int trials, std::uint64_t seed) {
    Sampler s(seed, n, 2);
    if (n <= 7) {
        Worst ryser, glynn;
        for (int t = 0; t < capped(trials, 200); ++t) {
            const auto m = s.matrix(n);
            const Complex naive = permanent_naive(m);
            ryser.add(std::abs(permanent_ryser(m) - naive) / std::abs(naive));
            glynn.add(std::abs(permanent(m) - naive) / std::abs(naive));
        }
        rec.gate("permanent.ryser_vs_naive", n, ryser, kNaivePermanentTol);
        rec.gate("permanent.glynn_vs_naive", n, glynn, kNaivePermanentTol);
    }
    {
        Worst ryser, glynn;
        const int count = n <= 6 ? capped(trials, 100) : capped(trials, 20);
        for (int t = 0; t < count; ++t) {
            const auto stars = s.stars(n);
            const auto g = gram(stars);
            const double prenorm = oracle::symmetrized_product(stars).prenorm_sq;
            ryser.add(std::abs(factorial(n) * permanent_ryser(g.entries).real() - prenorm) / prenorm);
            glynn.add(std::abs(factorial(n) * permanent(g).real() - prenorm) / prenorm);
        }
        rec.gate("permanent.ryser_vs_symmetrized_norm", n, ryser, kOraclePermanentTol);
        rec.gate("permanent.glynn_vs_symmetrized_norm", n, glynn, kOraclePermanentTol);
    }
    Worst imag, perm_inv, upper, separable;
    for (int t = 0; t < trials; ++t) {
        auto stars = s.stars(n);
        const Complex p = permanent(gram(stars));
        imag.add(std::abs(p.imag()));
        const double pd = p.real() / factorial(n);
        upper.add(std::max(0.0, pd - 1.0));
        std::shuffle(stars.stars.begin(), stars.stars.end(), std::mt19937_64(static_cast<std::uint64_t>(t)));
        perm_inv.add(std::abs(perma_value(stars) - pd));
    }
    for (int t = 0; t < capped(trials, 100); ++t) {
        const auto state = coherent_state(n, s.star());
        separable.add(std::abs(perma_concurrence(stars_from_state(state)).p_d - 1.0));
    }
    rec.gate("permanent.real", n, imag, kRealPermanentTol);
    rec.gate("perma.permutation_invariance", n, perm_inv, kPermutationTol);
    rec.gate("perma.upper_bound", n, upper, kUpperBoundTol);
    rec.gate("perma.separable_is_one", n, separable, kLandmarkTol);
}

void identity_checks(Recorder &rec, int n, int trials, std::uint64_t seed) {
    Sampler s(seed, n, 3);
    if (n == 2) {
        Worst conc, ovl, bloch;
        for (int t = 0; t < trials; ++t) {
            const auto state = s.state(2);
            const auto stars = stars_from_state(state);
            const double c = concurrence_d3(state);
            const double p = perma_concurrence(stars).p_d;
            conc.add(std::abs(c - (1.0 / p - 1.0)));
            ovl.add(std::abs(std::norm(overlap(stars[0], stars[1])) - (1.0 - c) / (1.0 + c)));
            const Star a = s.star();
            const Star b = s.star();
            bloch.add(std::abs(dot(bloch_vector(a), bloch_vector(b)) - (2.0 * std::norm(overlap(a, b)) - 1.0)));
        }
        rec.gate("concurrence.inverse_p3", n, conc, kConcurrenceTol);
        rec.gate("concurrence.overlap", n, ovl, kConcurrenceTol);
        rec.gate("identity.bloch_product", n, bloch, kBlochProductTol);
    }
    if (n == 3) {
        Worst w;
        for (int t = 0; t < trials; ++t) {
            const Star a = s.star();
            const Star b = s.star();
            const Star c = s.star();
            const Complex triple = overlap(a, b) * overlap(b, c) * overlap(c, a);
            const double pairs = std::norm(overlap(a, b)) + std::norm(overlap(b, c)) + std::norm(overlap(c, a));
            w.add(std::abs(2.0 * triple.real() - (pairs - 1.0)));
        }
        rec.gate("identity.bargmann_invariant", n, w, kBargmannTol);
    }
}

void closed_form_checks(Recorder &rec, int n, int trials, std::uint64_t seed) {
    if (n < 2 || n > 4) return;
    Sampler s(seed, n, 4);
    Worst overlap_dev, bloch_dev, reduced_dev;
    for (int t = 0; t < trials; ++t) {
        const auto stars = s.stars(n);
        const double p = perma_value(stars);
        const auto f = closed_form_p(stars);
        overlap_dev.add(std::abs(f.overlap_form - p));
        bloch_dev.add(std::abs(f.bloch_form - p));
        if (f.reduced_form) reduced_dev.add(std::abs(*f.reduced_form - p));
    }
    if (n == 4) {
        // The four-star expressions are compared, not gated.
        const double worst = std::max(overlap_dev.value, bloch_dev.value);
        rec.experiment("experiment.p5_closed_form", n, worst <= kClosedFormTol, worst,
                       json{{"trials", trials}, {"overlap_max_deviation", overlap_dev.value},
                            {"bloch_max_deviation", bloch_dev.value}, {"tolerance", kClosedFormTol}});
        return;
    }
    const std::string prefix = "closed_form.p" + std::to_string(n + 1);
    rec.gate(prefix + "_overlap", n, overlap_dev, kClosedFormTol);
    rec.gate(prefix + "_bloch", n, bloch_dev, kClosedFormTol);
    if (n == 3) rec.gate(prefix + "_reduced", n, reduced_dev, kClosedFormTol);
}

void coherent_checks(Recorder &rec, int n, int trials, std::uint64_t seed) {
    Sampler s(seed, n, 5);
    Worst w;
    for (int t = 0; t < capped(trials, 50); ++t) {
        const double r = kMaxXi * std::sqrt(s.uniform());
        const Complex xi = std::polar(r, 2.0 * std::numbers::pi * s.uniform());
        const auto displaced = oracle::displaced_ground(n, xi);
        const std::vector<Star> copies(static_cast<std::size_t>(n), oracle::displacement_star(xi));
        const auto product = oracle::product_state(StarSet(copies));
        w.add(1.0 - oracle::fidelity(displaced, product));
    }
    rec.gate("coherent.displaced_ground", n, w, kCoherentTol);
}

void metric_checks(Recorder &rec, int n, int trials, std::uint64_t seed) {
    Sampler s(seed, n, 6);
    if (n == 1) {
        Worst single, kahler;
        for (double x : {-3.0, 0.0, 3.0}) {
            for (double y : {-3.0, 0.0, 3.0}) {
                const Complex z(x, y);
                const auto stars = star_set(std::vector<Complex>{z});
                single.add(std::abs(metric_symmetric(stars).entries(0, 0) - metric_single_qubit(z)));
                kahler.add(std::abs(kahler_potential(stars) - std::log1p(std::norm(z))));
            }
        }
        rec.gate("metric.single_qubit", n, single, kSingleQubitTol);
        rec.gate("metric.kahler_single_qubit", n, kahler, kSingleQubitTol);
    } else {
        Worst herm, psd, analytic, ratio;
        for (int t = 0; t < capped(trials, 10); ++t) {
            const auto stars = s.spread_stars(n, kMetricSpread);
            const auto g = metric_symmetric(stars);
            herm.add(g.hermitian_residual);
            const auto halving = step_halving(stars, kDefaultMetricStep);
            psd.add(std::max(0.0, -min_eigenvalue(g) - 10.0 * halving.max_change));
            const auto exact = oracle::fubini_study_metric(stars);
            const auto coarse = metric_symmetric(stars, kAnalyticStep).entries;
            analytic.add((coarse - exact).cwiseAbs().maxCoeff() / exact.cwiseAbs().maxCoeff());
            const auto probe = step_halving(stars, kRichardsonProbeStep);
            ratio.add(probe.ratio ? std::abs(*probe.ratio - 4.0) : std::numeric_limits<double>::quiet_NaN());
        }
        rec.gate("metric.hermitian", n, herm, kHermitianTolerance);
        rec.gate("metric.positive_semidefinite", n, psd, 0.0);
        rec.gate("metric.vs_analytic", n, analytic, kAnalyticRelTol, json{{"step", kAnalyticStep}});
        // Ratio in [3, 5] means |ratio - 4| <= 1.
        rec.gate("metric.richardson_ratio", n, ratio, 1.0, json{{"probe_step", kRichardsonProbeStep}});
    }
    Worst chart;
    for (int t = 0; t < capped(trials, 100); ++t) {
        const auto stars = s.stars(n);
        const Star target = s.star();
        chart.add(std::abs(perma_value(rotate_chart(stars, target).stars) - perma_value(stars)));
    }
    rec.gate("metric.chart_invariance", n, chart, kChartTol);
}

void landmark_checks(Recorder &rec, int n) {
    if (n == 2) {
        const std::vector<Complex> c{0.0, 1.0, 0.0};
        rec.gate_value("landmark.p3_dicke_2_1", n, std::abs(perma_value(stars_from_state(normalize(c))) - 0.5),
                       kLandmarkTol);
    }
    if (n == 3) {
        const std::vector<Complex> c{1.0, 0.0, 0.0, 1.0};
        rec.gate_value("landmark.p4_ghz", n, std::abs(perma_value(stars_from_state(normalize(c))) - 0.25),
                       kLandmarkTol);
    }
    if (n == 4) {
        const Star a = Star::finite(Complex(0.3, -0.4));
        const Star b = antipode(a);
        const StarSet stars({a, b, b, b});
        rec.gate_value("landmark.p5_antipodal_triple", n, std::abs(perma_value(stars) - 0.25), kLandmarkTol);
    }
}

void experiments(Recorder &rec, int n, int trials, std::uint64_t seed) {
    Sampler s(seed, n, 7);
    if (n >= 2) {
        double lowest = std::numeric_limits<double>::infinity();
        for (int t = 0; t < trials; ++t) lowest = std::min(lowest, perma_value(stars_from_state(s.state(n))));
        json extra{{"d", n + 1}, {"trials", trials}, {"claimed_min", 1.0 / n}};
        if (n == 3) {
            const std::vector<Complex> ghz{1.0, 0.0, 0.0, 1.0};
            const double probe = perma_value(stars_from_state(normalize(ghz)));
            extra["ghz_probe"] = probe;
            lowest = std::min(lowest, probe);
        }
        extra["empirical_min"] = lowest;
        rec.experiment("experiment.lower_bound", n, lowest >= 1.0 / n - kUpperBoundTol, lowest, std::move(extra));
    }
    if (n == 2) {
        // Widely separated pairs, |<a|b>| <= 0.1.
        double worst = 0.0;
        int samples = 0;
        for (int t = 0; t < capped(trials, 50); ++t) {
            const Star a = Star::finite(s.gauss());
            const Star far = antipode(a);
            const Star b = Star::homogeneous(far.alpha() + 0.05 * s.gauss(), far.beta() + 0.05 * s.gauss());
            if (b.is_infinite() || std::abs(overlap(a, b)) > kDecouplingOverlap) continue;
            const StarSet stars({a, b});
            worst = std::max(worst, (metric_symmetric(stars).entries - metric_separable(stars).entries).cwiseAbs().maxCoeff());
            ++samples;
        }
        rec.experiment("experiment.decoupling", n, worst <= kDecouplingClaim, worst,
                       json{{"samples", samples}, {"claimed_max", kDecouplingClaim}, {"max_overlap", kDecouplingOverlap}});
    }
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const VerifyLine &l) { return l.experimental || l.pass; });
}

VerifyReport run_verify(const VerifyOptions &options) {
    if (options.max_n < 1 || options.max_n > kMaxVerifyQubits) {
        throw Error(ErrorCode::RangeError, "--max-n must be in [1, " + std::to_string(kMaxVerifyQubits) + "]");
    }
    if (options.trials < 1) {
        throw Error(ErrorCode::RangeError, "--trials must be at least 1");
    }
    VerifyReport report;
    Recorder rec(report);
    const int trials = options.trials;
    const std::uint64_t seed = options.seed;
    for (int n = 1; n <= options.max_n; ++n) {
        const std::vector<std::pair<std::string, std::function<void()>>> groups{
            {"algebra", [&] { algebra_checks(rec, n); }},
            {"stars", [&] { star_checks(rec, n, trials, seed); }},
            {"permanent", [&] { permanent_checks(rec, n, trials, seed); }},
            {"identity", [&] { identity_checks(rec, n, trials, seed); }},
            {"closed_form", [&] { closed_form_checks(rec, n, trials, seed); }},
            {"coherent", [&] { coherent_checks(rec, n, trials, seed); }},
            {"metric", [&] { metric_checks(rec, n, trials, seed); }},
            {"landmark", [&] { landmark_checks(rec, n); }},
            {"experiment", [&] { experiments(rec, n, trials, seed); }},
        };
        for (const auto &[group, run] : groups) {
            try {
                run();
            } catch (const Error &e) {
                // An exception inside a group is itself a failed check.
                report.lines.push_back({group + ".error", n, false, std::numeric_limits<double>::quiet_NaN(), false,
                                        json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}});
            }
        }
    }
    return report;
}

json to_json(const VerifyLine &line) {
    json j{{"name", line.name}, {"n", line.n}, {"pass", line.pass}};
    j["max_residual"] = std::isfinite(line.max_residual) ? json(line.max_residual) : json(nullptr);
    if (line.experimental) j["experimental"] = true;
    for (const auto &[key, value] : line.extra.items()) j[key] = value;
    return j;
}

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    VerifyReport report;
    try {
        report = run_verify(options);
    } catch (const Error &e) {
        err << json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
        return exit_code_for(e.code());
    }
    for (const auto &line : report.lines) out << to_json(line).dump() << "\n";
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace stellar
