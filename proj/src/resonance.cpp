#include "srlab/resonance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "srlab/rng.hpp"

namespace srlab::resonance {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

SignalSpec::Type signal_type_from_string(const std::string& name) {
    if (name == "bipolar") return SignalSpec::Type::bipolar;
    if (name == "sine") return SignalSpec::Type::sine;
    if (name == "roessler") return SignalSpec::Type::roessler;
    if (name == "ou") return SignalSpec::Type::ou;
    if (name == "audio") return SignalSpec::Type::audio;
    throw std::invalid_argument("unknown signal type: " + name);
}

std::string signal_type_to_string(SignalSpec::Type type) {
    switch (type) {
        case SignalSpec::Type::bipolar: return "bipolar";
        case SignalSpec::Type::sine: return "sine";
        case SignalSpec::Type::roessler: return "roessler";
        case SignalSpec::Type::ou: return "ou";
        case SignalSpec::Type::audio: return "audio";
    }
    return "?";
}

TimeSeries make_signal(const SignalSpec& spec, std::size_t n,
                       std::uint64_t seed) {
    TimeSeries ts;
    switch (spec.type) {
        case SignalSpec::Type::bipolar:
            ts = signals::gen_bipolar(spec.persist_prob, n, seed);
            break;
        case SignalSpec::Type::sine:
            ts = signals::gen_sine(spec.freq, spec.amplitude, spec.dt, n);
            break;
        case SignalSpec::Type::roessler:
            ts = signals::gen_roessler(spec.roessler, n);
            break;
        case SignalSpec::Type::ou:
            ts = signals::gen_ou(spec.ou, n, seed);
            break;
        case SignalSpec::Type::audio: {
            TimeSeries file = signals::load_audio(spec.audio_path);
            std::vector<double> s(n);
            for (std::size_t i = 0; i < n; ++i)
                s[i] = file[i % file.size()];  // tile short recordings
            ts = TimeSeries(std::move(s), file.dt, file.label);
            break;
        }
    }
    if (spec.normalize_to > 0.0)
        ts = signals::normalize_amplitude(ts, spec.normalize_to);
    return ts;
}

void SweepConfig::validate() const {
    detector.validate();
    if (sigma_grid.empty())
        throw std::invalid_argument("SweepConfig: empty sigma_grid");
    for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
        if (sigma_grid[i] < 0.0)
            throw std::invalid_argument("SweepConfig: sigma_grid values must be >= 0");
        if (i > 0 && sigma_grid[i] <= sigma_grid[i - 1])
            throw std::invalid_argument(
                "SweepConfig: sigma_grid must be strictly increasing");
    }
    if (samples_per_point < 1000)
        throw std::invalid_argument(
            "SweepConfig: samples_per_point must be >= 1000");
    if (replicates == 0)
        throw std::invalid_argument("SweepConfig: replicates must be >= 1");
    if (ac_lags.empty())
        throw std::invalid_argument("SweepConfig: ac_lags must be non-empty");
}

namespace {

using detectors::Kind;

TimeSeries detect(const detectors::DetectorSpec& det, const TimeSeries& s,
                  const TimeSeries& noise, std::uint64_t coin_seed) {
    if (det.kind == Kind::lif) return detectors::run_lif(det, s, noise);
    return detectors::apply_memoryless(det, s, noise, coin_seed);
}

objectives::ObjectiveSample evaluate_replicate(const SweepConfig& cfg,
                                               double sigma,
                                               std::size_t sigma_index,
                                               std::size_t replicate) {
    const std::size_t n = cfg.samples_per_point;
    const std::uint64_t point_tag = sigma_index * 0x10001ULL + replicate;
    const std::uint64_t signal_seed = derive_seed(cfg.master_seed, replicate, 1);
    const std::uint64_t noise_seed = derive_seed(cfg.master_seed, point_tag, 2);
    const std::uint64_t coin_seed = derive_seed(cfg.master_seed, point_tag, 3);

    const TimeSeries s = make_signal(cfg.signal, n, signal_seed);
    TimeSeries noise = signals::gen_gaussian_noise(sigma, n, noise_seed);
    noise.dt = s.dt;
    const TimeSeries y = detect(cfg.detector, s, noise, coin_seed);

    objectives::ObjectiveSample out;
    out.mi_bits =
        cfg.select.mi ? objectives::mutual_information(s, y, cfg.binning) : kNan;

    if (cfg.select.cc) {
        try {
            out.cc = objectives::cross_correlation(s, y);
        } catch (const std::domain_error&) {
            out.cc = 0.0;  // silent detector at this sigma
        }
    } else {
        out.cc = kNan;
    }

    if (cfg.select.ac) {
        out.ac_lag1 = objectives::autocorrelation(y, 1).value;
        out.ac_rms = objectives::ac_rms(y, cfg.ac_lags);
    } else {
        out.ac_lag1 = kNan;
        out.ac_rms = kNan;
    }

    if (cfg.select.q && cfg.signal.type == SignalSpec::Type::bipolar &&
        cfg.detector.kind == Kind::discrete_symmetric)
        out.q_hat = objectives::success_probability(s, y);

    if (cfg.select.snr && cfg.stimulus_freq > 0.0 &&
        cfg.signal.type == SignalSpec::Type::sine) {
        const std::uint64_t nc_seed = derive_seed(cfg.master_seed, point_tag, 4);
        TimeSeries zero(std::vector<double>(n, 0.0), s.dt, "silence");
        const TimeSeries y_noise = detect(cfg.detector, zero, noise, nc_seed);
        out.snr_db = objectives::snr_db(y, y_noise, cfg.stimulus_freq);
    }
    return out;
}

CurvePoint evaluate_point(const SweepConfig& cfg, std::size_t sigma_index) {
    const double sigma = cfg.sigma_grid[sigma_index];
    std::vector<objectives::ObjectiveSample> reps;
    reps.reserve(cfg.replicates);
    for (std::size_t r = 0; r < cfg.replicates; ++r)
        reps.push_back(evaluate_replicate(cfg, sigma, sigma_index, r));

    auto mean_se = [&](auto getter, double& mean, double& se) {
        double sum = 0.0;
        for (const auto& rep : reps) sum += getter(rep);
        mean = sum / static_cast<double>(reps.size());
        double var = 0.0;
        for (const auto& rep : reps) {
            const double d = getter(rep) - mean;
            var += d * d;
        }
        se = reps.size() > 1 ? std::sqrt(var / (static_cast<double>(reps.size()) *
                                                (reps.size() - 1.0)))
                             : 0.0;
    };

    CurvePoint pt;
    pt.sigma = sigma;
    pt.replicates = cfg.replicates;
    double se = 0.0;
    mean_se([](const auto& o) { return o.mi_bits; }, pt.mean.mi_bits,
            pt.std_error.mi_bits);
    mean_se([](const auto& o) { return o.cc; }, pt.mean.cc, pt.std_error.cc);
    mean_se([](const auto& o) { return o.ac_lag1; }, pt.mean.ac_lag1,
            pt.std_error.ac_lag1);
    mean_se([](const auto& o) { return o.ac_rms; }, pt.mean.ac_rms,
            pt.std_error.ac_rms);
    if (reps.front().q_hat) {
        double m = 0.0;
        mean_se([](const auto& o) { return *o.q_hat; }, m, se);
        pt.mean.q_hat = m;
        pt.std_error.q_hat = se;
    }
    if (reps.front().snr_db) {
        double m = 0.0;
        mean_se([](const auto& o) { return *o.snr_db; }, m, se);
        pt.mean.snr_db = m;
        pt.std_error.snr_db = se;
    }
    return pt;
}

}  // namespace

ResonanceCurve run_sweep(const SweepConfig& config, unsigned threads) {
    config.validate();
    ResonanceCurve curve;
    curve.config = config;
    curve.points.resize(config.sigma_grid.size());

    const std::size_t npoints = config.sigma_grid.size();
    if (threads <= 1 || npoints == 1) {
        for (std::size_t i = 0; i < npoints; ++i)
            curve.points[i] = evaluate_point(config, i);
        return curve;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < npoints;
             i = next.fetch_add(1))
            curve.points[i] = evaluate_point(config, i);
    };
    std::vector<std::thread> pool;
    const unsigned nthreads = std::min<unsigned>(threads, npoints);
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return curve;
}

Optimum find_optimum(const ResonanceCurve& curve, const std::string& objective) {
    if (curve.points.empty())
        throw std::invalid_argument("find_optimum: empty curve");

    auto value_of = [&](const CurvePoint& pt) -> double {
        if (objective == "mi") return pt.mean.mi_bits;
        if (objective == "cc") return pt.mean.cc;
        if (objective == "ac") return std::abs(pt.mean.ac_lag1);
        if (objective == "ac_rms") return pt.mean.ac_rms;
        if (objective == "q") return pt.mean.q_hat ? *pt.mean.q_hat : kNan;
        if (objective == "snr") return pt.mean.snr_db ? *pt.mean.snr_db : kNan;
        throw std::invalid_argument("find_optimum: unknown objective " +
                                    objective);
    };

    std::size_t best = curve.points.size();
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const double v = value_of(curve.points[i]);
        if (std::isnan(v)) continue;
        if (best == curve.points.size() || v > best_value) {
            best = i;
            best_value = v;
        }
    }
    if (best == curve.points.size())
        throw std::runtime_error("find_optimum: no usable values for objective " +
                                 objective);
    Optimum opt;
    opt.sigma = curve.points[best].sigma;
    opt.value = best_value;
    opt.boundary = best == 0 || best == curve.points.size() - 1;
    return opt;
}

ScatterStudy run_scatter_study(const std::vector<SweepConfig>& configs,
                               const std::string& ac_objective,
                               unsigned threads) {
    if (configs.size() < 3)
        throw std::invalid_argument("run_scatter_study: need >= 3 configs");
    ScatterStudy study;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const ResonanceCurve curve = run_sweep(configs[i], threads);
        const Optimum mi = find_optimum(curve, "mi");
        const Optimum ac = find_optimum(curve, ac_objective);
        ScatterPair pair;
        pair.config_id = std::to_string(i) + ":" +
                         signal_type_to_string(configs[i].signal.type) + "/" +
                         detectors::kind_to_string(configs[i].detector.kind);
        pair.sigma_mi = mi.sigma;
        pair.sigma_ac = ac.sigma;
        pair.boundary = mi.boundary || ac.boundary;
        study.pairs.push_back(pair);
        xs.push_back(mi.sigma);
        ys.push_back(ac.sigma);
    }
    try {
        study.r = objectives::pearson_r(xs, ys);
    } catch (const std::domain_error&) {
        study.r = kNan;
        study.degenerate = true;
    }
    return study;
}

ControllerState adapt_step(const ControllerState& state,
                           const TimeSeries& signal_window,
                           const detectors::DetectorSpec& detector,
                           std::uint64_t seed) {
    if (signal_window.size() < 1000)
        throw std::invalid_argument("adapt_step: window length must be >= 1000");

    const std::size_t n = signal_window.size();
    Rng rng(derive_seed(seed, 1));
    std::vector<double> z(n);
    for (auto& v : z) v = rng.normal();
    const std::uint64_t coin_seed = derive_seed(seed, 2);

    auto probe = [&](double sigma) {
        std::vector<double> scaled(n);
        for (std::size_t i = 0; i < n; ++i) scaled[i] = sigma * z[i];
        TimeSeries noise(std::move(scaled), signal_window.dt, "probe_noise");
        const TimeSeries y = detect(detector, signal_window, noise, coin_seed);
        return objectives::autocorrelation(y, 1);
    };

    const objectives::AcValue here = probe(state.sigma);
    const objectives::AcValue ahead = probe(state.sigma + state.step);

    ControllerState next = state;
    next.iteration = state.iteration + 1;
    if (here.degenerate && ahead.degenerate) {
        next.degenerate_count = state.degenerate_count + 1;
        return next;
    }

    const double ac_here = std::abs(here.value);
    const double ac_ahead = std::abs(ahead.value);
    if (ac_ahead > ac_here) {
        next.sigma = state.sigma + state.step;
    } else {
        next.sigma = std::max(0.0, state.sigma - state.step);
        // Decaying only on reversals keeps the stride while climbing; the
        // step still shrinks geometrically once the peak is bracketed.
        next.step = std::max(state.step * 0.95, 1e-3);
    }
    const double observed = std::max(ac_here, ac_ahead);
    next.ac_estimate = state.iteration == 0
                           ? observed
                           : 0.8 * state.ac_estimate + 0.2 * observed;
    return next;
}

std::vector<ControllerState> run_controller(
    const SignalSpec& signal, const detectors::DetectorSpec& detector,
    const ControllerParams& params, std::uint64_t master_seed) {
    ControllerState state;
    state.sigma = params.sigma0;
    state.step = params.step0;
    state.window = params.window;

    std::vector<ControllerState> trajectory;
    trajectory.reserve(params.iterations);
    for (std::size_t it = 0; it < params.iterations; ++it) {
        const TimeSeries window = make_signal(
            signal, params.window, derive_seed(master_seed, it, 21));
        state = adapt_step(state, window, detector,
                           derive_seed(master_seed, it, 22));
        trajectory.push_back(state);
    }
    return trajectory;
}

}  // namespace srlab::resonance
