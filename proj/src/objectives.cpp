#include "srlab/objectives.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "srlab/kernels.hpp"

namespace srlab::objectives {
namespace {

struct Binned {
    std::vector<std::size_t> idx;
    std::size_t nbins;
};

Binned bin_series(const std::vector<double>& v, const BinningSpec& spec) {
    if (spec.bins < 2) throw std::invalid_argument("BinningSpec: bins must be >= 2");

    // Exact-value binning when the alphabet is small enough.
    std::vector<double> uniq(v);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    Binned out;
    out.idx.resize(v.size());
    if (uniq.size() <= spec.bins) {
        out.nbins = uniq.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            out.idx[i] = static_cast<std::size_t>(
                std::lower_bound(uniq.begin(), uniq.end(), v[i]) - uniq.begin());
        return out;
    }

    double lo = spec.lo, hi = spec.hi;
    if (spec.auto_range) {
        lo = uniq.front();
        hi = uniq.back();
    }
    if (!(lo < hi)) throw std::invalid_argument("BinningSpec: lo must be < hi");
    out.nbins = spec.bins;
    const double scale = static_cast<double>(spec.bins) / (hi - lo);
    for (std::size_t i = 0; i < v.size(); ++i) {
        double t = (v[i] - lo) * scale;
        auto k = static_cast<std::ptrdiff_t>(t);
        k = std::clamp<std::ptrdiff_t>(k, 0,
                                       static_cast<std::ptrdiff_t>(spec.bins) - 1);
        out.idx[i] = static_cast<std::size_t>(k);
    }
    return out;
}

double mean_of(const std::vector<double>& v) {
    return kernels::active().sum(v.data(), v.size()) /
           static_cast<double>(v.size());
}

}  // namespace

double mutual_information(const TimeSeries& s, const TimeSeries& y,
                          const BinningSpec& binning) {
    if (s.size() != y.size())
        throw std::invalid_argument("mutual_information: length mismatch");
    if (s.size() < 2)
        throw std::invalid_argument("mutual_information: need >= 2 samples");

    const Binned bs = bin_series(s.samples, binning);
    const Binned by = bin_series(y.samples, binning);
    if (bs.nbins == 1 || by.nbins == 1) return 0.0;

    std::vector<double> joint(bs.nbins * by.nbins, 0.0);
    std::vector<double> ps(bs.nbins, 0.0), py(by.nbins, 0.0);
    const double w = 1.0 / static_cast<double>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        joint[bs.idx[i] * by.nbins + by.idx[i]] += w;
        ps[bs.idx[i]] += w;
        py[by.idx[i]] += w;
    }
    double mi = 0.0;
    for (std::size_t a = 0; a < bs.nbins; ++a)
        for (std::size_t b = 0; b < by.nbins; ++b) {
            const double p = joint[a * by.nbins + b];
            if (p > 0.0) mi += p * std::log2(p / (ps[a] * py[b]));
        }
    return std::max(mi, 0.0);
}

double cross_correlation(const TimeSeries& s, const TimeSeries& y) {
    if (s.size() != y.size())
        throw std::invalid_argument("cross_correlation: length mismatch");
    if (s.size() < 2)
        throw std::invalid_argument("cross_correlation: need >= 2 samples");
    const auto& k = kernels::active();
    const std::size_t n = s.size();
    const double ms = mean_of(s.samples), my = mean_of(y.samples);
    const double ss = k.dot(s.data(), s.data(), n) - n * ms * ms;
    const double yy = k.dot(y.data(), y.data(), n) - n * my * my;
    if (ss <= 0.0 || yy <= 0.0)
        throw std::domain_error("cross_correlation: degenerate input variance");
    const double sy = k.dot(s.data(), y.data(), n) - n * ms * my;
    return std::clamp(sy / std::sqrt(ss * yy), -1.0, 1.0);
}

AcValue autocorrelation(const TimeSeries& y, std::size_t lag) {
    if (lag == 0) throw std::invalid_argument("autocorrelation: lag must be >= 1");
    if (y.size() <= lag)
        throw std::invalid_argument("autocorrelation: series shorter than lag");
    const auto& k = kernels::active();
    const std::size_t n = y.size();
    const double m = mean_of(y.samples);
    const double denom = k.dot(y.data(), y.data(), n) - n * m * m;
    if (denom <= 0.0) return {0.0, true};  // constant series, Eq is 0/0
    const std::size_t np = n - lag;
    const double num = k.dot(y.data(), y.data() + lag, np) -
                       m * k.sum(y.data(), np) -
                       m * k.sum(y.data() + lag, np) + np * m * m;
    // Both moments divided by n; the ratio keeps only the pair count.
    return {num * static_cast<double>(n) / (static_cast<double>(np) * denom),
            false};
}

double ac_rms(const TimeSeries& y, const std::vector<std::size_t>& lags) {
    if (lags.empty()) throw std::invalid_argument("ac_rms: empty lag set");
    double acc = 0.0;
    for (std::size_t lag : lags) {
        const double c = autocorrelation(y, lag).value;
        acc += c * c;
    }
    return std::sqrt(acc / static_cast<double>(lags.size()));
}

double success_probability(const TimeSeries& s, const TimeSeries& y) {
    if (s.size() != y.size())
        throw std::invalid_argument("success_probability: length mismatch");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double a = s[i], b = y[i];
        if ((a != 1.0 && a != -1.0) || (b != 1.0 && b != -1.0))
            throw std::invalid_argument(
                "success_probability: series are not bipolar {-1,+1}");
        if (a == b) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(s.size());
}

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("pearson_r: need equal lengths >= 2");
    TimeSeries a(xs, 1.0, "x"), b(ys, 1.0, "y");
    return cross_correlation(a, b);
}

double snr_db_from_power(double signal_power, double noise_density) {
    if (noise_density < 0.0 || signal_power < 0.0)
        throw std::invalid_argument("snr_db_from_power: negative power");
    if (noise_density == 0.0) return std::numeric_limits<double>::infinity();
    if (signal_power == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal_power / noise_density);
}

std::vector<double> welch_psd(const TimeSeries& y, std::size_t segment) {
    const std::size_t n = y.size();
    std::size_t seg = 1;
    while (seg * 2 <= std::min(segment, n)) seg *= 2;
    if (seg < 8) throw std::invalid_argument("welch_psd: series too short");

    std::vector<double> window(seg);
    double wss = 0.0;  // sum of squared window values
    for (std::size_t i = 0; i < seg; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                          static_cast<double>(i) /
                                          static_cast<double>(seg)));
        wss += window[i] * window[i];
    }

    const std::size_t nbins = seg / 2 + 1;
    std::vector<double> psd(nbins, 0.0);
    std::vector<double> in(seg);
    std::vector<fftw_complex> out(nbins);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(seg), in.data(),
                                          out.data(), FFTW_ESTIMATE);

    const double fs = 1.0 / y.dt;
    std::size_t nseg = 0;
    for (std::size_t start = 0; start + seg <= n; start += seg / 2) {
        for (std::size_t i = 0; i < seg; ++i)
            in[i] = y[start + i] * window[i];
        fftw_execute(plan);
        for (std::size_t k = 0; k < nbins; ++k) {
            const double p = out[k][0] * out[k][0] + out[k][1] * out[k][1];
            const double one_sided = (k == 0 || k == nbins - 1) ? 1.0 : 2.0;
            psd[k] += one_sided * p / (fs * wss);
        }
        ++nseg;
    }
    fftw_destroy_plan(plan);
    for (auto& p : psd) p /= static_cast<double>(nseg);
    return psd;
}

double snr_db(const TimeSeries& y, const TimeSeries& noise_only,
              double stimulus_freq) {
    if (y.size() != noise_only.size() || y.dt != noise_only.dt)
        throw std::invalid_argument("snr_db: series shape mismatch");
    const double nyquist = 0.5 / y.dt;
    if (stimulus_freq <= 0.0 || stimulus_freq > nyquist)
        throw std::invalid_argument("snr_db: stimulus_freq outside (0, Nyquist]");

    constexpr std::size_t kSegment = 4096;
    const std::vector<double> pj = welch_psd(y, kSegment);
    const std::vector<double> pn = welch_psd(noise_only, kSegment);
    const std::size_t seg = (pj.size() - 1) * 2;
    const double df = 1.0 / (static_cast<double>(seg) * y.dt);
    const auto k0 =
        static_cast<std::size_t>(std::llround(stimulus_freq / df));
    if (k0 < 2 || k0 + 2 >= pj.size())
        throw std::invalid_argument("snr_db: stimulus bin too close to edge");

    const double noise_density = pn[k0];

    // Local noise floor in the joint spectrum: median of a window around
    // the stimulus bin, excluding the 3 signal bins.
    std::vector<double> floor_bins;
    const std::size_t lo = k0 > 12 ? k0 - 12 : 1;
    const std::size_t hi = std::min(k0 + 12, pj.size() - 1);
    for (std::size_t k = lo; k <= hi; ++k)
        if (k + 1 < k0 || k > k0 + 1) floor_bins.push_back(pj[k]);
    std::nth_element(floor_bins.begin(),
                     floor_bins.begin() + floor_bins.size() / 2,
                     floor_bins.end());
    const double floor = floor_bins[floor_bins.size() / 2];

    double signal_power = 0.0;
    for (std::size_t k = k0 - 1; k <= k0 + 1; ++k)
        signal_power += std::max(0.0, pj[k] - floor) * df;
    return snr_db_from_power(signal_power, noise_density);
}

}  // namespace srlab::objectives
