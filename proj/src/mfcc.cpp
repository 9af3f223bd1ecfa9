#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lipsync/features.hpp"

namespace lipsync {

AudioFeatureSequence::AudioFeatureSequence(Mat f) : frames(std::move(f)) {
  if (frames.cols() != kAudioDim)
    throw std::invalid_argument("audio features must have 13 coefficients per frame");
  if (!frames.allFinite()) throw std::invalid_argument("audio features must be finite");
}

MouthFeatureSequence::MouthFeatureSequence(Mat f) : frames(std::move(f)) {
  if (frames.cols() != kMouthDim)
    throw std::invalid_argument("mouth features must have 10 values per frame");
  if (!frames.allFinite()) throw std::invalid_argument("mouth features must be finite");
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

namespace {

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2 Cooley-Tukey; n is a power of two.
void fft_inplace(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = -2.0 * M_PI / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Triangular filterbank over the power-spectrum bins, filters x (nfft/2+1).
Mat mel_filterbank(int n_filters, int nfft, int sample_rate) {
  const int n_bins = nfft / 2 + 1;
  const double mel_max = hz_to_mel(sample_rate / 2.0);
  std::vector<double> peaks(n_filters + 2);
  for (int i = 0; i < n_filters + 2; ++i) {
    double hz = mel_to_hz(mel_max * i / (n_filters + 1));
    peaks[i] = hz * nfft / sample_rate;  // fractional bin
  }
  Mat bank = Mat::Zero(n_filters, n_bins);
  for (int f = 0; f < n_filters; ++f) {
    double lo = peaks[f], mid = peaks[f + 1], hi = peaks[f + 2];
    for (int b = 0; b < n_bins; ++b) {
      if (b > lo && b < mid)
        bank(f, b) = (b - lo) / (mid - lo);
      else if (b >= mid && b < hi)
        bank(f, b) = (hi - b) / (hi - mid);
    }
  }
  return bank;
}

}  // namespace

AudioFeatureSequence extract_mfcc(std::span<const double> pcm, int sample_rate,
                                  const MfccConfig& cfg) {
  if (sample_rate < 8000) throw std::invalid_argument("sample rate must be at least 8000 Hz");
  const int win = static_cast<int>(std::lround(cfg.window_seconds * sample_rate));
  const int hop = static_cast<int>(std::lround(cfg.hop_seconds * sample_rate));
  if (static_cast<int>(pcm.size()) < win) throw std::runtime_error("audio too short");

  const int n_frames = static_cast<int>((pcm.size() - win) / hop) + 1;
  const int nfft = next_pow2(win);
  const int n_bins = nfft / 2 + 1;

  std::vector<double> hann(win);
  for (int n = 0; n < win; ++n) hann[n] = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / win);

  const Mat bank = mel_filterbank(cfg.mel_filters, nfft, sample_rate);

  // Orthonormal DCT-II basis, coefficients x filters.
  Mat dct(cfg.coefficients, cfg.mel_filters);
  for (int k = 0; k < cfg.coefficients; ++k) {
    double s = std::sqrt((k == 0 ? 1.0 : 2.0) / cfg.mel_filters);
    for (int m = 0; m < cfg.mel_filters; ++m)
      dct(k, m) = s * std::cos(M_PI * k * (2 * m + 1) / (2.0 * cfg.mel_filters));
  }

  Mat out(n_frames, cfg.coefficients);
  std::vector<std::complex<double>> buf(nfft);
  Vec power(n_bins), energies(cfg.mel_filters), logged(cfg.mel_filters);
  for (int f = 0; f < n_frames; ++f) {
    const double* x = pcm.data() + static_cast<size_t>(f) * hop;
    for (int n = 0; n < win; ++n) buf[n] = std::complex<double>(x[n] * hann[n], 0.0);
    for (int n = win; n < nfft; ++n) buf[n] = 0.0;
    fft_inplace(buf);
    for (int b = 0; b < n_bins; ++b) power[b] = std::norm(buf[b]) / nfft;
    energies.noalias() = bank * power;
    for (int m = 0; m < cfg.mel_filters; ++m)
      logged[m] = std::log(std::max(energies[m], cfg.log_floor));
    out.row(f) = (dct * logged).transpose();
  }
  return AudioFeatureSequence(std::move(out));
}

AudioFeatureSequence extract_mfcc(std::span<const int16_t> pcm, int sample_rate,
                                  const MfccConfig& cfg) {
  std::vector<double> x(pcm.size());
  for (size_t i = 0; i < pcm.size(); ++i) x[i] = pcm[i] / 32768.0;
  return extract_mfcc(std::span<const double>(x), sample_rate, cfg);
}

}  // namespace lipsync
