#pragma once

#include <span>
#include <string>
#include <vector>

#include "lipsync/common.hpp"

namespace lipsync {

// ---------------------------------------------------------------------------
// Domain types

// 13-D MFCC frames at a fixed 100 Hz hop.
struct AudioFeatureSequence {
  Mat frames;  // n x 13
  static constexpr int kRateHz = kAudioRateHz;

  AudioFeatureSequence() = default;
  explicit AudioFeatureSequence(Mat f);
  int size() const { return static_cast<int>(frames.rows()); }
};

// 10-D PCA mouth frames at a fixed 25 fps.
struct MouthFeatureSequence {
  Mat frames;  // n x 10
  static constexpr int kRateHz = kVideoRateHz;

  MouthFeatureSequence() = default;
  explicit MouthFeatureSequence(Mat f);
  int size() const { return static_cast<int>(frames.rows()); }
};

// One video frame of 68-point annotations in pixel coordinates.
struct LandmarkFrame {
  Landmarks68 points;
  int frame_index = 0;
  int image_width = 512;
  int image_height = 512;

  bool within_bounds() const;
};

// 20 mouth points (indices 48-67 of the 68 scheme) in the normalized frame:
// roll removed, nose center at the origin, optionally scaled by the
// inter-outer-eye-corner distance.
using MouthCoordinates = MouthPoints;

struct PcaModel {
  Vec mean;                       // 40
  Mat components;                 // k x 40, orthonormal rows
  Vec explained_variance_ratio;   // k, non-increasing

  int n_components() const { return static_cast<int>(components.rows()); }
};

// Rigid placement of the normalized mouth frame inside an image: the inverse
// of normalize_landmarks for a given template frame.
struct MouthPlacement {
  Vec2 nose = Vec2::Zero();
  double roll = 0.0;
  double scale = 1.0;  // inter-outer-eye-corner distance (1 when unscaled)
};

// ---------------------------------------------------------------------------
// MFCC

// Analysis recipe: 25 ms periodic-Hann window, 10 ms hop, power spectrum on a
// next-pow2 FFT, 26 triangular mel filters over [0, Nyquist], log floored at
// 1e-10, orthonormal DCT-II keeping coefficients 0-12.
struct MfccConfig {
  double window_seconds = 0.025;
  double hop_seconds = 0.010;
  int mel_filters = 26;
  int coefficients = 13;
  double log_floor = 1e-10;
};

// pcm is normalized to [-1, 1) before analysis. Frame count is
// floor((num_samples - window) / hop) + 1; shorter input raises
// "audio too short".
AudioFeatureSequence extract_mfcc(std::span<const int16_t> pcm, int sample_rate,
                                  const MfccConfig& cfg = {});
AudioFeatureSequence extract_mfcc(std::span<const double> pcm, int sample_rate,
                                  const MfccConfig& cfg = {});

// HTK mel scale, shared with the test oracle.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// ---------------------------------------------------------------------------
// Landmark normalization

// Removes in-plane roll (angle of the outer-eye-corner line, landmarks 36 and
// 45), recenters on the nose (mean of nostril-line landmarks 31, 32, 34, 35)
// and, when scale_normalize is set, divides by the inter-outer-eye-corner
// distance. Returns the 20 mouth points.
MouthCoordinates normalize_landmarks(const LandmarkFrame& frame, bool scale_normalize = true);

// The roll / nose-anchor / scale of a frame as measured by the normalizer.
MouthPlacement placement_from_landmarks(const LandmarkFrame& frame, bool scale_normalize = true);

// Maps normalized coordinates back into pixel space for the given placement.
Mat denormalize_points(const Mat& normalized_points, const MouthPlacement& placement);

// ---------------------------------------------------------------------------
// PCA

// Flattening order for a 20-point mouth: x0,y0,x1,y1,...,x19,y19.
Vec flatten_mouth(const MouthCoordinates& coords);
MouthCoordinates unflatten_mouth(const Vec& flat);

// Top-k principal components of the mean-centered corpus. Requires at least
// n_components + 1 samples; an all-identical corpus is an error.
PcaModel fit_pca(const std::vector<MouthCoordinates>& corpus, int n_components = 10);

Vec pca_transform(const PcaModel& model, const MouthCoordinates& coords);
MouthCoordinates pca_inverse(const PcaModel& model, const Vec& feature);

// ---------------------------------------------------------------------------
// File formats

// Landmark CSV: header then one row per frame: frame_index,x0,y0,...,x67,y67.
std::vector<LandmarkFrame> read_landmarks_csv(const std::string& path, int image_width = 512,
                                              int image_height = 512);
void write_landmarks_csv(const std::string& path, const std::vector<LandmarkFrame>& frames);

// Feature CSVs: one row per frame (13 MFCC cols or k feature cols).
void write_audio_features_csv(const std::string& path, const AudioFeatureSequence& seq);
AudioFeatureSequence read_audio_features_csv(const std::string& path);
void write_mouth_features_csv(const std::string& path, const MouthFeatureSequence& seq);
MouthFeatureSequence read_mouth_features_csv(const std::string& path);

// Flat binary PCA model: magic "PCA1", mean (40 f64), components (k*40 f64
// row-major), ratios (k f64), little-endian. k = 10 gives the canonical
// 3684-byte layout; other k are inferred from the file size.
void save_pca(const std::string& path, const PcaModel& model);
PcaModel load_pca(const std::string& path);

}  // namespace lipsync
