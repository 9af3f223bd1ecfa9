#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace lipsync {

// Row-major everywhere: feature files and checkpoints are row-major on disk,
// and the conv kernels gather contiguous channel runs per time step.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;

using Landmarks68 = Eigen::Matrix<double, 68, 2, Eigen::RowMajor>;
using MouthPoints = Eigen::Matrix<double, 20, 2, Eigen::RowMajor>;
using JawPoints = Eigen::Matrix<double, 17, 2, Eigen::RowMajor>;

// Stream rates fixed by the pipeline: 13-D audio features at 100 Hz map to
// 10-D mouth features at 25 fps, so every video frame spans 4 audio frames.
inline constexpr int kAudioRateHz = 100;
inline constexpr int kVideoRateHz = 25;
inline constexpr int kRateRatio = 4;
inline constexpr int kAudioDim = 13;
inline constexpr int kMouthDim = 10;
inline constexpr int kAudioWindow = 200;
inline constexpr int kVideoWindow = 50;

}  // namespace lipsync
