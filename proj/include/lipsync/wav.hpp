#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lipsync {

struct WavAudio {
  std::vector<int16_t> samples;
  int sample_rate = 0;
};

// Reads a RIFF/WAVE file containing mono 16-bit PCM. Anything else
// (stereo, float, compressed) is rejected.
WavAudio read_wav_mono16(const std::string& path);

void write_wav_mono16(const std::string& path, const WavAudio& audio);

}  // namespace lipsync
