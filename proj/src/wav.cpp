#include "lipsync/wav.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace lipsync {

namespace {

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<char*>(b), 4);
}

void write_u16(std::ostream& out, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff)};
  out.write(reinterpret_cast<char*>(b), 2);
}

}  // namespace

WavAudio read_wav_mono16(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) throw std::runtime_error(path + ": not a RIFF file");
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) throw std::runtime_error(path + ": not a WAVE file");

  WavAudio audio;
  bool have_fmt = false;
  uint16_t channels = 0, bits = 0, format = 0;
  while (in.read(tag, 4)) {
    uint32_t size = read_u32(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_u16(in);
      channels = read_u16(in);
      audio.sample_rate = static_cast<int>(read_u32(in));
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (size > 16) in.seekg(size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error(path + ": data chunk before fmt chunk");
      if (format != 1) throw std::runtime_error(path + ": only PCM wav supported");
      if (bits != 16) throw std::runtime_error(path + ": only 16-bit wav supported");
      if (channels != 1) throw std::runtime_error(path + ": audio must be mono");
      size_t n = size / 2;
      audio.samples.resize(n);
      in.read(reinterpret_cast<char*>(audio.samples.data()), static_cast<std::streamsize>(n * 2));
      if (!in) throw std::runtime_error(path + ": truncated data chunk");
      return audio;
    } else {
      in.seekg(size + (size & 1), std::ios::cur);
    }
  }
  throw std::runtime_error(path + ": no data chunk");
}

void write_wav_mono16(const std::string& path, const WavAudio& audio) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  uint32_t data_size = static_cast<uint32_t>(audio.samples.size() * 2);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<uint32_t>(audio.sample_rate));
  write_u32(out, static_cast<uint32_t>(audio.sample_rate * 2));
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_size);
  out.write(reinterpret_cast<const char*>(audio.samples.data()), data_size);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace lipsync
