// Copyright 2026 The polarity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarity/wav_io.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "polarity/errors.h"

namespace polarity::harness {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

[[noreturn]] void Fail(const std::filesystem::path& path, const std::string& what) {
  throw IoError(path.string() + ": " + what);
}

std::uint32_t ReadLe(const unsigned char* p, int bytes) {
  std::uint32_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

void WriteLe(std::ostream& out, std::uint32_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

struct Format {
  std::uint16_t tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
};

}  // namespace

Signal LoadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(path, "cannot open file");
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    Fail(path, "not a RIFF/WAVE file");
  }

  Format fmt;
  bool have_fmt = false;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = ReadLe(chunk + 4, 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > avail) Fail(path, "truncated fmt chunk");
      const unsigned char* f = bytes.data() + body;
      fmt.tag = static_cast<std::uint16_t>(ReadLe(f, 2));
      fmt.channels = static_cast<std::uint16_t>(ReadLe(f + 2, 2));
      fmt.rate = ReadLe(f + 4, 4);
      fmt.block_align = static_cast<std::uint16_t>(ReadLe(f + 12, 2));
      fmt.bits = static_cast<std::uint16_t>(ReadLe(f + 14, 2));
      if (fmt.tag == kFormatExtensible) {
        if (size < 40) Fail(path, "truncated WAVE_FORMAT_EXTENSIBLE header");
        fmt.tag = static_cast<std::uint16_t>(ReadLe(f + 24, 2));
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      // Streaming writers sometimes leave the size as 0 or 0xFFFFFFFF.
      if (size == 0 || size == 0xFFFFFFFFu) {
        data_size = avail;
      } else if (size > avail) {
        Fail(path, "truncated data chunk (" + std::to_string(avail) + " of " +
                       std::to_string(size) + " bytes)");
      } else {
        data_size = size;
      }
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) Fail(path, "missing fmt chunk");
  if (data == nullptr) Fail(path, "missing data chunk");
  if (fmt.channels != 1) {
    Fail(path, "multichannel audio (" + std::to_string(fmt.channels) +
                   " channels) is not supported; expected mono");
  }
  if (fmt.rate == 0) Fail(path, "zero sample rate");

  const bool pcm = fmt.tag == kFormatPcm &&
                   (fmt.bits == 8 || fmt.bits == 16 || fmt.bits == 24 || fmt.bits == 32);
  const bool flt = fmt.tag == kFormatFloat && (fmt.bits == 32 || fmt.bits == 64);
  if (!pcm && !flt) {
    Fail(path, "unsupported encoding (format tag " + std::to_string(fmt.tag) + ", " +
                   std::to_string(fmt.bits) + " bits)");
  }
  const std::size_t width = fmt.bits / 8;
  const std::size_t count = data_size / width;

  Signal s;
  s.sample_rate_hz = static_cast<int>(fmt.rate);
  s.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned char* p = data + i * width;
    double v = 0.0;
    if (flt && fmt.bits == 32) {
      const std::uint32_t raw = ReadLe(p, 4);
      float f;
      std::memcpy(&f, &raw, 4);
      v = f;
    } else if (flt) {
      const std::uint64_t raw = static_cast<std::uint64_t>(ReadLe(p, 4)) |
                                (static_cast<std::uint64_t>(ReadLe(p + 4, 4)) << 32);
      std::memcpy(&v, &raw, 8);
    } else if (fmt.bits == 8) {
      v = (static_cast<double>(p[0]) - 128.0) / 128.0;  // unsigned
    } else {
      const std::uint32_t raw = ReadLe(p, static_cast<int>(width));
      const int shift = 32 - fmt.bits;
      const auto value = static_cast<std::int32_t>(raw << shift) >> shift;
      v = static_cast<double>(value) / std::ldexp(1.0, fmt.bits - 1);
    }
    if (!std::isfinite(v)) Fail(path, "non-finite sample at index " + std::to_string(i));
    s.samples[i] = v;
  }
  if (s.samples.empty()) Fail(path, "no audio samples");
  return s;
}

void SaveWav(const std::filesystem::path& path, const Signal& s, WavEncoding encoding) {
  ValidateSignal(s, "wav output");
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(path, "cannot open file for writing");

  const std::uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : 32;
  const std::uint16_t tag = encoding == WavEncoding::kPcm16 ? kFormatPcm : kFormatFloat;
  const std::uint32_t block = bits / 8;
  const auto data_size = static_cast<std::uint32_t>(s.size() * block);
  const auto rate = static_cast<std::uint32_t>(s.sample_rate_hz);

  out.write("RIFF", 4);
  WriteLe(out, 36 + data_size, 4);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  WriteLe(out, 16, 4);
  WriteLe(out, tag, 2);
  WriteLe(out, 1, 2);
  WriteLe(out, rate, 4);
  WriteLe(out, rate * block, 4);
  WriteLe(out, block, 2);
  WriteLe(out, bits, 2);
  out.write("data", 4);
  WriteLe(out, data_size, 4);
  for (double v : s.samples) {
    if (encoding == WavEncoding::kPcm16) {
      const double q = std::clamp(std::round(v * 32768.0), -32768.0, 32767.0);
      WriteLe(out, static_cast<std::uint32_t>(static_cast<std::int32_t>(q)), 2);
    } else {
      const float f = static_cast<float>(v);
      std::uint32_t raw;
      std::memcpy(&raw, &f, 4);
      WriteLe(out, raw, 4);
    }
  }
  if (!out) Fail(path, "write failed");
}

}  // namespace polarity::harness
