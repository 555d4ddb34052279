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

// Minimal RIFF/WAVE reader and writer for mono PCM and IEEE-float audio.

#ifndef POLARITY_WAV_IO_H_
#define POLARITY_WAV_IO_H_

#include <filesystem>

#include "polarity/signal.h"

namespace polarity::harness {

// Reads a mono WAV file (8/16/24/32-bit PCM or 32/64-bit float, plain or
// WAVE_FORMAT_EXTENSIBLE).  PCM samples are scaled by 1 / 2^(bits-1).
// Throws IoError, with the path in the message, for missing, corrupt or
// multichannel files.
Signal LoadWav(const std::filesystem::path& path);

enum class WavEncoding { kPcm16, kFloat32 };

// Writes a mono WAV file.  PCM16 rounds x * 32768 and saturates.
void SaveWav(const std::filesystem::path& path, const Signal& s,
             WavEncoding encoding = WavEncoding::kPcm16);

}  // namespace polarity::harness

#endif  // POLARITY_WAV_IO_H_
