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

// Corpus manifests: one "<path>,<positive|negative>,<speech|egg>" line per
// recording, '#' starts a comment.

#ifndef POLARITY_MANIFEST_H_
#define POLARITY_MANIFEST_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/signal.h"

namespace polarity::harness {

enum class RecordingKind { kSpeech, kEgg };

std::string_view ToString(RecordingKind k);

struct ManifestEntry {
  std::filesystem::path path;
  Polarity true_polarity = Polarity::kPositive;
  RecordingKind kind = RecordingKind::kSpeech;
};

struct CorpusManifest {
  std::string name;
  std::vector<ManifestEntry> entries;
};

// Relative paths are resolved against `base_dir`.  Throws DataError (with
// the line number) on malformed lines or duplicate paths.
CorpusManifest ParseManifest(std::string_view text, const std::filesystem::path& base_dir,
                             std::string name);

// Reads and parses a manifest file; the corpus name is the file stem.
// Throws IoError if the file cannot be read.
CorpusManifest LoadManifest(const std::filesystem::path& path);

}  // namespace polarity::harness

#endif  // POLARITY_MANIFEST_H_
