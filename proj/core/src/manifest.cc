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

#include "polarity/manifest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "polarity/errors.h"

namespace polarity::harness {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view ToString(RecordingKind k) {
  return k == RecordingKind::kEgg ? "egg" : "speech";
}

CorpusManifest ParseManifest(std::string_view text, const std::filesystem::path& base_dir,
                             std::string name) {
  CorpusManifest manifest;
  manifest.name = std::move(name);
  std::set<std::filesystem::path> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const std::string where = "manifest line " + std::to_string(line_no) + ": ";
    // Split from the right so paths may contain commas.
    const auto c2 = line.rfind(',');
    const auto c1 = c2 == std::string_view::npos || c2 == 0 ? std::string_view::npos
                                                            : line.rfind(',', c2 - 1);
    if (c1 == std::string_view::npos) {
      throw DataError(where + "expected <path>,<positive|negative>,<speech|egg>");
    }
    const std::string_view path_text = Trim(line.substr(0, c1));
    const std::string_view pol_text = Trim(line.substr(c1 + 1, c2 - c1 - 1));
    const std::string_view kind_text = Trim(line.substr(c2 + 1));
    if (path_text.empty()) throw DataError(where + "empty path");

    ManifestEntry entry;
    const auto pol = ParsePolarity(pol_text);
    if (!pol) throw DataError(where + "unknown polarity '" + std::string(pol_text) + "'");
    entry.true_polarity = *pol;
    if (kind_text == "speech") {
      entry.kind = RecordingKind::kSpeech;
    } else if (kind_text == "egg") {
      entry.kind = RecordingKind::kEgg;
    } else {
      throw DataError(where + "unknown kind '" + std::string(kind_text) + "'");
    }
    std::filesystem::path p{std::string(path_text)};
    if (p.is_relative()) p = base_dir / p;
    entry.path = p.lexically_normal();
    if (!seen.insert(entry.path).second) {
      throw DataError(where + "duplicate path " + entry.path.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest LoadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open manifest");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseManifest(buf.str(), path.parent_path(), path.stem().string());
}

}  // namespace polarity::harness
