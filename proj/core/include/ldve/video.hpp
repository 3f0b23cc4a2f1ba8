#pragma once

#include <string>
#include <vector>

#include "ldve/frame.hpp"
#include "ldve/rational.hpp"

namespace ldve {

// An ordered, shape-homogeneous run of frames.
struct VideoSequence {
  std::vector<Frame> frames;
  Rational fps{30, 1};
  std::string name;

  int frame_count() const { return static_cast<int>(frames.size()); }
  int width() const { return frames.empty() ? 0 : frames[0].width(); }
  int height() const { return frames.empty() ? 0 : frames[0].height(); }
  ChromaLayout chroma() const { return frames.empty() ? ChromaLayout::kMono : frames[0].chroma; }
  SampleScale scale() const { return frames.empty() ? SampleScale::kEightBit : frames[0].scale; }

  // First `count` frames (clamped to the available length).
  VideoSequence prefix(int count, const std::string& suffix = "") const;

  // N >= 1, frames share shape / layout / scale.
  void validate() const;
};

VideoSequence convert_scale(const VideoSequence& video, SampleScale target);

// Requires matching frame counts and shapes; throws length-mismatch or
// shape-mismatch naming `what`.
void require_aligned(const VideoSequence& a, const VideoSequence& b, const char* what);

}  // namespace ldve
