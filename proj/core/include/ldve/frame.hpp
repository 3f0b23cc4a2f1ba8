#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ldve/error.hpp"

namespace ldve {

enum class ChromaLayout { kMono, kC420 };
enum class SampleScale { kUnit, kEightBit };

inline double scale_max(SampleScale s) {
  return s == SampleScale::kUnit ? 1.0 : 255.0;
}

const char* to_string(ChromaLayout layout);
const char* to_string(SampleScale scale);

// One planar grid of real-valued samples, row-major.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t sample_count() const { return samples_.size(); }

  double at(int x, int y) const { return samples_[static_cast<std::size_t>(y) * width_ + x]; }
  double& at(int x, int y) { return samples_[static_cast<std::size_t>(y) * width_ + x]; }

  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }

  std::span<const double> row(int y) const {
    return {samples_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) {
    return {samples_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }

  bool same_shape(const Plane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

// A video frame: luma plane plus, for 4:2:0, two half-resolution chroma
// planes (ceil(w/2) x ceil(h/2)). Samples are kept as real numbers so that
// averaging and loss arithmetic stay exact to floating precision;
// quantization to 8-bit integers happens only when a stream is written.
struct Frame {
  std::vector<Plane> planes;
  ChromaLayout chroma = ChromaLayout::kMono;
  SampleScale scale = SampleScale::kEightBit;

  static Frame make(int width, int height, ChromaLayout layout,
                    SampleScale scale = SampleScale::kEightBit, double fill = 0.0);

  int width() const { return planes.empty() ? 0 : planes[0].width(); }
  int height() const { return planes.empty() ? 0 : planes[0].height(); }
  int plane_count() const { return static_cast<int>(planes.size()); }
  std::size_t sample_count() const;

  bool same_shape(const Frame& other) const;

  // Checks the plane layout invariants; throws shape-mismatch on violation.
  void validate() const;
};

inline int chroma_dim(int luma_dim) { return (luma_dim + 1) / 2; }

// Per-sample weighted sum of equally shaped frames. No clamping.
Frame frame_linear_combine(std::span<const Frame> frames, std::span<const double> weights);
Frame frame_linear_combine(std::span<const Frame* const> frames, std::span<const double> weights);

// Clamps every sample to [0, scale_max].
void clamp_frame(Frame& frame);

// Explicit sample-scale conversion (multiplies or divides by 255).
Frame convert_scale(const Frame& frame, SampleScale target);

// Round half away from zero, then clamp to [0, 255]. The one place where
// real-valued samples become stream bytes.
std::uint8_t quantize_to_byte(double sample);

}  // namespace ldve
