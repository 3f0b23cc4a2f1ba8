#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "ldve/frame.hpp"
#include "ldve/video.hpp"

namespace ldve {

// The eight symmetries of the square. Rotations are counter-clockwise;
// kHFlipRot90 means "rotate 90, then mirror horizontally", and so on.
enum class Dihedral : int {
  kIdentity = 0,
  kRot90 = 1,
  kRot180 = 2,
  kRot270 = 3,
  kHFlip = 4,
  kHFlipRot90 = 5,
  kHFlipRot180 = 6,
  kHFlipRot270 = 7,
};

inline constexpr std::array<Dihedral, 8> kAllDihedrals = {
    Dihedral::kIdentity,    Dihedral::kRot90,       Dihedral::kRot180,
    Dihedral::kRot270,      Dihedral::kHFlip,       Dihedral::kHFlipRot90,
    Dihedral::kHFlipRot180, Dihedral::kHFlipRot270,
};

// True for the four elements that swap width and height.
bool swaps_dimensions(Dihedral t);

// The unique element u with apply(apply(f, t), u) == f. Reflections are
// their own inverses; rot90 and rot270 swap.
Dihedral dihedral_inverse(Dihedral t);

// Element equivalent to applying `first`, then `then`.
Dihedral dihedral_compose(Dihedral first, Dihedral then);

std::string_view dihedral_name(Dihedral t);
std::optional<Dihedral> dihedral_from_name(std::string_view name);

Plane apply_dihedral(const Plane& plane, Dihedral t);

// Transforms every plane identically. 90/270-degree elements on 4:2:0
// frames with an odd dimension are rejected (the subsampling grid would
// not survive the rotation).
Frame apply_dihedral(const Frame& frame, Dihedral t);

VideoSequence apply_dihedral(const VideoSequence& video, Dihedral t);

}  // namespace ldve
