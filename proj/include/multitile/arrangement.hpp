#pragma once

// Face-by-face evaluation of the covering function of a finite family of
// polygons inside a convex region.
//
// The region is cut into vertical slabs at every x-coordinate where an edge
// starts, ends or crosses another edge (region edges included). Inside a slab
// no two edges cross, so the edges met by the slab's middle vertical line cut
// it into trapezoids on which the covering number is constant.

#include <cstdint>
#include <functional>
#include <vector>

#include "multitile/geometry.hpp"

namespace multitile {

struct Face {
  PlaneVector sample;  // strictly inside the face
  std::int64_t count = 0;
  FieldElement area;                 // area of the trapezoid
  std::vector<PlaneVector> outline;  // counter-clockwise corners, when requested
};

struct ScanStats {
  std::size_t segments = 0;
  std::size_t slabs = 0;
  std::size_t faces = 0;
};

// `region` is a convex polygon in counter-clockwise order. Every polygon of
// `translates` meeting the region must be present. `visit` returns false to
// stop the scan early.
ScanStats scan_faces(const std::vector<PlaneVector>& region,
                     const std::vector<Polygon>& translates, bool with_outline,
                     const std::function<bool(const Face&)>& visit);

// Number of polygons whose interior contains p; throws BoundaryError when p
// lies on some polygon boundary.
std::int64_t count_containing(const std::vector<Polygon>& polygons, const PlaneVector& p);

}  // namespace multitile
