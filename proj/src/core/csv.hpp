#pragma once

#include <iosfwd>
#include <string>

#include "core/surface.hpp"

namespace fracdim {

// Surface exchange format. First line is a header comment
//   # a,b,c,d,nx,ny
// followed by nx*ny lines "x,y,value" in row-major order with x varying
// fastest. Values are written with 17 significant digits so a write/read
// round trip is bit-exact.
SampledSurface read_surface_csv(std::istream& in);
SampledSurface read_surface_csv_file(const std::string& path);

void write_surface_csv(std::ostream& out, const SampledSurface& s);
// Writes to a temp file in the same directory, then renames over the target.
void write_surface_csv_file(const std::string& path, const SampledSurface& s);

}  // namespace fracdim
