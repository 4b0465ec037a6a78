#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopspec/dyson.hpp"
#include "hopspec/spectrum.hpp"

namespace hopspec::csvio {

// Curve points, then endpoints/poles/isolated points.  Schema:
//   re,im,theta,word,branch
// with branch either a 0-based branch index or one of the tokens
// "endpoint" / "pole" / "isolated" (theta empty for those rows).
void write_word_spectrum(std::ostream& os, const WordSpectrum& ws);

// Eigenvalue cloud.  Schema: re,im,seed,n,source — seed is empty for
// deterministic sources.
void write_eigenvalues(std::ostream& os, const std::vector<Complex>& eigs,
                       std::optional<std::uint64_t> seed, std::size_t n,
                       const std::string& source);

// Raster rows in grid order (iy outer, ix inner).  Schema:
//   re,im,gamma,escape_fraction
// gamma is empty where every sample was excluded.
void write_escape_map(std::ostream& os, const EscapeMap& map);

// Reads any of the schemas above back as a point cloud: finds the re/im
// columns by header name and skips rows without finite numbers there.
std::vector<Complex> read_points(std::istream& is);

}  // namespace hopspec::csvio
