#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "projspec/dynamics.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

enum class Part { re, im };

/// One real parameter of a slice: the real or imaginary part of coordinate
/// `coord`, swept over [min, max].
struct SliceAxis {
  std::size_t coord = 1;
  Part part = Part::re;
  double min = -1;
  double max = 1;
};

/// A 2-real-dimensional slice of P^n in the affine chart z_chart = 1.
/// Coordinates not swept by an axis keep their offset; the swept part of an
/// axis coordinate replaces the offset's part.
struct ChartSlice {
  std::size_t chart = 0;
  SliceAxis x{1, Part::re, -1, 1};
  SliceAxis y{2, Part::re, -1, 1};
  /// One entry per homogeneous coordinate; offsets[chart] is ignored.
  std::vector<Complex> offsets{0, 0, 0};
  std::size_t width = 1;
  std::size_t height = 1;

  /// Throws InvalidInput on a bad chart, axis, range or resolution.
  void validate() const;
};

/// width*height points, row-major (index j*width + i), sampled at pixel
/// centers: x_i = x.min + (i + 1/2)(x.max - x.min)/width, likewise y_j.
std::vector<ProjPoint> make_slice(const ChartSlice& s);

/// Escape counts on a width x height grid, row-major; kBounded marks orbits
/// that stay bounded.
struct EscapeField {
  std::size_t width = 0;
  std::size_t height = 0;
  int maxiter = 0;
  std::vector<int> counts;
};

inline constexpr std::size_t kTileSize = 64;

/// escape_count(tau(p)) for every point, computed on 64x64 tiles by
/// `threads` workers (0 = hardware concurrency). The result does not depend
/// on the worker count. Points must number width*height.
EscapeField escape_field(const std::vector<ProjPoint>& points, std::size_t width,
                         std::size_t height, const EscapeParams& params,
                         unsigned threads = 0);

/// Binary P6 pixmap; bounded pixels black, the rest gray at
/// round(255 min(1, n/maxiter)). Rows are written in field order.
std::string encode_image(const EscapeField& f);
void write_image(const EscapeField& f, const std::filesystem::path& path);

/// %.17g, which round-trips every double.
std::string format_double(double v);

/// CSV with header z0_re,z0_im,z1_re,z1_im,z2_re,z2_im,tau_re,tau_im,value,
/// one row per point of P^2 (coordinates as supplied, tau as "inf,inf" at
/// infinity).
std::string encode_csv(const std::vector<ProjPoint>& points, const std::vector<double>& values);
void write_csv(const std::vector<ProjPoint>& points, const std::vector<double>& values,
               const std::filesystem::path& path);

/// Writes `bytes` to `path`, raising IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace projspec
