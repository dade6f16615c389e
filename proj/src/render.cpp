#include "projspec/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include "projspec/errors.hpp"

namespace projspec {
namespace {

void check_axis(const SliceAxis& a, const ChartSlice& s, const char* name) {
  if (a.coord >= s.offsets.size()) {
    throw InvalidInput(std::string("slice axis ") + name + ": coordinate out of range");
  }
  if (a.coord == s.chart) {
    throw InvalidInput(std::string("slice axis ") + name + ": cannot vary the chart coordinate");
  }
  if (!std::isfinite(a.min) || !std::isfinite(a.max) || !(a.min < a.max)) {
    throw InvalidInput(std::string("slice axis ") + name + ": range must be finite with min < max");
  }
}

void set_part(WideComplex& c, Part part, long double v) {
  if (part == Part::re) {
    c.real(v);
  } else {
    c.imag(v);
  }
}

long double pixel_center(const SliceAxis& a, std::size_t k, std::size_t n) {
  const long double step = (static_cast<long double>(a.max) - a.min) / n;
  return a.min + (k + 0.5L) * step;
}

}  // namespace

void ChartSlice::validate() const {
  if (offsets.size() < 2) throw InvalidInput("slice needs at least two homogeneous coordinates");
  if (chart >= offsets.size()) throw InvalidInput("slice chart index out of range");
  if (width == 0 || height == 0) throw InvalidInput("slice resolution must be at least 1x1");
  check_axis(x, *this, "x");
  check_axis(y, *this, "y");
  if (x.coord == y.coord && x.part == y.part) {
    throw InvalidInput("slice axes must vary different parameters");
  }
  for (const Complex& c : offsets) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidInput("slice offsets must be finite");
    }
  }
}

std::vector<ProjPoint> make_slice(const ChartSlice& s) {
  s.validate();
  std::vector<WideComplex> base(s.offsets.begin(), s.offsets.end());
  base[s.chart] = 1;
  std::vector<ProjPoint> out;
  out.reserve(s.width * s.height);
  for (std::size_t j = 0; j < s.height; ++j) {
    const long double yv = pixel_center(s.y, j, s.height);
    for (std::size_t i = 0; i < s.width; ++i) {
      std::vector<WideComplex> c = base;
      set_part(c[s.x.coord], s.x.part, pixel_center(s.x, i, s.width));
      set_part(c[s.y.coord], s.y.part, yv);
      out.emplace_back(std::move(c));
    }
  }
  return out;
}

EscapeField escape_field(const std::vector<ProjPoint>& points, std::size_t width,
                         std::size_t height, const EscapeParams& params, unsigned threads) {
  if (points.size() != width * height) {
    throw DimensionError("escape_field: expected " + std::to_string(width * height) +
                         " points, got " + std::to_string(points.size()));
  }
  EscapeField f{width, height, params.maxiter, std::vector<int>(points.size(), kBounded)};
  const std::size_t tiles_x = (width + kTileSize - 1) / kTileSize;
  const std::size_t tiles_y = (height + kTileSize - 1) / kTileSize;
  const std::size_t tiles = tiles_x * tiles_y;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tiles; t = next++) {
      const std::size_t x0 = (t % tiles_x) * kTileSize, y0 = (t / tiles_x) * kTileSize;
      const std::size_t x1 = std::min(x0 + kTileSize, width), y1 = std::min(y0 + kTileSize, height);
      for (std::size_t j = y0; j < y1; ++j) {
        for (std::size_t i = x0; i < x1; ++i) {
          const std::size_t k = j * width + i;
          f.counts[k] = escape_count(tau(points[k]), params);
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tiles, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return f;
}

std::string encode_image(const EscapeField& f) {
  if (f.counts.size() != f.width * f.height) throw DimensionError("encode_image: field size mismatch");
  std::string out = "P6\n" + std::to_string(f.width) + " " + std::to_string(f.height) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + 3 * f.counts.size());
  const double maxiter = std::max(f.maxiter, 1);
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    unsigned char level = 0;
    if (f.counts[k] != kBounded) {
      level = static_cast<unsigned char>(std::lround(255.0 * std::min(1.0, f.counts[k] / maxiter)));
    }
    out[header + 3 * k] = out[header + 3 * k + 1] = out[header + 3 * k + 2] =
        static_cast<char>(level);
  }
  return out;
}

void write_image(const EscapeField& f, const std::filesystem::path& path) {
  write_file(path, encode_image(f));
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string encode_csv(const std::vector<ProjPoint>& points, const std::vector<double>& values) {
  if (points.size() != values.size()) {
    throw DimensionError("write_csv: " + std::to_string(points.size()) + " points but " +
                         std::to_string(values.size()) + " values");
  }
  std::string out = "z0_re,z0_im,z1_re,z1_im,z2_re,z2_im,tau_re,tau_im,value\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    const ProjPoint& p = points[k];
    if (p.size() != 3) throw DimensionError("write_csv: points must lie in P^2");
    for (std::size_t c = 0; c < 3; ++c) {
      out += format_double(static_cast<double>(p[c].real())) + ',';
      out += format_double(static_cast<double>(p[c].imag())) + ',';
    }
    const ExtendedComplex t = tau(p);
    if (t.is_infinite()) {
      out += "inf,inf,";
    } else {
      out += format_double(static_cast<double>(t.value().real())) + ',';
      out += format_double(static_cast<double>(t.value().imag())) + ',';
    }
    out += format_double(values[k]) + '\n';
  }
  return out;
}

void write_csv(const std::vector<ProjPoint>& points, const std::vector<double>& values,
               const std::filesystem::path& path) {
  write_file(path, encode_csv(points, values));
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace projspec
