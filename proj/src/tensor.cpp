#include "pansharp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pansharp/errors.hpp"

namespace pansharp {

ImageTensor::ImageTensor(int c, int h, int w, float fill)
    : channels(c), height(h), width(w) {
  if (c <= 0 || h <= 0 || w <= 0)
    throw ShapeError("ImageTensor dims must be positive, got " + std::to_string(c) + "x" +
                     std::to_string(h) + "x" + std::to_string(w));
  data.assign(static_cast<std::size_t>(c) * h * w, fill);
}

Kernel::Kernel(int k, std::vector<float> w) : size(k), weights(std::move(w)) {
  if (k <= 0 || k % 2 == 0)
    throw InvalidKernel("kernel size must be odd and positive, got " + std::to_string(k));
  if (weights.size() != static_cast<std::size_t>(k) * k)
    throw InvalidKernel("kernel weight count does not match size");
}

float Kernel::sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0f);
}

const char* to_string(InterpMethod m) {
  switch (m) {
    case InterpMethod::Nearest: return "nearest";
    case InterpMethod::Bilinear: return "bilinear";
    case InterpMethod::Bicubic: return "bicubic";
    case InterpMethod::Area: return "area";
  }
  return "?";
}

const char* to_string(BorderMode m) {
  switch (m) {
    case BorderMode::Replicate: return "replicate";
    case BorderMode::Reflect: return "reflect";
    case BorderMode::Zero: return "zero";
  }
  return "?";
}

namespace {

inline int reflect_index(int i, int n) {
  // abc|cba mirroring; n == 1 collapses to 0.
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

inline int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

inline float sample_border(const float* p, int h, int w, int y, int x, BorderMode border) {
  switch (border) {
    case BorderMode::Replicate:
      return p[static_cast<std::size_t>(clamp_index(y, h)) * w + clamp_index(x, w)];
    case BorderMode::Reflect:
      return p[static_cast<std::size_t>(reflect_index(y, h)) * w + reflect_index(x, w)];
    case BorderMode::Zero:
      if (y < 0 || y >= h || x < 0 || x >= w) return 0.0f;
      return p[static_cast<std::size_t>(y) * w + x];
  }
  return 0.0f;
}

}  // namespace

ImageTensor convolve2d(const ImageTensor& img, const Kernel& kernel, BorderMode border) {
  if (kernel.size % 2 == 0 || kernel.size <= 0)
    throw InvalidKernel("convolve2d requires an odd kernel size");
  const int k = kernel.size;
  const int r = k / 2;
  const int h = img.height, w = img.width;
  ImageTensor out(img.channels, h, w);
  for (int c = 0; c < img.channels; ++c) {
    const float* src = img.plane(c);
    float* dst = out.plane(c);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        // true convolution: output(y,x) = sum K(i,j) * in(y + r - i, x + r - j)
        for (int i = 0; i < k; ++i) {
          const int sy = y + r - i;
          for (int j = 0; j < k; ++j) {
            acc += static_cast<double>(kernel.at(i, j)) *
                   sample_border(src, h, w, sy, x + r - j, border);
          }
        }
        dst[static_cast<std::size_t>(y) * w + x] = static_cast<float>(acc);
      }
    }
  }
  return out;
}

namespace {

// Catmull-Rom cubic weight, a = -0.5.
inline double cubic_weight(double t) {
  constexpr double a = -0.5;
  t = std::abs(t);
  if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
  return 0.0;
}

}  // namespace

ImageTensor resample(const ImageTensor& img, int out_h, int out_w, InterpMethod method) {
  if (out_h < 1 || out_w < 1)
    throw ShapeError("resample target dims must be >= 1");
  const int in_h = img.height, in_w = img.width;
  ImageTensor out(img.channels, out_h, out_w);
  const double sy = static_cast<double>(in_h) / out_h;
  const double sx = static_cast<double>(in_w) / out_w;

  for (int c = 0; c < img.channels; ++c) {
    const float* src = img.plane(c);
    float* dst = out.plane(c);
    auto pix = [&](int y, int x) -> double {
      return src[static_cast<std::size_t>(clamp_index(y, in_h)) * in_w + clamp_index(x, in_w)];
    };
    for (int oy = 0; oy < out_h; ++oy) {
      for (int ox = 0; ox < out_w; ++ox) {
        double v = 0.0;
        switch (method) {
          case InterpMethod::Nearest: {
            const int iy = clamp_index(static_cast<int>(std::floor((oy + 0.5) * sy)), in_h);
            const int ix = clamp_index(static_cast<int>(std::floor((ox + 0.5) * sx)), in_w);
            v = pix(iy, ix);
            break;
          }
          case InterpMethod::Bilinear: {
            const double fy = (oy + 0.5) * sy - 0.5;
            const double fx = (ox + 0.5) * sx - 0.5;
            const int y0 = static_cast<int>(std::floor(fy));
            const int x0 = static_cast<int>(std::floor(fx));
            const double wy = fy - y0, wx = fx - x0;
            v = (1 - wy) * ((1 - wx) * pix(y0, x0) + wx * pix(y0, x0 + 1)) +
                wy * ((1 - wx) * pix(y0 + 1, x0) + wx * pix(y0 + 1, x0 + 1));
            break;
          }
          case InterpMethod::Bicubic: {
            const double fy = (oy + 0.5) * sy - 0.5;
            const double fx = (ox + 0.5) * sx - 0.5;
            const int y0 = static_cast<int>(std::floor(fy));
            const int x0 = static_cast<int>(std::floor(fx));
            const double ty = fy - y0, tx = fx - x0;
            for (int i = -1; i <= 2; ++i) {
              const double wy = cubic_weight(i - ty);
              if (wy == 0.0) continue;
              double row = 0.0;
              for (int j = -1; j <= 2; ++j) row += cubic_weight(j - tx) * pix(y0 + i, x0 + j);
              v += wy * row;
            }
            break;
          }
          case InterpMethod::Area: {
            // Mean over the exact mapped source box [oy*sy,(oy+1)*sy) x [ox*sx,(ox+1)*sx)
            // with fractional row/column coverage.
            const double y_lo = oy * sy, y_hi = (oy + 1) * sy;
            const double x_lo = ox * sx, x_hi = (ox + 1) * sx;
            double acc = 0.0, area = 0.0;
            const int iy0 = static_cast<int>(std::floor(y_lo));
            const int iy1 = std::min(in_h - 1, static_cast<int>(std::ceil(y_hi)) - 1);
            const int ix0 = static_cast<int>(std::floor(x_lo));
            const int ix1 = std::min(in_w - 1, static_cast<int>(std::ceil(x_hi)) - 1);
            for (int iy = iy0; iy <= iy1; ++iy) {
              const double cov_y = std::min<double>(iy + 1, y_hi) - std::max<double>(iy, y_lo);
              if (cov_y <= 0) continue;
              for (int ix = ix0; ix <= ix1; ++ix) {
                const double cov_x = std::min<double>(ix + 1, x_hi) - std::max<double>(ix, x_lo);
                if (cov_x <= 0) continue;
                acc += cov_y * cov_x * pix(iy, ix);
                area += cov_y * cov_x;
              }
            }
            v = area > 0 ? acc / area : pix(iy0, ix0);
            break;
          }
        }
        dst[static_cast<std::size_t>(oy) * out_w + ox] =
            static_cast<float>(std::min(1.0, std::max(0.0, v)));
      }
    }
  }
  return out;
}

ImageTensor median_filter(const ImageTensor& img, int k) {
  if (k <= 0 || k % 2 == 0)
    throw InvalidKernel("median_filter requires odd k, got " + std::to_string(k));
  const int r = k / 2;
  const int h = img.height, w = img.width;
  ImageTensor out(img.channels, h, w);
  std::vector<float> window(static_cast<std::size_t>(k) * k);
  for (int c = 0; c < img.channels; ++c) {
    const float* src = img.plane(c);
    float* dst = out.plane(c);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        std::size_t n = 0;
        for (int i = -r; i <= r; ++i)
          for (int j = -r; j <= r; ++j)
            window[n++] = src[static_cast<std::size_t>(clamp_index(y + i, h)) * w + clamp_index(x + j, w)];
        auto mid = window.begin() + n / 2;
        std::nth_element(window.begin(), mid, window.begin() + n);
        dst[static_cast<std::size_t>(y) * w + x] = *mid;
      }
    }
  }
  return out;
}

void clamp01_inplace(ImageTensor& img) {
  for (float& v : img.data) v = v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v);
}

ImageTensor clamp01(ImageTensor img) {
  clamp01_inplace(img);
  return img;
}

float min_value(const ImageTensor& img) {
  return *std::min_element(img.data.begin(), img.data.end());
}

float max_value(const ImageTensor& img) {
  return *std::max_element(img.data.begin(), img.data.end());
}

double mean_value(const ImageTensor& img) {
  double s = 0.0;
  for (float v : img.data) s += v;
  return img.data.empty() ? 0.0 : s / static_cast<double>(img.data.size());
}

}  // namespace pansharp
