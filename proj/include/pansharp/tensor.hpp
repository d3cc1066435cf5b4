#pragma once

#include <cstddef>
#include <vector>

namespace pansharp {

// C x H x W grid of float32 in nominal range [0,1], channel-major row-major.
// The one carrier type for MS, PAN, GT and predictions.
struct ImageTensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<float> data;

  ImageTensor() = default;
  ImageTensor(int c, int h, int w, float fill = 0.0f);

  float& at(int c, int y, int x) { return data[(static_cast<std::size_t>(c) * height + y) * width + x]; }
  float at(int c, int y, int x) const { return data[(static_cast<std::size_t>(c) * height + y) * width + x]; }

  float* plane(int c) { return data.data() + static_cast<std::size_t>(c) * height * width; }
  const float* plane(int c) const { return data.data() + static_cast<std::size_t>(c) * height * width; }

  std::size_t size() const { return data.size(); }
  std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }
  bool same_shape(const ImageTensor& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }
};

// Square k x k filter, k odd. Smoothing kernels sum to 1, high-pass to 0.
struct Kernel {
  int size = 0;
  std::vector<float> weights;  // row-major k*k

  Kernel() = default;
  Kernel(int k, std::vector<float> w);

  float at(int y, int x) const { return weights[static_cast<std::size_t>(y) * size + x]; }
  float sum() const;
};

enum class BorderMode { Replicate, Reflect, Zero };
enum class InterpMethod { Nearest, Bilinear, Bicubic, Area };

const char* to_string(InterpMethod m);
const char* to_string(BorderMode m);

// True 2-D convolution (kernel flipped), each channel independently.
// No clamping: the linear path stays linear; callers clamp between stages.
ImageTensor convolve2d(const ImageTensor& img, const Kernel& kernel, BorderMode border = BorderMode::Replicate);

// Resamples to out_h x out_w with align-corners-false pixel-center mapping.
// Bicubic uses Catmull-Rom weights (a = -0.5); Area averages the mapped
// source box with fractional coverage. Output clamped to [0,1].
ImageTensor resample(const ImageTensor& img, int out_h, int out_w, InterpMethod method);

// Per-channel k x k spatial median, replicate border. k in {3,5,7}.
ImageTensor median_filter(const ImageTensor& img, int k);

// Elementwise max(0, min(1, x)).
ImageTensor clamp01(ImageTensor img);
void clamp01_inplace(ImageTensor& img);

float min_value(const ImageTensor& img);
float max_value(const ImageTensor& img);
double mean_value(const ImageTensor& img);

}  // namespace pansharp
