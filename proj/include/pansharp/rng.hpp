#pragma once

#include <cstdint>
#include <vector>

namespace pansharp {

// Deterministic splittable stream: SplitMix64 state advance, with child
// streams derived as finalize(parent_state XOR (purpose_label + index)).
// Identical (seed, labels, draw sequence) gives identical values everywhere.
class RngStream {
 public:
  RngStream() = default;
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Child stream for a (purpose, index) pair; independent of later draws
  // because derivation reads the current state without advancing it.
  RngStream derive(std::uint64_t label, std::uint64_t index = 0) const;

  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi); lo > hi -> InvalidRange
  double normal(double mean = 0.0, double sd = 1.0);  // Box-Muller
  int choice(int n);                       // uniform in [0, n)
  std::vector<int> permutation(int n);     // Fisher-Yates

  std::uint64_t state() const { return state_; }

  // SplitMix64 finalizer (Vigna); also used for label mixing.
  static std::uint64_t finalize(std::uint64_t z);

 private:
  std::uint64_t state_ = 0;
};

// Purpose constants for derive(); arbitrary but fixed for reproducibility.
namespace rng_label {
inline constexpr std::uint64_t kSample = 0x73616d706c650001ULL;
inline constexpr std::uint64_t kMixMatrix = 0x6d69786d61740002ULL;
inline constexpr std::uint64_t kPanWeights = 0x70616e7765690003ULL;
inline constexpr std::uint64_t kAugment = 0x6175676d656e0004ULL;
inline constexpr std::uint64_t kDegradeMs = 0x646567726d730005ULL;
inline constexpr std::uint64_t kDegradePan = 0x64656770616e0006ULL;
inline constexpr std::uint64_t kNoise = 0x6e6f6973650c0007ULL;
inline constexpr std::uint64_t kModelInit = 0x6d6f64696e690008ULL;
inline constexpr std::uint64_t kEpochShuffle = 0x6570736866660009ULL;
inline constexpr std::uint64_t kScratchInit = 0x736372696e69000aULL;
inline constexpr std::uint64_t kDataset = 0x6461746173651000ULL;
}  // namespace rng_label

}  // namespace pansharp
