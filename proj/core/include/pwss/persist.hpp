#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>

#include "pwss/model.hpp"

namespace pwss {

// .pwss model file, version 1. All integers little-endian, reals IEEE-754
// binary64 little-endian.
//
//   offset  size  field
//        0     4  magic "PWSS"
//        4     4  version (u32) = 1
//        8     3  classifier tag, space padded ("LR ", "NB ", "DT ", "RF ", "XGB")
//       11     1  reserved, 0
//       12     8  payload byte count (u64)
//       20     -  payload
//
// Payload starts with the feature-schema checksum (u64) and the scaler
// (u32 dim, dim means, dim stdevs), followed by the tag-specific parameter
// encoding. Trees are stored in preorder with explicit leaf markers.
inline constexpr std::array<unsigned char, 4> kModelMagic = {'P', 'W', 'S', 'S'};
inline constexpr std::uint32_t kModelVersion = 1;
inline constexpr std::size_t kModelHeaderSize = 20;

/// Serializes the model; byte output is a pure function of the parameters.
/// Returns the number of bytes written. Sink failure is an io error.
std::size_t save(const TrainedModel& model, std::ostream& sink);

/// Reconstructs a model, rejecting bad magic, unknown version or tag,
/// truncated or oversized payloads, and a feature-schema checksum that
/// does not match this build — each as a distinct ModelFileError.
std::unique_ptr<TrainedModel> load(std::istream& source);

void save_file(const TrainedModel& model, const std::filesystem::path& path);
std::unique_ptr<TrainedModel> load_file(const std::filesystem::path& path);

}  // namespace pwss
