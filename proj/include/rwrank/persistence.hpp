#pragma once

#include <filesystem>

#include "rwrank/tpa.hpp"

namespace rwrank {

// On-disk artifact layout, all little-endian:
//   magic "TPA1" (4 bytes)
//   format version      u32
//   node count          u64
//   restart probability f64
//   tolerance           f64
//   stranger start (T)  u32
//   graph fingerprint   u64
//   scores              n x f64
//   CRC-32 of all prior bytes  u32
// Total size: 48 + 8n bytes.
inline constexpr std::uint32_t kArtifactFormatVersion = 1;

void save_artifact(const StrangerArtifact& artifact, const std::filesystem::path& path);

// Validates magic, version, length, and checksum before returning the
// artifact; throws std::runtime_error describing the first failure.
StrangerArtifact load_artifact(const std::filesystem::path& path);

}  // namespace rwrank
