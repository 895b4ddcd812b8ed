#pragma once

// Memoised Weyl lattices, optionally persisted as JSON records under a
// directory (FORMS_CACHE_DIR by default).

#include <compare>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "invforms/lattice.hpp"

namespace invforms {

enum class LatticeFamily { C, A };

/// C: wedge^k for Sp_{2l} (param = l). A: wedge^k (x) wedge^k* for SL_n (param = n).
struct LatticeKey {
  LatticeFamily family;
  int param;
  int k;
  friend auto operator<=>(const LatticeKey&, const LatticeKey&) = default;
};

inline constexpr int kLatticeCacheFormat = 1;

std::string to_string(const LatticeKey& key);

/// Builds the lattice for a key without any caching.
std::shared_ptr<const LatticeModule> build_lattice(const LatticeKey& key, const LatticeLimits& limits = {});

/// JSON record with the key, format version, basis rows and Gram entries;
/// integers are decimal strings.
std::string serialize_lattice(const LatticeKey& key, const LatticeModule& module);
/// Parses and validates a record (key, format, rank, Gram). Throws InputError.
std::shared_ptr<const LatticeModule> deserialize_lattice(const LatticeKey& key, const std::string& text,
                                                         const LatticeLimits& limits = {});

class LatticeCache {
 public:
  explicit LatticeCache(std::optional<std::filesystem::path> directory = std::nullopt);

  /// Process-wide cache using FORMS_CACHE_DIR when it is set.
  static LatticeCache& global();

  std::shared_ptr<const LatticeModule> get(const LatticeKey& key, const LatticeLimits& limits = {});
  const std::optional<std::filesystem::path>& directory() const noexcept { return directory_; }
  std::filesystem::path record_path(const LatticeKey& key) const;

 private:
  std::optional<std::filesystem::path> directory_;
  std::mutex mutex_;
  std::map<LatticeKey, std::shared_ptr<const LatticeModule>> memory_;
};

}  // namespace invforms
