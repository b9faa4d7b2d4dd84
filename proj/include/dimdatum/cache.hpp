#ifndef DIMDATUM_CACHE_HPP
#define DIMDATUM_CACHE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "dimdatum/character.hpp"

namespace dimdatum {

/// Memo for computed irreducible characters, keyed by (group label, highest
/// weight). Always holds an in-process map; when constructed with a
/// directory it also persists each entry as one JSON document per key,
/// written to a temp file and renamed into place. Concurrent readers are
/// fine; writes are serialized by a mutex.
class CharCache {
public:
  CharCache() = default;
  explicit CharCache(std::filesystem::path dir);

  std::optional<CharacterElement> get(const std::string& group, const Weight& hw);
  void put(const std::string& group, const Weight& hw, const CharacterElement& ch);

  struct Stats {
    size_t files = 0;
    uintmax_t bytes = 0;
  };
  Stats disk_stats() const;
  void clear_disk();
  bool has_dir() const { return dir_.has_value(); }
  std::string dir_string() const { return dir_ ? dir_->string() : ""; }

  /// Platform cache home: $XDG_CACHE_HOME/dimdatum or ~/.cache/dimdatum.
  static std::filesystem::path default_dir();

private:
  std::optional<std::filesystem::path> dir_;
  std::map<std::string, CharacterElement> mem_;
  mutable std::mutex mu_;

  static std::string key(const std::string& group, const Weight& hw);
  std::filesystem::path file_for(const std::string& k) const;
};

}  // namespace dimdatum

#endif
