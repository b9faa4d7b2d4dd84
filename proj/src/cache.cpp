#include "dimdatum/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace dimdatum {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

CharCache::CharCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(*dir_); }

std::string CharCache::key(const std::string& group, const Weight& hw) {
  return group + "__" + weight_str(hw);
}

fs::path CharCache::file_for(const std::string& k) const {
  std::string name = k;
  for (char& c : name)
    if (c == ',') c = '_';
  return *dir_ / (name + ".json");
}

std::optional<CharacterElement> CharCache::get(const std::string& group, const Weight& hw) {
  std::string k = key(group, hw);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mem_.find(k);
    if (it != mem_.end()) return it->second;
  }
  if (!dir_) return std::nullopt;
  fs::path p = file_for(k);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  ordered_json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != 1) return std::nullopt;
    CharacterElement ch;
    bool first = true;
    for (const auto& row : j.at("weights")) {
      Weight w;
      for (size_t i = 0; i + 1 < row.size(); ++i) w.push_back(row[i].get<int>());
      if (first) {
        ch.rank = (int)w.size();
        first = false;
      }
      ch.add_term(w, Rational(row.back().get<long long>()));
    }
    if (first) return std::nullopt;  // empty character file is malformed
    std::lock_guard<std::mutex> lock(mu_);
    mem_.emplace(k, ch);
    return ch;
  } catch (...) {
    return std::nullopt;
  }
}

void CharCache::put(const std::string& group, const Weight& hw, const CharacterElement& ch) {
  std::string k = key(group, hw);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!mem_.emplace(k, ch).second) return;  // already stored
  }
  if (!dir_) return;
  ordered_json j;
  j["version"] = 1;
  j["group"] = group;
  j["hw"] = hw;
  ordered_json rows = ordered_json::array();
  for (const auto& [w, c] : ch.terms) {
    if (!c.is_integer()) return;  // only integral characters are persisted
    ordered_json row = ordered_json::array();
    for (int v : w) row.push_back(v);
    row.push_back(c.num());
    rows.push_back(row);
  }
  j["weights"] = rows;
  std::lock_guard<std::mutex> lock(mu_);
  fs::path p = file_for(k);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) fs::remove(tmp, ec);
}

CharCache::Stats CharCache::disk_stats() const {
  Stats s;
  if (!dir_ || !fs::exists(*dir_)) return s;
  for (const auto& entry : fs::directory_iterator(*dir_)) {
    if (!entry.is_regular_file()) continue;
    ++s.files;
    s.bytes += entry.file_size();
  }
  return s;
}

void CharCache::clear_disk() {
  if (!dir_ || !fs::exists(*dir_)) return;
  for (const auto& entry : fs::directory_iterator(*dir_))
    if (entry.is_regular_file()) fs::remove(entry.path());
}

fs::path CharCache::default_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "dimdatum";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "dimdatum";
  return fs::temp_directory_path() / "dimdatum-cache";
}

}  // namespace dimdatum
