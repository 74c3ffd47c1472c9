#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sptcrank/series.hpp"

namespace sptcrank::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TableId {
  p_omega,
  spt_omega,
  SC1_m,
  SC5_m,
  SD_C1_m,
  SD_C5_m,
  E2,
  R2,
  crank_table_C1,
  crank_table_C5,
};

const char* table_name(TableId id);
std::optional<TableId> parse_table_id(const std::string& name);
bool takes_m(TableId id);
bool is_bivariate(TableId id);

/// Identifies one cached table. For crank tables m is the largest |m| stored
/// and zwindow equals it.
struct CacheKey {
  TableId id;
  std::optional<int> m;
  std::size_t order = 0;
  std::optional<int> zwindow;

  std::string file_name() const;
  nlohmann::ordered_json params() const;
};

/// Univariate tables have one row. Crank tables hold rows m = 0..max_m.
using Payload = std::vector<QSeries>;

std::string sha256_hex(const std::string& data);
nlohmann::ordered_json encode_coeffs(const CacheKey& key, const Payload& payload);
Payload decode_coeffs(const CacheKey& key, const nlohmann::ordered_json& coeffs);
/// Full cache envelope: id, params, version, checksum, coeffs.
nlohmann::ordered_json make_envelope(const CacheKey& key, const Payload& payload);

struct ListedEntry {
  std::string file;
  std::string id;
  nlohmann::ordered_json params;
  std::string version;
  bool checksum_ok = false;
};

class Cache {
 public:
  Cache(std::filesystem::path dir, std::ostream& log) : dir_(std::move(dir)), log_(&log) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Returns nothing when absent, from another version, or corrupt.
  std::optional<Payload> load(const CacheKey& key) const;
  /// Writes to a temporary file in the same directory, then renames.
  void store(const CacheKey& key, const Payload& payload) const;
  std::vector<ListedEntry> list() const;
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
  std::ostream* log_;
};

}  // namespace sptcrank::cli
