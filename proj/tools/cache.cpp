#include "cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sptcrank/errors.hpp"

namespace sptcrank::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<TableId, const char*>, 10> kNames{{
    {TableId::p_omega, "p_omega"},
    {TableId::spt_omega, "spt_omega"},
    {TableId::SC1_m, "SC1_m"},
    {TableId::SC5_m, "SC5_m"},
    {TableId::SD_C1_m, "SD_C1_m"},
    {TableId::SD_C5_m, "SD_C5_m"},
    {TableId::E2, "E2"},
    {TableId::R2, "R2"},
    {TableId::crank_table_C1, "crank_table_C1"},
    {TableId::crank_table_C5, "crank_table_C5"},
}};

json encode_row(const QSeries& row) {
  json out = json::array();
  for (const auto& c : row.coeffs()) out.push_back(c.get_str());
  return out;
}

QSeries decode_row(const json& row) {
  if (!row.is_array() || row.empty()) throw IoError("malformed coefficient row");
  std::vector<mpz_class> c;
  c.reserve(row.size());
  for (const auto& v : row) {
    mpz_class x;
    if (!v.is_string() || x.set_str(v.get<std::string>(), 10) != 0) {
      throw IoError("coefficient is not a decimal string");
    }
    c.push_back(std::move(x));
  }
  return QSeries(std::move(c));
}

std::optional<json> read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

bool envelope_intact(const json& j) {
  if (!j.contains("checksum") || !j.contains("coeffs")) return false;
  return j["checksum"] == sha256_hex(j["coeffs"].dump());
}

}  // namespace

const char* table_name(TableId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<TableId> parse_table_id(const std::string& name) {
  for (const auto& [key, text] : kNames) {
    if (name == text) return key;
  }
  return std::nullopt;
}

bool takes_m(TableId id) {
  switch (id) {
    case TableId::SC1_m:
    case TableId::SC5_m:
    case TableId::SD_C1_m:
    case TableId::SD_C5_m:
    case TableId::crank_table_C1:
    case TableId::crank_table_C5:
      return true;
    default:
      return false;
  }
}

bool is_bivariate(TableId id) {
  return id == TableId::crank_table_C1 || id == TableId::crank_table_C5;
}

std::string CacheKey::file_name() const {
  std::string name = table_name(id);
  if (m) name += "_m" + std::to_string(*m);
  name += "_o" + std::to_string(order);
  if (zwindow) name += "_z" + std::to_string(*zwindow);
  return name + ".json";
}

json CacheKey::params() const {
  json p = json::object();
  p["m"] = m ? json(*m) : json(nullptr);
  p["order"] = order;
  p["zwindow"] = zwindow ? json(*zwindow) : json(nullptr);
  return p;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json encode_coeffs(const CacheKey& key, const Payload& payload) {
  if (!is_bivariate(key.id)) return encode_row(payload.at(0));
  json rows = json::array();
  for (const auto& row : payload) rows.push_back(encode_row(row));
  return rows;
}

Payload decode_coeffs(const CacheKey& key, const json& coeffs) {
  Payload out;
  if (!is_bivariate(key.id)) {
    out.push_back(decode_row(coeffs));
  } else {
    if (!coeffs.is_array()) throw IoError("malformed coefficient table");
    for (const auto& row : coeffs) out.push_back(decode_row(row));
  }
  for (const auto& row : out) {
    if (row.order() != key.order) throw IoError("cached order does not match its key");
  }
  return out;
}

json make_envelope(const CacheKey& key, const Payload& payload) {
  json coeffs = encode_coeffs(key, payload);
  json env = json::object();
  env["id"] = table_name(key.id);
  env["params"] = key.params();
  env["version"] = SPTCRANK_VERSION;
  env["checksum"] = sha256_hex(coeffs.dump());
  env["coeffs"] = std::move(coeffs);
  return env;
}

std::optional<Payload> Cache::load(const CacheKey& key) const {
  const fs::path path = dir_ / key.file_name();
  if (!fs::exists(path)) return std::nullopt;
  const auto j = read_json(path);
  if (!j || !envelope_intact(*j)) {
    *log_ << "cache entry " << path.string() << " is corrupt; recomputing\n";
    return std::nullopt;
  }
  if ((*j)["version"] != SPTCRANK_VERSION || (*j)["id"] != table_name(key.id) ||
      (*j)["params"] != key.params()) {
    *log_ << "cache entry " << path.string() << " is stale; recomputing\n";
    return std::nullopt;
  }
  try {
    auto payload = decode_coeffs(key, (*j)["coeffs"]);
    *log_ << "cache hit " << path.string() << "\n";
    return payload;
  } catch (const IoError& e) {
    *log_ << "cache entry " << path.string() << ": " << e.what() << "; recomputing\n";
    return std::nullopt;
  }
}

void Cache::store(const CacheKey& key, const Payload& payload) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());

  const fs::path target = dir_ / key.file_name();
  const fs::path tmp = dir_ / (key.file_name() + ".tmp." + std::to_string(::getpid()) + "." +
                               std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << make_envelope(key, payload).dump() << '\n';
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot rename into " + target.string() + ": " + ec.message());
  }
}

std::vector<ListedEntry> Cache::list() const {
  std::vector<ListedEntry> out;
  if (!fs::is_directory(dir_)) return out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() != ".json") continue;
    ListedEntry item{entry.path().filename().string()};
    if (const auto j = read_json(entry.path())) {
      item.id = j->value("id", "");
      item.params = j->value("params", json::object());
      item.version = j->value("version", "");
      item.checksum_ok = envelope_intact(*j);
    }
    out.push_back(std::move(item));
  }
  std::sort(out.begin(), out.end(),
            [](const ListedEntry& a, const ListedEntry& b) { return a.file < b.file; });
  return out;
}

std::size_t Cache::clear() const {
  std::size_t removed = 0;
  if (!fs::is_directory(dir_)) return 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() == ".json" || name.find(".json.tmp.") != std::string::npos) {
      fs::remove(entry.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace sptcrank::cli
