#pragma once

// On-disk formats.
//
// Cache file:
//   {"schema":1,"entries":[
//   {"surface":"blown_quadric","class":[a,b,k],"kind":"gw","value":"<decimal>"},
//   ...
//   ]}
// kinds: "gw" (WDVV), "wel_s0" (floor diagrams), and "wel_s<N>" carrying a
// "source" field for values that came from an ingestion file. Entries are
// written sorted by surface, class, kind, one per line, so loading and saving
// an unchanged cache reproduces it byte for byte.
//
// Ingestion file:
//   {"surface":"blown_quadric","entries":[{"class":[a,b,k],"s":s,"value":v,"source":"..."}]}

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enumgeo/errors.hpp"
#include "enumgeo/memo_table.hpp"
#include "enumgeo/surface_model.hpp"
#include "enumgeo/workspace.hpp"

namespace enumgeo {

struct CacheEntry {
  std::string surface;
  std::vector<int> cls;
  std::string kind;
  BigInt value;
  std::optional<std::string> source;
};

namespace detail {

inline nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("malformed " + std::string(what) + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline BigInt json_integer(const nlohmann::json& v) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  throw FormatError("expected an integer or decimal string, got " + v.dump());
}

inline std::vector<int> json_class(const nlohmann::json& v) {
  if (!v.is_array()) throw FormatError("class must be an integer array, got " + v.dump());
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw FormatError("class must be an integer array, got " + v.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

class CacheFile {
 public:
  std::vector<CacheEntry> entries;

  static CacheFile parse(std::string_view text) {
    const auto j = detail::parse_json(text, "cache file");
    if (!j.is_object() || !j.contains("schema") || !j.contains("entries"))
      throw FormatError("cache file needs \"schema\" and \"entries\"");
    if (j["schema"] != kCacheSchema) throw FormatError("unsupported cache schema " + j["schema"].dump());
    CacheFile out;
    for (const auto& e : j["entries"]) {
      try {
        CacheEntry entry{e.at("surface").get<std::string>(), detail::json_class(e.at("class")),
                         e.at("kind").get<std::string>(), detail::json_integer(e.at("value")), std::nullopt};
        if (e.contains("source")) entry.source = e["source"].get<std::string>();
        out.entries.push_back(std::move(entry));
      } catch (const nlohmann::json::exception& ex) {
        throw FormatError("bad cache entry " + e.dump() + ": " + ex.what());
      }
    }
    return out;
  }

  static CacheFile load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    return parse(detail::read_file(path));
  }

  /// Sorted, one entry per line.
  std::string serialize() const {
    std::map<MemoKey, const CacheEntry*> sorted;
    for (const auto& e : entries) sorted[{e.surface, e.cls, e.kind}] = &e;
    std::string out = "{\"schema\":" + std::to_string(kCacheSchema) + ",\"entries\":[";
    bool first = true;
    for (const auto& [_, e] : sorted) {
      nlohmann::ordered_json j;
      j["surface"] = e->surface;
      j["class"] = e->cls;
      j["kind"] = e->kind;
      j["value"] = to_decimal(e->value);
      if (e->source) j["source"] = *e->source;
      out += first ? "\n" : ",\n";
      out += j.dump();
      first = false;
    }
    out += "\n]}\n";
    return out;
  }

  void save(const std::filesystem::path& path) const {
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw FormatError("cannot write " + tmp);
      out << serialize();
    }
    std::filesystem::rename(tmp, path);
  }

  /// gw and wel_s0 values go to the memo table; sourced values are ingested.
  void apply_to(Workspace& ws) const {
    for (const auto& e : entries) {
      const SurfaceId id = parse_surface_id(e.surface);
      if (e.source) {
        const int s = welschinger_kind_s(e.kind);
        if (s < 0 || id != SurfaceId::blown_quadric)
          throw FormatError("sourced cache entries must be blown_quadric wel_s<N>, got " + e.kind);
        ws.ingest(BlownQuadric::from_coords(e.cls), s, e.value, *e.source);
        continue;
      }
      if (e.kind != kKindGw && e.kind != kKindWelS0) throw FormatError("unknown cache kind '" + e.kind + "'");
      ws.memo()->store({std::string(surface_name(id)), e.cls, e.kind}, e.value);
    }
  }

  static CacheFile capture(const Workspace& ws) {
    std::map<MemoKey, CacheEntry> merged;
    for (const auto& [key, value] : ws.memo()->snapshot())
      merged[key] = {key.surface, key.cls, key.kind, value, std::nullopt};
    for (const auto& [key, entry] : ws.table().entries()) {
      if (entry.provenance != ProvenanceKind::ingested) continue;
      const MemoKey k{std::string(surface_name(SurfaceId::blown_quadric)), BlownQuadric::coords(key.first),
                      welschinger_kind(key.second)};
      merged[k] = {k.surface, k.cls, k.kind, entry.value, entry.source};
    }
    CacheFile out;
    for (auto& [_, e] : merged) out.entries.push_back(std::move(e));
    return out;
  }
};

struct IngestEntry {
  SurfaceClass cls;
  int s = 0;
  BigInt value;
  std::string source;
};

inline std::vector<IngestEntry> parse_ingestion(std::string_view text) {
  const auto j = detail::parse_json(text, "ingestion file");
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw FormatError("ingestion file needs an \"entries\" array");
  if (j.value("surface", std::string("blown_quadric")) != "blown_quadric")
    throw FormatError("ingestion supports surface \"blown_quadric\" only");
  std::vector<IngestEntry> out;
  for (const auto& e : j["entries"]) {
    try {
      const auto coords = detail::json_class(e.at("class"));
      if (coords.size() != 3) throw FormatError("ingested class must be [a,b,k], got " + e.at("class").dump());
      out.push_back({BlownQuadric::from_coords(coords), e.at("s").get<int>(), detail::json_integer(e.at("value")),
                     e.value("source", std::string())});
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError("bad ingestion entry " + e.dump() + ": " + ex.what());
    }
  }
  return out;
}

/// Merges every entry or none (the workspace is untouched on error).
inline std::size_t ingest_file(const std::filesystem::path& path, Workspace& ws) {
  const auto parsed = parse_ingestion(detail::read_file(path));
  WelschingerTable staged = ws.table();
  for (const auto& e : parsed) staged.ingest(e.cls, e.s, e.value, e.source, ws.real_s0_resolver());
  ws.table() = std::move(staged);
  return parsed.size();
}

}  // namespace enumgeo
