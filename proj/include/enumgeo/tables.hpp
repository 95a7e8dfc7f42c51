#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enumgeo/cache.hpp"
#include "enumgeo/workspace.hpp"

namespace enumgeo {

enum class TableWhat { gw_surface, wel_surface, gw_threefold, wel_threefold };
enum class TableFormat { csv, json, md };

inline TableWhat parse_table_what(std::string_view s) {
  if (s == "gw-surface") return TableWhat::gw_surface;
  if (s == "wel-surface") return TableWhat::wel_surface;
  if (s == "gw-threefold") return TableWhat::gw_threefold;
  if (s == "wel-threefold") return TableWhat::wel_threefold;
  throw DomainError("unknown table kind '" + std::string(s) + "'");
}

inline TableFormat parse_table_format(std::string_view s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  if (s == "md") return TableFormat::md;
  throw DomainError("unknown table format '" + std::string(s) + "'");
}

// Desk-scale limits for table ranges.
inline constexpr int kMaxSurfaceDegree = 8;
inline constexpr int kMaxThreefoldDegree = 12;
inline constexpr int kMaxPlaneTropicalDegree = 7;

struct TableRequest {
  TableWhat what = TableWhat::gw_threefold;
  SurfaceId surface = SurfaceId::blown_quadric;
  int max_degree = 4;  // a + b (or plane degree) for surface tables
  int max_d = 6;
  int max_k = 2;
  int max_s = 0;
  TableFormat format = TableFormat::csv;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<CacheEntry> cache_entries;  // surface tables: complete cells in cache form
};

inline void validate(const TableRequest& r) {
  if (r.max_degree < 1 || r.max_degree > kMaxSurfaceDegree)
    throw DomainError("max degree must lie in 1.." + std::to_string(kMaxSurfaceDegree));
  if (r.what == TableWhat::wel_surface && r.surface == SurfaceId::projective_plane &&
      r.max_degree > kMaxPlaneTropicalDegree)
    throw DomainError("plane floor diagrams limited to degree " + std::to_string(kMaxPlaneTropicalDegree));
  if (r.max_d < 1 || r.max_d > kMaxThreefoldDegree)
    throw DomainError("max d must lie in 1.." + std::to_string(kMaxThreefoldDegree));
  if (r.max_k < 0 || r.max_k > r.max_d) throw DomainError("max k must lie in 0..max d");
  if (r.max_s < 0 || r.max_s > r.max_d) throw DomainError("max s must lie in 0..max d");
}

inline Table build_table(const TableRequest& req, const Workspace& ws) {
  validate(req);
  Table t;
  const std::string surface(surface_name(req.surface));
  auto add_cache = [&](std::vector<int> cls, std::string kind, const BigInt& v, std::optional<std::string> src) {
    t.cache_entries.push_back({surface, std::move(cls), std::move(kind), v, std::move(src)});
  };

  switch (req.what) {
    case TableWhat::gw_surface: {
      if (req.surface == SurfaceId::projective_plane) {
        t.columns = {"d", "value"};
        for (int d = 1; d <= req.max_degree; ++d) {
          const BigInt v = ws.gw(req.surface, {d});
          t.rows.push_back({std::to_string(d), to_decimal(v)});
          add_cache({d}, kKindGw, v, std::nullopt);
        }
        break;
      }
      const bool blown = req.surface == SurfaceId::blown_quadric;
      t.columns = blown ? std::vector<std::string>{"a", "b", "k", "value"} : std::vector<std::string>{"a", "b", "value"};
      for (int deg = 1; deg <= req.max_degree; ++deg) {
        for (int a = 0; a <= deg; ++a) {
          const int b = deg - a;
          for (int k = 0; k <= (blown ? deg : 0); ++k) {
            const std::vector<int> cls = blown ? std::vector<int>{a, b, k} : std::vector<int>{a, b};
            const BigInt v = ws.gw(req.surface, cls);
            std::vector<std::string> row;
            for (int x : cls) row.push_back(std::to_string(x));
            row.push_back(to_decimal(v));
            t.rows.push_back(std::move(row));
            add_cache(cls, kKindGw, v, std::nullopt);
          }
        }
      }
      break;
    }
    case TableWhat::wel_surface: {
      if (req.surface == SurfaceId::projective_plane) {
        t.columns = {"d", "s", "value", "status"};
        for (int d = 1; d <= req.max_degree; ++d) {
          const BigInt v = ws.wel_s0(req.surface, {d});
          t.rows.push_back({std::to_string(d), "0", to_decimal(v), "complete"});
          add_cache({d}, kKindWelS0, v, std::nullopt);
        }
        break;
      }
      const bool blown = req.surface == SurfaceId::blown_quadric;
      t.columns = {"a", "b", "k", "s", "value", "status"};
      for (int deg = 2; deg <= req.max_degree; ++deg) {
        for (int a = 1; a < deg; ++a) {
          const int b = deg - a;
          for (int k = 0; k <= (blown ? std::min(a, b) : 0); ++k) {
            const SurfaceClass c{a, b, k};
            const std::vector<int> cls = blown ? BlownQuadric::coords(c) : Quadric::coords(c);
            for (int s = 0; s <= req.max_s && 2 * s <= point_count_surface(c); ++s) {
              std::vector<std::string> row{std::to_string(a), std::to_string(b), std::to_string(k), std::to_string(s)};
              if (s == 0) {
                const BigInt v = ws.wel_s0(req.surface, cls);
                row.push_back(to_decimal(v));
                row.push_back("complete");
                add_cache(cls, kKindWelS0, v, std::nullopt);
              } else if (const auto r = blown ? resolve_welschinger(c, s, ws.table(), ws.real_s0_resolver())
                                              : ResolvedValue{};
                         r.value) {
                row.push_back(to_decimal(*r.value));
                row.push_back("complete");
                if (const auto* e = ws.table().find(c, s)) add_cache(cls, welschinger_kind(s), e->value, e->source);
              } else {
                row.push_back("");
                row.push_back("incomplete");
              }
              t.rows.push_back(std::move(row));
            }
          }
        }
      }
      break;
    }
    case TableWhat::gw_threefold: {
      t.columns = {"d", "k", "value", "status"};
      for (int d = 1; d <= req.max_d; ++d) {
        for (int k = 0; k <= req.max_k; ++k) {
          if (k > d) {
            t.rows.push_back({std::to_string(d), std::to_string(k), "", "out-of-domain"});
            continue;
          }
          t.rows.push_back({std::to_string(d), std::to_string(k), to_decimal(ws.gw_threefold({d, k})), "complete"});
        }
      }
      break;
    }
    case TableWhat::wel_threefold: {
      t.columns = {"d", "k", "s", "value", "status"};
      for (int d = 1; d <= req.max_d; ++d) {
        for (int k = 0; k <= std::min(req.max_k, d); k += 2) {
          for (int s = 0; s <= std::min(req.max_s, d - k / 2 - 1); ++s) {
            const ThreefoldClass c{d, k};
            if (d % 2 == 0 && !vanishing_check(c, s)) continue;
            const auto r = ws.welschinger_threefold(c, s);
            t.rows.push_back({std::to_string(d), std::to_string(k), std::to_string(s),
                              r.value ? to_decimal(*r.value) : std::string(), r.value ? "complete" : "incomplete"});
          }
        }
      }
      break;
    }
  }
  return t;
}

inline std::string render_table(const Table& t, const TableRequest& req) {
  std::ostringstream out;
  switch (req.format) {
    case TableFormat::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      line(t.columns);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case TableFormat::md: {
      auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (const auto& c : cells) out << ' ' << c << " |";
        out << '\n';
      };
      line(t.columns);
      out << '|';
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& r : t.rows) line(r);
      break;
    }
    case TableFormat::json: {
      if (req.what == TableWhat::gw_surface || req.what == TableWhat::wel_surface) {
        CacheFile f;
        f.entries = t.cache_entries;
        out << f.serialize();
        break;
      }
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
        rows.push_back(std::move(row));
      }
      out << rows.dump() << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace enumgeo
