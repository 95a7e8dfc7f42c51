#pragma once

// One computation session: a shared memo table (the on-disk cache), the three
// WDVV engines, and the Welschinger table with ingested values.

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumgeo/combine.hpp"
#include "enumgeo/floor_diagram.hpp"
#include "enumgeo/memo_table.hpp"
#include "enumgeo/wdvv.hpp"

namespace enumgeo {

inline constexpr const char* kKindWelS0 = "wel_s0";

inline std::string welschinger_kind(int s) { return "wel_s" + std::to_string(s); }

/// Parses "wel_s<N>"; returns -1 for anything else.
inline int welschinger_kind_s(const std::string& kind) {
  if (kind.rfind("wel_s", 0) != 0 || kind.size() == 5) return -1;
  int s = 0;
  for (std::size_t i = 5; i < kind.size(); ++i) {
    if (kind[i] < '0' || kind[i] > '9') return -1;
    s = s * 10 + (kind[i] - '0');
  }
  return s;
}

class Workspace {
 public:
  Workspace() : Workspace(std::make_shared<MemoTable>()) {}
  explicit Workspace(std::shared_ptr<MemoTable> memo)
      : memo_(std::move(memo)), plane_(memo_), quadric_(memo_), blown_(memo_) {}

  const std::shared_ptr<MemoTable>& memo() const { return memo_; }
  WelschingerTable& table() { return table_; }
  const WelschingerTable& table() const { return table_; }

  BigInt gw(SurfaceId surface, const std::vector<int>& coords) const {
    switch (surface) {
      case SurfaceId::projective_plane: return plane_(ProjectivePlane::from_coords(coords));
      case SurfaceId::quadric: return quadric_(Quadric::from_coords(coords));
      case SurfaceId::blown_quadric: return blown_(BlownQuadric::from_coords(coords));
    }
    throw DomainError("unknown surface identifier");
  }

  BigInt gw(const SurfaceClass& c) const { return blown_(c); }

  /// All-real-point Welschinger invariant from floor diagrams, memoised.
  BigInt wel_s0(SurfaceId surface, const std::vector<int>& coords) const {
    std::vector<int> key_coords;
    FloorProfile profile;
    std::optional<SurfaceClass> ruling;
    switch (surface) {
      case SurfaceId::projective_plane: {
        const int d = ProjectivePlane::from_coords(coords).degree;
        if (d < 1) return 0;
        key_coords = {d};
        profile = plane_profile(d);
        break;
      }
      case SurfaceId::quadric:
      case SurfaceId::blown_quadric: {
        SurfaceClass c = surface == SurfaceId::quadric ? Quadric::from_coords(coords) : BlownQuadric::from_coords(coords);
        if (c.a > c.b) c = c.swapped();
        key_coords = surface == SurfaceId::quadric ? Quadric::coords(c) : BlownQuadric::coords(c);
        if (c.a <= 0 || c.b <= 0) return count_welschinger_real(c);
        profile = profile_for(c);
        break;
      }
    }
    const MemoKey key{std::string(surface_name(surface)), key_coords, kKindWelS0};
    if (auto hit = memo_->find(key)) return *hit;
    BigInt value = tropical_counts(profile).real;
    memo_->store(key, value);
    return value;
  }

  BigInt wel_s0(const SurfaceClass& c) const {
    return wel_s0(SurfaceId::blown_quadric, BlownQuadric::coords(c));
  }

  SurfaceInvariant real_s0_resolver() const {
    return [this](const SurfaceClass& c) { return wel_s0(c); };
  }

  BigInt gw_threefold(const ThreefoldClass& c) const {
    return enumgeo::gw_threefold(c, [this](const SurfaceClass& s) { return blown_(s); });
  }

  PipelineResult welschinger_threefold(const ThreefoldClass& c, int s) const {
    return enumgeo::welschinger_threefold(c, s, table_, real_s0_resolver());
  }

  void ingest(const SurfaceClass& c, int s, BigInt value, std::string source) {
    table_.ingest(c, s, std::move(value), std::move(source), real_s0_resolver());
  }

 private:
  std::shared_ptr<MemoTable> memo_;
  GromovWitten<ProjectivePlane> plane_;
  GromovWitten<Quadric> quadric_;
  GromovWitten<BlownQuadric> blown_;
  WelschingerTable table_;
};

}  // namespace enumgeo
