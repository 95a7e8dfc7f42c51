#pragma once

// Self-checks run by `enumgeo verify`. Each check recomputes values through
// an independent route and reports the first disagreements it finds.

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumgeo/cache.hpp"
#include "enumgeo/combine.hpp"
#include "enumgeo/floor_diagram.hpp"
#include "enumgeo/pencil.hpp"
#include "enumgeo/wdvv.hpp"
#include "enumgeo/workspace.hpp"

namespace enumgeo {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int max_degree = 5;       // a + b on the quadric surfaces
  int max_plane_degree = 6; // floor diagrams in the plane get slow past this
  int max_d = 6;
  int max_pencil_order = 12;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

/// Collects failure lines, keeping the first few verbatim.
class Failures {
 public:
  void add(const std::string& line) {
    if (count_++ < 5) lines_ << (count_ > 1 ? "; " : "") << line;
  }
  bool empty() const { return count_ == 0; }
  std::string summary(const std::string& ok) const {
    if (count_ == 0) return ok;
    std::string s = lines_.str();
    if (count_ > 5) s += "; ... " + std::to_string(count_ - 5) + " more";
    return s;
  }

 private:
  int count_ = 0;
  std::ostringstream lines_;
};

inline CheckResult timed(const std::string& name, const std::function<std::string(Failures&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r{name, true, {}, 0};
  Failures f;
  try {
    r.detail = body(f);
    r.passed = f.empty();
    r.detail = f.summary(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// 1 <= a <= b, a + b <= max_degree, 0 <= k <= a.
inline std::vector<SurfaceClass> tropical_range(int max_degree) {
  std::vector<SurfaceClass> out;
  for (int deg = 2; deg <= max_degree; ++deg)
    for (int a = 1; 2 * a <= deg; ++a)
      for (int k = 0; k <= a; ++k) out.push_back({a, deg - a, k});
  return out;
}

}  // namespace detail

inline CheckResult check_pair_independence(const VerifyOptions& o) {
  return detail::timed("divisor-pair independence", [&](detail::Failures& f) {
    for (const auto& d : verify_pair_independence<BlownQuadric>(o.max_degree)) f.add("blown_quadric " + d.cls);
    for (const auto& d : verify_pair_independence<Quadric>(o.max_degree)) f.add("quadric " + d.cls);
    for (const auto& d : verify_pair_independence<ProjectivePlane>(o.max_degree)) f.add("plane " + d.cls);
    return "three pairs agree on all three surfaces";
  });
}

inline CheckResult check_cross_backend(const VerifyOptions& o, const Workspace& ws) {
  return detail::timed("WDVV vs floor diagrams", [&](detail::Failures& f) {
    int n = 0;
    for (const auto& c : detail::tropical_range(o.max_degree)) {
      const BigInt fd = count_complex(c);
      const BigInt gw = ws.gw(c);
      if (fd != gw) f.add(to_string(c) + ": FD " + to_decimal(fd) + " vs WDVV " + to_decimal(gw));
      const BigInt swapped = count_complex(c.swapped());
      if (swapped != fd) f.add(to_string(c) + ": FD not symmetric in a, b");
      ++n;
    }
    for (int d = 1; d <= std::min(o.max_plane_degree, 6); ++d) {
      const BigInt fd = tropical_counts(plane_profile(d)).complex;
      const BigInt gw = ws.gw(SurfaceId::projective_plane, {d});
      if (fd != gw) f.add("plane degree " + std::to_string(d) + ": FD " + to_decimal(fd) + " vs WDVV " + to_decimal(gw));
      ++n;
    }
    return std::to_string(n) + " classes agree";
  });
}

inline CheckResult check_real_parity(const VerifyOptions& o, const Workspace& ws) {
  return detail::timed("real/complex parity and bound", [&](detail::Failures& f) {
    int n = 0;
    auto check = [&](const std::string& name, const BigInt& w, const BigInt& c) {
      const BigInt absw = w < 0 ? BigInt(-w) : w;
      if (((c - w) % 2) != 0) f.add(name + ": W=" + to_decimal(w) + " and N=" + to_decimal(c) + " differ in parity");
      if (absw > c) f.add(name + ": |W|=" + to_decimal(absw) + " exceeds N=" + to_decimal(c));
      ++n;
    };
    for (const auto& c : detail::tropical_range(o.max_degree)) check(to_string(c), ws.wel_s0(c), ws.gw(c));
    for (int d = 1; d <= std::min(o.max_plane_degree, 6); ++d)
      check("plane " + std::to_string(d), ws.wel_s0(SurfaceId::projective_plane, {d}),
            ws.gw(SurfaceId::projective_plane, {d}));
    return std::to_string(n) + " classes satisfy |W| <= N, W = N mod 2";
  });
}

inline CheckResult check_threefold_backends(const VerifyOptions& o, const Workspace& ws) {
  return detail::timed("threefold complex counts, both backends", [&](detail::Failures& f) {
    int n = 0;
    for (int d = 1; d <= o.max_d; ++d) {
      for (int k = 0; k <= std::min(1, d); ++k) {
        const ThreefoldClass c{d, k};
        const BigInt viaGw = ws.gw_threefold(c);
        const BigInt viaFd = gw_threefold(c, [](const SurfaceClass& s) { return count_complex(s); });
        if (viaGw != viaFd)
          f.add("(" + std::to_string(d) + "," + std::to_string(k) + "): " + to_decimal(viaGw) + " vs " + to_decimal(viaFd));
        ++n;
      }
    }
    return std::to_string(n) + " threefold classes agree";
  });
}

inline CheckResult check_threefold_real_parity(const VerifyOptions& o, const Workspace& ws) {
  return detail::timed("threefold real/complex parity", [&](detail::Failures& f) {
    int n = 0;
    for (int d = 1; d <= o.max_d; d += 2) {
      for (int k = 0; k <= std::min(2, d); k += 2) {
        const auto r = ws.welschinger_threefold({d, k}, 0);
        if (!r.value) continue;
        const BigInt c = ws.gw_threefold({d, k});
        if (((c - *r.value) % 2) != 0)
          f.add("(" + std::to_string(d) + "," + std::to_string(k) + "): W=" + to_decimal(*r.value) +
                " N=" + to_decimal(c));
        ++n;
      }
    }
    return std::to_string(n) + " classes with W = N mod 2";
  });
}

inline CheckResult check_pencil(const VerifyOptions& o) {
  return detail::timed("pencil model brute force", [&](detail::Failures& f) {
    for (RealType type : {RealType::two_components, RealType::connected}) {
      const RealEllipticModel model(type);
      const std::string tag = type == RealType::connected ? "connected" : "two-components";
      for (int m = 1; m <= o.max_pencil_order; ++m) {
        // Every m-torsion point has coordinates in (1/m)Z^2.
        std::vector<int> brute(model.component_count(), 0);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            const PicElement p(Rational(i, m), Rational(j, m));
            if (const int comp = model.component_of(p); comp >= 0) ++brute[comp];
          }
        for (int comp = 0; comp < model.component_count(); ++comp)
          if (brute[comp] != real_torsion_count(m, model, comp))
            f.add(tag + " m=" + std::to_string(m) + " component " + std::to_string(comp));
        if (m % 2 == 1) {
          const PicElement xi = model.real_point(0, Rational(3, 11));
          int real = 0;
          for (const auto& s : solve_division(m, xi))
            if (model.is_real(s)) ++real;
          if (real != m || real_solution_count(m, xi, model) != m)
            f.add(tag + " real solutions for m=" + std::to_string(m));
        }
      }
    }
    return "torsion and division counts match up to m=" + std::to_string(o.max_pencil_order);
  });
}

/// Recomputes every gw / wel_s0 entry of a loaded cache from scratch.
inline CheckResult check_cache(const Workspace& loaded) {
  return detail::timed("cache re-derivation", [&](detail::Failures& f) {
    const Workspace fresh;
    int n = 0;
    for (const auto& [key, value] : loaded.memo()->snapshot()) {
      const SurfaceId id = parse_surface_id(key.surface);
      const BigInt again = key.kind == kKindGw ? fresh.gw(id, key.cls) : fresh.wel_s0(id, key.cls);
      if (again != value) {
        std::ostringstream s;
        s << key.surface << " [";
        for (std::size_t i = 0; i < key.cls.size(); ++i) s << (i ? "," : "") << key.cls[i];
        s << "] " << key.kind << ": cached " << to_decimal(value) << ", recomputed " << to_decimal(again);
        f.add(s.str());
      }
      ++n;
    }
    return std::to_string(n) + " cached values re-derived";
  });
}

inline VerifyReport run_verify(const VerifyOptions& o, const Workspace& ws) {
  VerifyReport report;
  // The cache check must see only what was loaded, before this run adds to it.
  if (ws.memo()->size() > 0) report.checks.push_back(check_cache(ws));
  Workspace scratch;
  report.checks.push_back(check_pair_independence(o));
  report.checks.push_back(check_cross_backend(o, scratch));
  report.checks.push_back(check_real_parity(o, scratch));
  report.checks.push_back(check_threefold_backends(o, scratch));
  report.checks.push_back(check_threefold_real_parity(o, scratch));
  report.checks.push_back(check_pencil(o));
  return report;
}

inline std::string render_report(const VerifyReport& r, bool json) {
  std::ostringstream out;
  if (json) {
    nlohmann::ordered_json j;
    j["passed"] = r.passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
      j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    out << j.dump(2) << '\n';
    return out.str();
  }
  for (const auto& c : r.checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << static_cast<int>(c.seconds * 1000) << " ms): " << c.detail
        << '\n';
  }
  out << (r.passed() ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace enumgeo
