// enumgeo: compute curve counts on the blown quadric, the plane and the
// blown-up projective 3-space from the command line.
//
// Exit codes: 0 success, 2 incomplete (missing external inputs), 3 domain or
// format error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enumgeo/cache.hpp"
#include "enumgeo/combine.hpp"
#include "enumgeo/floor_diagram.hpp"
#include "enumgeo/pencil.hpp"
#include "enumgeo/tables.hpp"
#include "enumgeo/verify.hpp"
#include "enumgeo/workspace.hpp"

namespace {

using namespace enumgeo;

constexpr int kExitIncomplete = 2;
constexpr int kExitError = 3;

struct Session {
  std::string cache_path;
  std::string table_path;
  Workspace ws;
  std::string loaded_text;

  void open() {
    if (cache_path.empty()) {
      if (const char* env = std::getenv("ENUMGEO_CACHE")) cache_path = env;
    }
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
      loaded_text = detail::read_file(cache_path);
      CacheFile::parse(loaded_text).apply_to(ws);
    }
    if (!table_path.empty()) ingest_file(table_path, ws);
  }

  /// Writes the cache back only when its contents changed.
  void close() {
    if (cache_path.empty()) return;
    const CacheFile file = CacheFile::capture(ws);
    if (file.serialize() != loaded_text) file.save(cache_path);
  }
};

std::string missing_list(const PipelineResult& r) {
  std::string out;
  for (const auto& m : r.missing) {
    out += "(" + std::to_string(m.cls.a) + "," + std::to_string(m.cls.b) + "," + std::to_string(m.cls.k) +
           ",s=" + std::to_string(m.s) + ")\n";
  }
  return out;
}

std::vector<int> surface_coords(SurfaceId id, int d, int a, int b, int k) {
  switch (id) {
    case SurfaceId::projective_plane: return {d};
    case SurfaceId::quadric: return {a, b};
    case SurfaceId::blown_quadric: return {a, b, k};
  }
  return {};
}

std::string pencil_tables(int max_m) {
  std::ostringstream out;
  out << "real torsion points of order m\n";
  out << "m,two_components_origin,two_components_other,connected\n";
  const RealEllipticModel two(RealType::two_components), conn(RealType::connected);
  for (int m = 1; m <= max_m; ++m)
    out << m << ',' << real_torsion_count(m, two, 0) << ',' << real_torsion_count(m, two, 1) << ','
        << real_torsion_count(m, conn, 0) << '\n';
  out << "\nreal singular quadrics in the pencil\n";
  out << "configuration,count\n";
  for (auto c : {QuadricConfig::same_component, QuadricConfig::different_components, QuadricConfig::connected})
    out << quadric_config_name(c) << ',' << real_singular_quadric_count(c) << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerative invariants of the blown quadric and the blown-up 3-space"};
  app.require_subcommand(1);

  Session session;
  app.add_option("--cache", session.cache_path, "JSON cache file (default: $ENUMGEO_CACHE)");
  app.add_option("--table", session.table_path, "ingest external Welschinger values for this run");

  std::string surface = "blown_quadric";
  int d = 0, a = 0, b = 0, k = 0, s = 0;
  bool explain = false;

  auto* gw_surface_cmd = app.add_subcommand("gw-surface", "genus-0 Gromov-Witten invariant of a surface class");
  auto* wel_surface_cmd = app.add_subcommand("wel-surface", "Welschinger invariant of a surface class");
  for (auto* c : {gw_surface_cmd, wel_surface_cmd}) {
    c->add_option("--surface", surface, "blown_quadric | quadric | projective_plane");
    c->add_option("--d", d, "plane degree");
    c->add_option("-a,--a", a);
    c->add_option("-b,--b", b);
    c->add_option("-k,--k", k);
  }
  wel_surface_cmd->add_option("-s,--s", s, "number of conjugate pairs");

  auto* gw3_cmd = app.add_subcommand("gw-threefold", "complex count of rational curves of class d*l - k*e");
  gw3_cmd->add_option("--d", d)->required();
  gw3_cmd->add_option("-k,--k", k)->required();

  auto* wel3_cmd = app.add_subcommand("wel-threefold", "Welschinger invariant of class d*l - k*e");
  wel3_cmd->add_option("--d", d)->required();
  wel3_cmd->add_option("-k,--k", k)->required();
  wel3_cmd->add_option("-s,--s", s)->required();
  wel3_cmd->add_flag("--explain", explain, "print the terms of the sum");

  TableRequest req;
  std::string what, format = "csv", output;
  auto* table_cmd = app.add_subcommand("table", "emit a table of invariants");
  table_cmd->add_option("what", what, "gw-surface | wel-surface | gw-threefold | wel-threefold")->required();
  table_cmd->add_option("--surface", surface);
  table_cmd->add_option("--max-degree", req.max_degree, "a + b (or plane degree) bound for surface tables");
  table_cmd->add_option("--max-d", req.max_d);
  table_cmd->add_option("--max-k", req.max_k);
  table_cmd->add_option("--max-s", req.max_s);
  table_cmd->add_option("--format", format, "csv | json | md");
  table_cmd->add_option("-o,--output", output, "write to a file instead of stdout");

  VerifyOptions vopt;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the self-check suite");
  verify_cmd->add_option("--max-degree", vopt.max_degree, "a + b bound, at most 8")->check(CLI::Range(1, 8));
  verify_cmd->add_flag("--json", verify_json);

  std::string ingest_path;
  auto* ingest_cmd = app.add_subcommand("ingest", "validate an ingestion file and merge it into the cache");
  ingest_cmd->add_option("path", ingest_path)->required();

  int pencil_m = 12;
  auto* pencil_cmd = app.add_subcommand("pencil-table", "real torsion and singular-quadric case tables");
  pencil_cmd->add_option("--max-m", pencil_m)->check(CLI::Range(1, 1000));

  auto* diagrams_cmd = app.add_subcommand("diagrams", "dump the floor diagrams of a class as JSON");
  diagrams_cmd->add_option("--surface", surface);
  diagrams_cmd->add_option("--d", d, "plane degree");
  diagrams_cmd->add_option("-a,--a", a);
  diagrams_cmd->add_option("-b,--b", b);
  diagrams_cmd->add_option("-k,--k", k);

  CLI11_PARSE(app, argc, argv);

  try {
    session.open();
    int code = 0;

    if (gw_surface_cmd->parsed()) {
      const SurfaceId id = parse_surface_id(surface);
      std::cout << to_decimal(session.ws.gw(id, surface_coords(id, d, a, b, k))) << '\n';
    } else if (wel_surface_cmd->parsed()) {
      const SurfaceId id = parse_surface_id(surface);
      const auto coords = surface_coords(id, d, a, b, k);
      if (s == 0) {
        std::cout << to_decimal(session.ws.wel_s0(id, coords)) << '\n';
      } else {
        if (id != SurfaceId::blown_quadric) throw DomainError("s > 0 values exist only for blown_quadric classes");
        const SurfaceClass c{a, b, k};
        const auto r = resolve_welschinger(c, s, session.ws.table(), session.ws.real_s0_resolver());
        if (r.value) {
          std::cout << to_decimal(*r.value) << '\n';
        } else {
          std::cout << "incomplete; missing inputs:\n(" << a << ',' << b << ',' << k << ",s=" << s << ")\n";
          code = kExitIncomplete;
        }
      }
    } else if (gw3_cmd->parsed()) {
      std::cout << to_decimal(session.ws.gw_threefold({d, k})) << '\n';
    } else if (wel3_cmd->parsed()) {
      const auto r = session.ws.welschinger_threefold({d, k}, s);
      if (explain) {
        if (r.vanishing_certificate) std::cout << "# " << *r.vanishing_certificate << '\n';
        for (const auto& t : r.terms)
          std::cout << "# " << t.coefficient << " * W((" << t.a << ',' << t.b << ',' << k << "), " << s << ") = " << t.coefficient
                    << " * " << (t.value ? to_decimal(*t.value) : std::string("?")) << "  [" << t.provenance << "]\n";
      }
      if (r.value) {
        std::cout << to_decimal(*r.value) << '\n';
      } else {
        std::cout << "incomplete; missing inputs:\n" << missing_list(r);
        code = kExitIncomplete;
      }
    } else if (table_cmd->parsed()) {
      req.what = parse_table_what(what);
      req.surface = parse_surface_id(surface);
      req.format = parse_table_format(format);
      const std::string text = render_table(build_table(req, session.ws), req);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + output);
        out << text;
      }
    } else if (verify_cmd->parsed()) {
      const auto report = run_verify(vopt, session.ws);
      std::cout << render_report(report, verify_json);
      code = report.passed() ? 0 : 1;
    } else if (ingest_cmd->parsed()) {
      const std::size_t n = ingest_file(ingest_path, session.ws);
      std::cout << "ingested " << n << " entr" << (n == 1 ? "y" : "ies");
      std::cout << (session.cache_path.empty() ? " (no cache given; nothing persisted)\n" : "\n");
    } else if (pencil_cmd->parsed()) {
      std::cout << pencil_tables(pencil_m);
    } else if (diagrams_cmd->parsed()) {
      const SurfaceId id = parse_surface_id(surface);
      if (id == SurfaceId::projective_plane) {
        if (d < 1 || d > kMaxPlaneTropicalDegree) throw DomainError("plane degree must lie in 1..7");
        std::cout << dump_diagrams(enumerate_floor_diagrams(plane_profile(d))).dump(2) << '\n';
      } else {
        std::cout << dump_diagrams(enumerate_floor_diagrams(SurfaceClass{a, b, id == SurfaceId::quadric ? 0 : k})).dump(2)
                  << '\n';
      }
    }

    if (code != 1) session.close();
    return code;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
