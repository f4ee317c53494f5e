#include "geowind/cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "geowind/export.hpp"
#include "geowind/version.hpp"

namespace geowind {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoFailure = 3;

std::optional<mpq_class> parseRational(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?\d+(/\d+)?$)");
  if (!std::regex_match(text, pattern)) return std::nullopt;
  const auto slash = text.find('/');
  mpz_class num(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string::npos) den = mpz_class(text.substr(slash + 1));
  if (den == 0) return std::nullopt;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

struct CommonArgs {
  std::string edge_length = "1";
  std::string output;
  bool axis_aligned = false;
  bool verbose = false;
};

void addCommon(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--edge-length", args.edge_length,
                  "Edge length as an exact rational, e.g. 1 or 7/3")
      ->capture_default_str();
  cmd->add_option("--output,-o", args.output,
                  "Output path (default: stdout)");
  cmd->add_flag("--axis-aligned", args.axis_aligned,
                "Rotate exports so the pole axis maps to +z (float only)");
  cmd->add_flag("--verbose", args.verbose, "Print extra detail");
}

int writeTo(const std::string& path,
            const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "error: failed writing to stdout\n";
      return kExitIoFailure;
    }
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIoFailure;
  }
  emit(file);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

bool colorEnabled() {
  if (std::getenv("GEOWIND_NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

struct Palette {
  const char* green = "";
  const char* red = "";
  const char* bold = "";
  const char* reset = "";
};

Palette makePalette() {
  if (!colorEnabled()) return {};
  return {"\033[32m", "\033[31m", "\033[1m", "\033[0m"};
}

std::string statusWord(bool ok, const Palette& c) {
  return ok ? std::string(c.green) + "ok  " + c.reset
            : std::string(c.red) + "FAIL" + c.reset;
}

std::string formatSig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string radiusSummary(const LabeledIcosahedron& model,
                          const DecagonCheck& decagon) {
  std::string line =
      "decagon radius = " + formatSig9(decagon.radius_float) + " (exact phi/2";
  const GoldenRational one(1);
  if (model.edgeLength() != one) {
    line += " * " + model.edgeLength().toString();
  }
  line += ")";
  return line;
}

void printChecklist(std::ostream& os, const LabeledIcosahedron& model,
                    const WingSet& ws, const ValidationReport& rep,
                    bool verbose, bool color) {
  const Palette c = color ? makePalette() : Palette{};
  os << c.bold << "geowind " << kVersion << c.reset << " — edge length "
     << model.edgeLength().toString() << "\n";

  const auto line = [&](const char* label, bool ok, const std::string& note) {
    os << "  " << label << "  " << statusWord(ok, c) << "  " << note << "\n";
  };

  line("step 1  labeled icosahedron ", true,
       std::to_string(kVertexCount) + " vertices, " +
           std::to_string(model.edges().size()) + " edges");
  line("step 2  wing faces          ", true,
       std::to_string(ws.faces.size()) + " faces generated");
  line("step 3  edge non-sharing    ", rep.edge_check.pass,
       rep.edge_check.pass
           ? "30 distinct edges"
           : std::to_string(rep.edge_check.duplicate_pairs.size()) +
                 " duplicated edge(s)");
  line("step 4  face shape          ", rep.shape_check.pass,
       rep.shape_check.pass ? "sides {l, l, phi*l}; angles 36/36/108"
                            : "shape mismatch");
  line("step 5  equatorial decagon  ", rep.decagon_check.pass,
       radiusSummary(model, rep.decagon_check));
  line("step 6  non-intersection    ", rep.intersection_check.pass,
       std::to_string(rep.intersection_check.pairs_tested) +
           " face pairs, open interiors " +
           (rep.intersection_check.pass ? "disjoint" : "OVERLAPPING"));
  line("extra   maximality          ", rep.maximality_check.pass,
       std::to_string(rep.maximality_check.max_per_south) + " per pole, " +
           std::to_string(rep.maximality_check.max_total) + " total");

  if (verbose) {
    os << "  angular order:";
    for (const std::string& f : rep.decagon_check.angular_order)
      os << ' ' << f;
    os << "\n";
    os << "  unconstrained maximality: "
       << rep.maximality_check.unconstrained_per_south << " south, "
       << rep.maximality_check.unconstrained_per_north << " north, "
       << rep.maximality_check.unconstrained_total << " total\n";
    for (const FaceShapeResult& f : rep.shape_check.per_face) {
      os << "  face " << f.face << ": sq sides [" << f.sq_sides[0].toString()
         << ", " << f.sq_sides[1].toString() << ", "
         << f.sq_sides[2].toString() << "] angles ["
         << formatSig9(f.angles_deg_float[0]) << ", "
         << formatSig9(f.angles_deg_float[1]) << ", "
         << formatSig9(f.angles_deg_float[2]) << "] "
         << (f.pass ? "ok" : "FAIL") << "\n";
    }
  }

  os << "overall: "
     << (rep.overall ? std::string(c.green) + "PASS" + c.reset
                     : std::string(c.red) + "FAIL" + c.reset)
     << "\n";
}

Format parseFormat(const std::string& name) {
  static const std::map<std::string, Format> table{
      {"obj", Format::Obj},
      {"stl", Format::StlAscii},
      {"csv", Format::CsvMidpoints},
      {"json", Format::JsonReport}};
  const auto it = table.find(name);
  if (it == table.end()) {
    throw UnsupportedFormat("unknown format '" + name +
                            "' (expected obj|stl|csv|json)");
  }
  return it->second;
}

LabeledIcosahedron buildFromArgs(const CommonArgs& args) {
  const auto q = parseRational(args.edge_length);
  if (!q) {
    throw std::invalid_argument("edge length must be a rational like 1 or "
                                "7/3, got '" +
                                args.edge_length + "'");
  }
  return buildIcosahedron(GoldenRational::rational(*q));
}

}  // namespace

int runCli(int argc, const char* const* argv) {
  CLI::App app{"GeoWind — exact wing-set construction and validation on the "
               "regular icosahedron"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonArgs generateArgs, validateArgs, exportArgs, reportArgs;
  std::string generateFormat = "obj";
  std::string exportFormat = "obj";

  CLI::App* generate =
      app.add_subcommand("generate", "Emit the wing-set mesh (obj or stl)");
  addCommon(generate, generateArgs);
  generate->add_option("--format", generateFormat, "Mesh format: obj|stl")
      ->capture_default_str();

  CLI::App* validate = app.add_subcommand(
      "validate", "Run every check and print a human-readable summary");
  addCommon(validate, validateArgs);

  CLI::App* exportCmd = app.add_subcommand(
      "export", "Emit obj, stl, csv midpoints, or the json report");
  addCommon(exportCmd, exportArgs);
  exportCmd->add_option("--format", exportFormat,
                        "Format: obj|stl|csv|json")
      ->capture_default_str();

  CLI::App* report =
      app.add_subcommand("report", "Emit the validation report as JSON");
  addCommon(report, reportArgs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (generate->parsed()) {
      const LabeledIcosahedron model = buildFromArgs(generateArgs);
      const WingSet ws = generateWingSet(model);
      ExportOptions opts;
      opts.format = parseFormat(generateFormat);
      opts.axis_aligned = generateArgs.axis_aligned;
      if (opts.format != Format::Obj && opts.format != Format::StlAscii) {
        throw UnsupportedFormat("generate emits meshes only (obj|stl); use "
                                "'export' for csv or json");
      }
      return writeTo(generateArgs.output, [&](std::ostream& os) {
        exportMesh(os, model, ws, opts);
      });
    }

    if (validate->parsed()) {
      const LabeledIcosahedron model = buildFromArgs(validateArgs);
      const WingSet ws = generateWingSet(model);
      const ValidationReport rep = runAll(model, ws);
      const int rc = writeTo(validateArgs.output, [&](std::ostream& os) {
        printChecklist(os, model, ws, rep, validateArgs.verbose,
                       /*color=*/validateArgs.output.empty());
      });
      if (rc != kExitOk) return rc;
      return rep.overall ? kExitOk : kExitValidationFailed;
    }

    if (exportCmd->parsed()) {
      const LabeledIcosahedron model = buildFromArgs(exportArgs);
      const WingSet ws = generateWingSet(model);
      ExportOptions opts;
      opts.format = parseFormat(exportFormat);
      opts.axis_aligned = exportArgs.axis_aligned;
      return writeTo(exportArgs.output, [&](std::ostream& os) {
        switch (opts.format) {
          case Format::Obj:
          case Format::StlAscii:
            exportMesh(os, model, ws, opts);
            break;
          case Format::CsvMidpoints:
            writeMidpointsCsv(os, model, ws, opts);
            break;
          case Format::JsonReport:
            os << reportToJson(runAll(model, ws), model, ws);
            break;
        }
      });
    }

    if (report->parsed()) {
      const LabeledIcosahedron model = buildFromArgs(reportArgs);
      const WingSet ws = generateWingSet(model);
      const ValidationReport rep = runAll(model, ws);
      const int rc = writeTo(reportArgs.output, [&](std::ostream& os) {
        os << reportToJson(rep, model, ws);
      });
      if (rc != kExitOk) return rc;
      if (reportArgs.verbose) {
        std::cerr << "overall: " << (rep.overall ? "pass" : "fail") << "\n";
      }
      return rep.overall ? kExitOk : kExitValidationFailed;
    }
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const std::invalid_argument& e) {
    // Covers UnsupportedFormat, NonPositiveEdgeLength, and bad rationals.
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }
  return kExitBadArguments;
}

}  // namespace geowind
