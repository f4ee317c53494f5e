#ifndef GEOWIND_EXPORT_HPP
#define GEOWIND_EXPORT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "geowind/validate.hpp"

namespace geowind {

enum class Format { Obj, StlAscii, CsvMidpoints, JsonReport };

struct UnsupportedFormat : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExportOptions {
  Format format = Format::Obj;
  // Rotate so the N-S axis maps to +z. The rotation is computed in double
  // precision; exactness claims hold only for the unrotated frame.
  bool axis_aligned = false;
  int float_digits = 17;  // must lie in [6, 17]
};

/// Renders a double with up to `digits` significant digits, trimming
/// trailing zeros ("%.Ng" semantics). digits outside [6, 17] throws.
std::string floatToString(double value, int digits);

/// Wavefront OBJ: comment header (tool version, edge length, frame), 12 "v"
/// lines in label order N, S, U1..U5, L1..L5, then 10 "f" lines (1-based,
/// faces South 1-5 then North 1-5).
void writeObj(std::ostream& os, const LabeledIcosahedron& model,
              const WingSet& ws, const ExportOptions& opts);

/// ASCII STL with one facet per face; normals unit length, oriented outward
/// from the center.
void writeStlAscii(std::ostream& os, const LabeledIcosahedron& model,
                   const WingSet& ws, const ExportOptions& opts);

/// CSV of the ten cross-edge midpoints:
/// face,pole,index,mx,my,mz,sq_radius_exact,radius_float
void writeMidpointsCsv(std::ostream& os, const LabeledIcosahedron& model,
                       const WingSet& ws, const ExportOptions& opts);

/// Dispatches to the mesh writers; throws UnsupportedFormat for
/// non-mesh formats.
void exportMesh(std::ostream& os, const LabeledIcosahedron& model,
                const WingSet& ws, const ExportOptions& opts);

/// Validation report as JSON with stable key order; exact quantities are
/// serialized both as canonical field strings and as float64. Byte-identical
/// across runs for identical inputs.
std::string reportToJson(const ValidationReport& report,
                         const LabeledIcosahedron& model, const WingSet& ws);

}  // namespace geowind

#endif  // GEOWIND_EXPORT_HPP
