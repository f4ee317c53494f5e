#include "geowind/export.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "geowind/version.hpp"

namespace geowind {

namespace {

using ordered_json = nlohmann::ordered_json;

void requireDigits(int digits) {
  if (digits < 6 || digits > 17) {
    throw std::invalid_argument("float_digits must lie in [6, 17], got " +
                                std::to_string(digits));
  }
}

using Vec3d = std::array<double, 3>;

Vec3d toDoubles(const ExactVec3& p) {
  return {p.x().toDouble(), p.y().toDouble(), p.z().toDouble()};
}

// Rotation taking the (0,1,phi) direction to +z: x stays put (it is already
// orthogonal to the axis), and (y, z) rotates within the axis plane.
Vec3d alignAxis(const Vec3d& p) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double n = std::sqrt(1.0 + phi * phi);
  return {p[0], (phi * p[1] - p[2]) / n, (p[1] + phi * p[2]) / n};
}

Vec3d framed(const ExactVec3& p, const ExportOptions& opts) {
  const Vec3d d = toDoubles(p);
  return opts.axis_aligned ? alignAxis(d) : d;
}

const char* frameName(const ExportOptions& opts) {
  return opts.axis_aligned ? "axis-aligned" : "canonical";
}

Vec3d sub(const Vec3d& a, const Vec3d& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3d cross(const Vec3d& a, const Vec3d& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3d& a, const Vec3d& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

ordered_json exactFloat(const GoldenRational& x) {
  return ordered_json{{"exact", x.toString()}, {"float", x.toDouble()}};
}

}  // namespace

std::string floatToString(double value, int digits) {
  requireDigits(digits);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

void writeObj(std::ostream& os, const LabeledIcosahedron& model,
              const WingSet& ws, const ExportOptions& opts) {
  requireDigits(opts.float_digits);
  os << "# geowind " << kVersion << "\n";
  os << "# edge_length " << model.edgeLength().toString() << "\n";
  os << "# frame " << frameName(opts) << "\n";
  for (int v = 0; v < kVertexCount; ++v) {
    const Vec3d p = framed(model.position(static_cast<Vertex>(v)), opts);
    os << "v " << floatToString(p[0], opts.float_digits) << ' '
       << floatToString(p[1], opts.float_digits) << ' '
       << floatToString(p[2], opts.float_digits) << "\n";
  }
  for (const WingFace& f : ws.faces) {
    os << "f " << static_cast<int>(f.vertices[0]) + 1 << ' '
       << static_cast<int>(f.vertices[1]) + 1 << ' '
       << static_cast<int>(f.vertices[2]) + 1 << "\n";
  }
  if (!os) throw IoFailure("failed writing OBJ stream");
}

void writeStlAscii(std::ostream& os, const LabeledIcosahedron& model,
                   const WingSet& ws, const ExportOptions& opts) {
  requireDigits(opts.float_digits);
  const auto fmt = [&](double v) { return floatToString(v, opts.float_digits); };
  os << "solid geowind\n";
  for (const WingFace& f : ws.faces) {
    std::array<Vec3d, 3> p;
    for (int k = 0; k < 3; ++k) {
      p[k] = framed(model.position(f.vertices[k]), opts);
    }
    Vec3d n = cross(sub(p[1], p[0]), sub(p[2], p[0]));
    const Vec3d centroid{(p[0][0] + p[1][0] + p[2][0]) / 3.0,
                         (p[0][1] + p[1][1] + p[2][1]) / 3.0,
                         (p[0][2] + p[1][2] + p[2][2]) / 3.0};
    if (dot(n, centroid) < 0.0) {  // orient outward from the center
      std::swap(p[1], p[2]);
      n = {-n[0], -n[1], -n[2]};
    }
    const double len = std::sqrt(dot(n, n));
    n = {n[0] / len, n[1] / len, n[2] / len};
    os << "  facet normal " << fmt(n[0]) << ' ' << fmt(n[1]) << ' '
       << fmt(n[2]) << "\n";
    os << "    outer loop\n";
    for (const Vec3d& v : p) {
      os << "      vertex " << fmt(v[0]) << ' ' << fmt(v[1]) << ' '
         << fmt(v[2]) << "\n";
    }
    os << "    endloop\n";
    os << "  endfacet\n";
  }
  os << "endsolid geowind\n";
  if (!os) throw IoFailure("failed writing STL stream");
}

void writeMidpointsCsv(std::ostream& os, const LabeledIcosahedron& model,
                       const WingSet& ws, const ExportOptions& opts) {
  requireDigits(opts.float_digits);
  os << "face,pole,index,mx,my,mz,sq_radius_exact,radius_float\n";
  const std::vector<ExactVec3> mids = representativePoints(model, ws);
  for (std::size_t i = 0; i < ws.faces.size(); ++i) {
    const WingFace& f = ws.faces[i];
    const Vec3d m = framed(mids[i], opts);
    const GoldenRational sq = mids[i].squaredNorm();
    os << f.name() << ',' << (f.pole == Pole::South ? 'S' : 'N') << ','
       << f.index << ',' << floatToString(m[0], opts.float_digits) << ','
       << floatToString(m[1], opts.float_digits) << ','
       << floatToString(m[2], opts.float_digits) << ',' << sq.toString()
       << ',' << floatToString(std::sqrt(sq.toDouble()), opts.float_digits)
       << "\n";
  }
  if (!os) throw IoFailure("failed writing CSV stream");
}

void exportMesh(std::ostream& os, const LabeledIcosahedron& model,
                const WingSet& ws, const ExportOptions& opts) {
  switch (opts.format) {
    case Format::Obj:
      writeObj(os, model, ws, opts);
      return;
    case Format::StlAscii:
      writeStlAscii(os, model, ws, opts);
      return;
    case Format::CsvMidpoints:
    case Format::JsonReport:
      throw UnsupportedFormat("exportMesh supports only obj and stl_ascii");
  }
  throw UnsupportedFormat("unknown format");
}

namespace {

ordered_json vec3Json(const ExactVec3& p) {
  ordered_json j;
  j["exact"] = {p.x().toString(), p.y().toString(), p.z().toString()};
  j["float"] = {p.x().toDouble(), p.y().toDouble(), p.z().toDouble()};
  return j;
}

ordered_json modelJson(const LabeledIcosahedron& model, const WingSet& ws) {
  ordered_json j;
  j["version"] = kVersion;
  j["edge_length"] = exactFloat(model.edgeLength());
  j["sq_edge_length"] = exactFloat(model.sqEdgeLength());
  // Reports always describe the canonical frame; the axis-aligned rotation
  // exists only for mesh export.
  j["frame"] = "canonical";
  ordered_json verts;
  for (int v = 0; v < kVertexCount; ++v) {
    const auto vx = static_cast<Vertex>(v);
    verts[vertexName(vx)] = vec3Json(model.position(vx));
  }
  j["vertices"] = verts;
  ordered_json faces = ordered_json::array();
  for (const WingFace& f : ws.faces) {
    ordered_json fj;
    fj["name"] = f.name();
    fj["vertices"] = {vertexName(f.vertices[0]), vertexName(f.vertices[1]),
                      vertexName(f.vertices[2])};
    faces.push_back(fj);
  }
  j["faces"] = faces;
  return j;
}

ordered_json edgeCheckJson(const EdgeCheck& c) {
  ordered_json j;
  j["pass"] = c.pass;
  ordered_json dups = ordered_json::array();
  for (const DuplicateEdge& d : c.duplicate_pairs) {
    dups.push_back(ordered_json{
        {"edge", d.edge.name()}, {"face_a", d.face_a}, {"face_b", d.face_b}});
  }
  j["duplicate_pairs"] = dups;
  return j;
}

ordered_json shapeCheckJson(const ShapeCheck& c) {
  ordered_json j;
  j["pass"] = c.pass;
  ordered_json faces = ordered_json::array();
  for (const FaceShapeResult& r : c.per_face) {
    ordered_json fj;
    fj["face"] = r.face;
    ordered_json sides = ordered_json::array();
    for (const GoldenRational& s : r.sq_sides) sides.push_back(exactFloat(s));
    fj["sq_sides"] = sides;
    if (r.cos_angles) {
      ordered_json cosines = ordered_json::array();
      for (const GoldenRational& v : *r.cos_angles)
        cosines.push_back(exactFloat(v));
      fj["cos_angles"] = cosines;
    } else {
      fj["cos_angles"] = nullptr;
    }
    fj["angles_deg_float"] = r.angles_deg_float;
    fj["pass"] = r.pass;
    faces.push_back(fj);
  }
  j["per_face"] = faces;
  return j;
}

ordered_json decagonCheckJson(const DecagonCheck& c) {
  ordered_json j;
  j["pass"] = c.pass;
  j["coplanar"] = c.coplanar;
  j["radius_equal"] = c.radius_equal;
  j["spacing_equal"] = c.spacing_equal;
  j["interlaced"] = c.interlaced;
  j["sq_radius"] = exactFloat(c.sq_radius);
  j["radius_float"] = c.radius_float;
  j["adjacent_cos"] = exactFloat(c.adjacent_cos);
  j["spacing_deg_float"] = c.spacing_deg_float;
  j["angular_order"] = c.angular_order;
  return j;
}

ordered_json maximalityCheckJson(const MaximalityCheck& c) {
  ordered_json j;
  j["pass"] = c.pass;
  j["max_per_south"] = c.max_per_south;
  j["max_per_north"] = c.max_per_north;
  j["max_total"] = c.max_total;
  j["candidates_south"] = c.candidates_south;
  j["candidates_north"] = c.candidates_north;
  j["unconstrained_per_south"] = c.unconstrained_per_south;
  j["unconstrained_per_north"] = c.unconstrained_per_north;
  j["unconstrained_total"] = c.unconstrained_total;
  return j;
}

ordered_json intersectionCheckJson(const IntersectionCheck& c) {
  ordered_json j;
  j["pass"] = c.pass;
  j["pairs_tested"] = c.pairs_tested;
  ordered_json pairs = ordered_json::array();
  for (const OverlapPair& p : c.offending_pairs) {
    pairs.push_back(ordered_json{{"face_a", p.face_a}, {"face_b", p.face_b}});
  }
  j["offending_pairs"] = pairs;
  return j;
}

}  // namespace

std::string reportToJson(const ValidationReport& report,
                         const LabeledIcosahedron& model, const WingSet& ws) {
  ordered_json j;
  j["model"] = modelJson(model, ws);
  j["edge_check"] = edgeCheckJson(report.edge_check);
  j["shape_check"] = shapeCheckJson(report.shape_check);
  j["decagon_check"] = decagonCheckJson(report.decagon_check);
  j["maximality_check"] = maximalityCheckJson(report.maximality_check);
  j["intersection_check"] = intersectionCheckJson(report.intersection_check);
  j["overall"] = report.overall;
  return j.dump(2) + "\n";
}

}  // namespace geowind
