#include "geowind/validate.hpp"

#include <algorithm>
#include <bitset>
#include <cassert>
#include <cmath>
#include <map>

#include "geowind/predicates.hpp"

namespace geowind {

namespace detail {

namespace {

// Square root of a nonnegative rational, when rational.
std::optional<mpq_class> rationalSqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(num, den);
}

}  // namespace

std::optional<GoldenRational> exactSqrt(const GoldenRational& x) {
  if (x.isZero()) return GoldenRational(0);
  if (x.sign() < 0) return std::nullopt;
  const mpq_class u = x.rationalPart();
  const mpq_class v = x.radicalPart();
  if (sgn(v) == 0) {
    // sqrt(u) is either rational or a rational multiple of sqrt5.
    if (auto r = rationalSqrt(u)) return GoldenRational(*r, 0);
    if (auto r = rationalSqrt(u / 5)) return GoldenRational(0, *r);
    return std::nullopt;
  }
  // (p + q sqrt5)^2 = (p^2 + 5 q^2) + 2pq sqrt5 with p, q rational and both
  // nonzero. Then p^2 solves t^2 - u t + 5 v^2/4 = 0, so u^2 - 5 v^2 must be
  // a rational square.
  const auto disc = rationalSqrt(u * u - 5 * v * v);
  if (!disc) return std::nullopt;
  for (const mpq_class& t : {mpq_class((u + *disc) / 2), mpq_class((u - *disc) / 2)}) {
    const auto p = rationalSqrt(t);
    if (!p || sgn(*p) == 0) continue;
    const mpq_class q = v / (2 * *p);
    GoldenRational y(*p, q);
    if (y.sign() < 0) y = -y;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

double degreesFromCos(double c) {
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / M_PI;
}

std::array<GoldenRational, 3> sortedTriple(std::array<GoldenRational, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

GoldenRational sqGnomonLeg(const GoldenRational& sqEdge) { return sqEdge; }

GoldenRational sqGnomonBase(const GoldenRational& sqEdge) {
  const GoldenRational phi = GoldenRational::phi();
  return phi * phi * sqEdge;
}

bool isGnomonTriple(const std::array<GoldenRational, 3>& sqSides,
                    const GoldenRational& sqEdge) {
  return sortedTriple(sqSides) ==
         sortedTriple({sqGnomonLeg(sqEdge), sqGnomonLeg(sqEdge),
                       sqGnomonBase(sqEdge)});
}

std::array<GoldenRational, 3> squaredSides(const Triangle& tri) {
  // sides[i] is opposite corner i
  return {squaredDistance(tri[1], tri[2]), squaredDistance(tri[2], tri[0]),
          squaredDistance(tri[0], tri[1])};
}

}  // namespace

EdgeCheck checkEdgeDisjoint(const WingSet& ws) {
  EdgeCheck out;
  std::map<Edge, std::string> owner;
  for (const WingFace& f : ws.faces) {
    for (const Edge& e : f.edges()) {
      auto [it, inserted] = owner.emplace(e, f.name());
      if (!inserted) {
        out.duplicate_pairs.push_back(DuplicateEdge{e, it->second, f.name()});
      }
    }
  }
  out.pass = out.duplicate_pairs.empty();
  return out;
}

ShapeCheck checkFaceShapes(const LabeledIcosahedron& model, const WingSet& ws) {
  ShapeCheck out;
  const GoldenRational sqEdge = model.sqEdgeLength();
  const GoldenRational half = GoldenRational::rational(1, 2);
  const GoldenRational cosPole = GoldenRational::phi() * half;          // cos 36
  const GoldenRational cosBase = (1 - GoldenRational::phi()) * half;    // cos 108
  const auto expectedCos = sortedTriple({cosPole, cosPole, cosBase});

  for (const WingFace& f : ws.faces) {
    FaceShapeResult r;
    r.face = f.name();
    const Triangle tri = faceTriangle(model, f);
    r.sq_sides = squaredSides(tri);
    const bool sidesOk = isGnomonTriple(r.sq_sides, sqEdge);

    std::array<GoldenRational, 3> cosines;
    bool representable = true;
    for (int i = 0; i < 3; ++i) {
      const GoldenRational& a2 = r.sq_sides[i];
      const GoldenRational& b2 = r.sq_sides[(i + 1) % 3];
      const GoldenRational& c2 = r.sq_sides[(i + 2) % 3];
      // law of cosines: cos(angle at i) = (b^2 + c^2 - a^2) / (2 b c)
      const auto bc = detail::exactSqrt(b2 * c2);
      if (!bc || bc->isZero()) {
        representable = false;
        break;
      }
      cosines[i] = (b2 + c2 - a2) / (2 * *bc);
    }

    if (representable) {
      r.cos_angles = cosines;
      for (int i = 0; i < 3; ++i) {
        r.angles_deg_float[i] = degreesFromCos(cosines[i].toDouble());
      }
      r.pass = sidesOk && cosines[0] == cosPole &&
               sortedTriple(cosines) == expectedCos;
    } else {
      // Fall back to float angles for reporting; the face cannot pass.
      for (int i = 0; i < 3; ++i) {
        const double a2 = r.sq_sides[i].toDouble();
        const double b2 = r.sq_sides[(i + 1) % 3].toDouble();
        const double c2 = r.sq_sides[(i + 2) % 3].toDouble();
        const double denom = 2.0 * std::sqrt(b2 * c2);
        r.angles_deg_float[i] =
            denom > 0.0 ? degreesFromCos((b2 + c2 - a2) / denom) : 0.0;
      }
      r.pass = false;
    }
    out.per_face.push_back(std::move(r));
  }
  out.pass = std::all_of(out.per_face.begin(), out.per_face.end(),
                         [](const FaceShapeResult& r) { return r.pass; });
  return out;
}

DecagonCheck checkDecagonPoints(std::span<const DecagonPoint> points,
                                const ExactVec3& axis,
                                const GoldenRational& sqEdgeLength) {
  DecagonCheck out;
  const GoldenRational quarter = GoldenRational::rational(1, 4);
  out.sq_radius = sqGnomonBase(sqEdgeLength) * quarter;  // phi^2 l^2 / 4
  out.adjacent_cos = GoldenRational::phi() * GoldenRational::rational(1, 2);
  out.radius_float = std::sqrt(out.sq_radius.toDouble());
  out.spacing_deg_float = degreesFromCos(out.adjacent_cos.toDouble());

  out.coplanar = std::all_of(points.begin(), points.end(),
                             [&](const DecagonPoint& p) {
                               return p.point.dot(axis).isZero();
                             });
  out.radius_equal = std::all_of(points.begin(), points.end(),
                                 [&](const DecagonPoint& p) {
                                   return p.point.squaredNorm() ==
                                          out.sq_radius;
                                 });

  // Sort by angle in the equatorial plane. The basis is exact; only the
  // comparison key is float, and the resulting cyclic order is then verified
  // exactly via adjacent dot products.
  ExactVec3 e1 = axis.cross(ExactVec3(GoldenRational(1), GoldenRational(0),
                                      GoldenRational(0)));
  if (e1.x().isZero() && e1.y().isZero() && e1.z().isZero()) {
    e1 = axis.cross(ExactVec3(GoldenRational(0), GoldenRational(1),
                              GoldenRational(0)));
  }
  const ExactVec3 e2 = axis.cross(e1);
  const auto n = static_cast<int>(points.size());
  std::vector<int> order(points.size());
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    const double ai = std::atan2(points[i].point.dot(e2).toDouble(),
                                 points[i].point.dot(e1).toDouble());
    const double aj = std::atan2(points[j].point.dot(e2).toDouble(),
                                 points[j].point.dot(e1).toDouble());
    return ai < aj;
  });

  const GoldenRational expectedDot = out.adjacent_cos * out.sq_radius;
  out.spacing_equal = n >= 2;
  out.interlaced = n >= 2;
  for (int k = 0; k < n && n >= 2; ++k) {
    const DecagonPoint& cur = points[order[k]];
    const DecagonPoint& next = points[order[(k + 1) % n]];
    if (cur.point.dot(next.point) != expectedDot) out.spacing_equal = false;
    if (cur.pole == next.pole) out.interlaced = false;
  }
  out.angular_order.reserve(points.size());
  for (int k = 0; k < n; ++k) out.angular_order.push_back(points[order[k]].face);

  out.pass = n == 10 && out.coplanar && out.radius_equal && out.spacing_equal &&
             out.interlaced;
  return out;
}

DecagonCheck checkDecagon(const LabeledIcosahedron& model, const WingSet& ws) {
  const std::vector<ExactVec3> mids = representativePoints(model, ws);
  std::vector<DecagonPoint> points;
  points.reserve(mids.size());
  for (std::size_t i = 0; i < mids.size(); ++i) {
    points.push_back(
        DecagonPoint{mids[i], ws.faces[i].pole, ws.faces[i].name()});
  }
  return checkDecagonPoints(points, model.axis(), model.sqEdgeLength());
}

namespace {

std::array<Vertex, 10> ringVertices() {
  std::array<Vertex, 10> ring;
  for (int i = 0; i < 10; ++i) ring[i] = static_cast<Vertex>(2 + i);
  return ring;
}

std::vector<CandidateTriangle> candidatesFiltered(
    const LabeledIcosahedron& model, Pole pole, bool gnomonOnly) {
  std::vector<CandidateTriangle> out;
  const Vertex p = poleVertex(pole);
  const auto ring = ringVertices();
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const CandidateTriangle cand{pole, {p, ring[i], ring[j]}};
      if (gnomonOnly) {
        const Triangle tri{model.position(p), model.position(ring[i]),
                           model.position(ring[j])};
        if (!isGnomonTriple(squaredSides(tri), model.sqEdgeLength())) continue;
      }
      out.push_back(cand);
    }
  }
  return out;
}

}  // namespace

std::vector<CandidateTriangle> gnomonCandidates(const LabeledIcosahedron& model,
                                                Pole pole) {
  return candidatesFiltered(model, pole, true);
}

std::vector<CandidateTriangle> poleAnchoredCandidates(
    const LabeledIcosahedron& model, Pole pole) {
  return candidatesFiltered(model, pole, false);
}

namespace {

struct SearchCand {
  std::array<int, 3> edge_ids;
  int pole_side;  // 0 = north, 1 = south
};

int edgeId(const Edge& e) {
  return static_cast<int>(e.a) * kVertexCount + static_cast<int>(e.b);
}

class DisjointSearch {
 public:
  explicit DisjointSearch(std::span<const CandidateTriangle> candidates) {
    cands_.reserve(candidates.size());
    for (const CandidateTriangle& c : candidates) {
      SearchCand sc;
      const auto edges = c.edges();
      for (int k = 0; k < 3; ++k) sc.edge_ids[k] = edgeId(edges[k]);
      sc.pole_side = c.pole == Pole::South ? 1 : 0;
      cands_.push_back(sc);
    }
  }

  int run() {
    best_ = 0;
    used_.reset();
    dfs(0, 0, 10, 10);
    return best_;
  }

 private:
  // freeSouth/freeNorth: pole-incident vertex pairs still unused. Every
  // candidate consumes exactly two pairs at its own pole, so the pole
  // capacities bound how many more candidates can fit.
  void dfs(int idx, int count, int freeSouth, int freeNorth) {
    best_ = std::max(best_, count);
    const int n = static_cast<int>(cands_.size());
    const int capacity = freeSouth / 2 + freeNorth / 2;
    if (count + capacity <= best_) return;
    for (int i = idx; i < n; ++i) {
      if (count + (n - i) <= best_) return;
      const SearchCand& c = cands_[i];
      if (used_[c.edge_ids[0]] || used_[c.edge_ids[1]] || used_[c.edge_ids[2]])
        continue;
      for (int id : c.edge_ids) used_[id] = true;
      dfs(i + 1, count + 1, freeSouth - 2 * c.pole_side,
          freeNorth - 2 * (1 - c.pole_side));
      for (int id : c.edge_ids) used_[id] = false;
    }
  }

  std::vector<SearchCand> cands_;
  std::bitset<kVertexCount * kVertexCount> used_;
  int best_ = 0;
};

}  // namespace

int maxEdgeDisjointSubset(std::span<const CandidateTriangle> candidates) {
  return DisjointSearch(candidates).run();
}

MaximalityCheck checkMaximality(const LabeledIcosahedron& model) {
  MaximalityCheck out;
  const auto south = gnomonCandidates(model, Pole::South);
  const auto north = gnomonCandidates(model, Pole::North);
  out.candidates_south = static_cast<int>(south.size());
  out.candidates_north = static_cast<int>(north.size());
  out.max_per_south = maxEdgeDisjointSubset(south);
  out.max_per_north = maxEdgeDisjointSubset(north);
  std::vector<CandidateTriangle> joint = south;
  joint.insert(joint.end(), north.begin(), north.end());
  out.max_total = maxEdgeDisjointSubset(joint);

  const auto southAll = poleAnchoredCandidates(model, Pole::South);
  const auto northAll = poleAnchoredCandidates(model, Pole::North);
  out.unconstrained_per_south = maxEdgeDisjointSubset(southAll);
  out.unconstrained_per_north = maxEdgeDisjointSubset(northAll);
  std::vector<CandidateTriangle> jointAll = southAll;
  jointAll.insert(jointAll.end(), northAll.begin(), northAll.end());
  out.unconstrained_total = maxEdgeDisjointSubset(jointAll);

  out.pass =
      out.max_per_south == 5 && out.max_per_north == 5 && out.max_total == 10;
  return out;
}

IntersectionCheck checkNonIntersection(const LabeledIcosahedron& model,
                                       const WingSet& ws) {
  IntersectionCheck out;
  std::vector<Triangle> tris;
  tris.reserve(ws.faces.size());
  for (const WingFace& f : ws.faces) tris.push_back(faceTriangle(model, f));
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      ++out.pairs_tested;
      if (triangleInteriorsIntersect(tris[i], tris[j])) {
        out.offending_pairs.push_back(
            OverlapPair{ws.faces[i].name(), ws.faces[j].name()});
      }
    }
  }
  out.pass = out.offending_pairs.empty();
  return out;
}

ValidationReport runAll(const LabeledIcosahedron& model, const WingSet& ws) {
  ValidationReport rep;
  rep.edge_check = checkEdgeDisjoint(ws);
  rep.shape_check = checkFaceShapes(model, ws);
  rep.decagon_check = checkDecagon(model, ws);
  rep.maximality_check = checkMaximality(model);
  rep.intersection_check = checkNonIntersection(model, ws);
  rep.overall = rep.edge_check.pass && rep.shape_check.pass &&
                rep.decagon_check.pass && rep.maximality_check.pass &&
                rep.intersection_check.pass;
  return rep;
}

}  // namespace geowind
