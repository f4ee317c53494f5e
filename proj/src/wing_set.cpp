#include "geowind/wing_set.hpp"

namespace geowind {

WingSet generateWingSet(const LabeledIcosahedron& model) {
  (void)model;  // faces are purely combinatorial; the model fixes the labels
  WingSet ws;
  ws.faces.reserve(10);
  for (int i = 1; i <= 5; ++i) {
    ws.faces.push_back(WingFace{
        Pole::South, i, {Vertex::S, upperVertex(i), lowerVertex(i)}});
  }
  for (int i = 1; i <= 5; ++i) {
    ws.faces.push_back(WingFace{
        Pole::North, i, {Vertex::N, upperVertex(i), lowerVertex(i - 1)}});
  }
  return ws;
}

std::array<ExactVec3, 3> faceTriangle(const LabeledIcosahedron& model,
                                      const WingFace& face) {
  return {model.position(face.vertices[0]), model.position(face.vertices[1]),
          model.position(face.vertices[2])};
}

std::vector<ExactVec3> representativePoints(const LabeledIcosahedron& model,
                                            const WingSet& ws) {
  std::vector<ExactVec3> out;
  out.reserve(ws.faces.size());
  for (const WingFace& face : ws.faces) {
    const Edge cross = face.crossEdge();
    out.push_back(midpoint(model.position(cross.a), model.position(cross.b)));
  }
  return out;
}

}  // namespace geowind
