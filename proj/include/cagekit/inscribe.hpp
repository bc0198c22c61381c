#pragma once

#include <map>

#include "cagekit/cage.hpp"

namespace cagekit {

/// n x n matrix whose row j is the differential of the colour-j group product
/// at the node, in the affine chart where the node's last nonzero coordinate is 1
/// (chart coordinate dropped).
Matrix node_differentials(const Cage& c, const Node& p);

/// Subspace of the chart-local tangent space F^n at a node.
struct TangentSubspace {
  Node node;
  std::size_t chart = 0;
  SubspaceBasis basis;

  std::size_t dim() const { return basis.dim(); }
};

/// Tangent subspace spanned by chart-local vectors (which may be dependent).
TangentSubspace make_tangent(const Node& node, const std::vector<Vector>& vectors);
bool same_tangent(const TangentSubspace& a, const TangentSubspace& b);
bool same_row_span(const LambdaMatrix& a, const LambdaMatrix& b);

/// The s = n - dim(tau) pencils through every node whose common tangent space
/// at p is tau. Rows are the canonical kernel basis, so equal spans give
/// identical output. NothingToInscribe when tau is the whole tangent space.
LambdaMatrix inscribe_with_tangent(const Cage& c, const Node& p, const TangentSubspace& tau);

/// Kernel of the chart-local Jacobian of the pencils at q. SingularNode if its rank is below s.
TangentSubspace tangent_at_node(const LambdaMatrix& v, const Cage& c, const Node& q);

struct Propagation {
  LambdaMatrix variety;
  std::map<MultiIndex, TangentSubspace> tangents;  // every node except the source
};

Propagation propagate_tangents(const Cage& c, const Node& p, const TangentSubspace& tau);

/// Projective tangent space in F^{n+1}: span of the node and the lifted tangent vectors.
SubspaceBasis tangent_cone(const TangentSubspace& tau);
/// Inverse of tangent_cone at the given node.
TangentSubspace tangent_from_cone(const Node& node, const SubspaceBasis& cone);

}  // namespace cagekit
