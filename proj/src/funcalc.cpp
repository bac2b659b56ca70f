#include "cstar/funcalc.hpp"

namespace cstar {

CStarMatrix<BlockElement> quat_embed(const CStarMatrix<QuaternionElement>& a) {
  const int n = a.order();
  CStarMatrix<BlockElement> m(n, BlockElement(2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.in_pattern(i, j)) m.set(i, j, quat_to_block(a.at(i, j)));
  return m;
}

CStarMatrix<QuaternionElement> quat_unembed(const CStarMatrix<BlockElement>& m) {
  if (m.prototype().k() != 2)
    throw IncompatibleOperands("quaternion image must have 2x2 blocks");
  const int n = m.order();
  CStarMatrix<QuaternionElement> a(n, QuaternionElement());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.in_pattern(i, j)) a.set(i, j, block_to_quat(m.at(i, j)));
  return a;
}

MatFunResult<QuaternionElement> matfun_quaternion_embedded(
    const CStarMatrix<QuaternionElement>& a, const PowerSeries& ps, int k) {
  MatFunResult<BlockElement> image = matfun_power_series(quat_embed(a), ps, k);
  MatFunResult<QuaternionElement> out{quat_unembed(image.value)};
  out.degree = image.degree;
  out.certificate = image.certificate;
  out.enclosure_radius = image.enclosure_radius;
  return out;
}

}  // namespace cstar
