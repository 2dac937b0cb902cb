#include "tto/antilinear.hpp"

#include <nlohmann/json.hpp>

namespace tto {

namespace {

void require_inner(int a_cols, int b_rows) {
  if (a_cols != b_rows) {
    throw DimensionError("composition size mismatch: " + std::to_string(a_cols) +
                         " vs " + std::to_string(b_rows));
  }
}

CMatrix vstack(const CMatrix& top, const CMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionError("diamond operands must share a domain");
  CMatrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

CMatrix hstack(const CMatrix& left, const CMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("boxplus operands must share a codomain");
  CMatrix out(left.rows(), left.cols() + right.cols());
  out.leftCols(left.cols()) = left;
  out.rightCols(right.cols()) = right;
  return out;
}

}  // namespace

AntilinearMap sharp(const AntilinearMap& x) { return AntilinearMap(x.m.transpose()); }

LinearMap adjoint(const LinearMap& a) { return LinearMap(a.m.adjoint()); }

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  require_inner(a.cols(), b.rows());
  return LinearMap(a.m * b.m);
}

AntilinearMap compose(const LinearMap& a, const AntilinearMap& b) {
  require_inner(a.cols(), b.rows());
  return AntilinearMap(a.m * b.m);
}

AntilinearMap compose(const AntilinearMap& a, const LinearMap& b) {
  require_inner(a.cols(), b.rows());
  return AntilinearMap(a.m * b.m.conjugate());
}

LinearMap compose(const AntilinearMap& a, const AntilinearMap& b) {
  require_inner(a.cols(), b.rows());
  return LinearMap(a.m * b.m.conjugate());
}

LinearMap diamond(const LinearMap& x1, const LinearMap& x2) {
  return LinearMap(vstack(x1.m, x2.m));
}

AntilinearMap diamond(const AntilinearMap& x1, const AntilinearMap& x2) {
  return AntilinearMap(vstack(x1.m, x2.m));
}

LinearMap boxplus(const LinearMap& y1, const LinearMap& y2) {
  return LinearMap(hstack(y1.m, y2.m));
}

AntilinearMap boxplus(const AntilinearMap& y1, const AntilinearMap& y2) {
  return AntilinearMap(hstack(y1.m, y2.m));
}

LinearMap block_diag(const LinearMap& a, const LinearMap& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a.m;
  out.bottomRightCorner(b.rows(), b.cols()) = b.m;
  return LinearMap(out);
}

bool check_conjugation(const AntilinearMap& c, double tol) {
  if (c.rows() != c.cols()) return false;
  const int n = c.rows();
  const double unitary_defect =
      operator_norm(c.m * c.m.adjoint() - CMatrix::Identity(n, n));
  const double symmetry_defect = operator_norm(c.m - c.m.transpose().eval());
  return unitary_defect <= tol && symmetry_defect <= tol;
}

bool check_antiselfadjoint(const AntilinearMap& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return operator_norm(x.m - x.m.transpose().eval()) <= tol;
}

ConjugationPair c_pair(const AntilinearMap& c1, const AntilinearMap& c2, double tol) {
  if (c1.rows() != c2.rows() || c1.cols() != c2.cols() || c1.rows() != c1.cols()) {
    throw DimensionError("c_pair wants two square maps of equal size");
  }
  if (!check_conjugation(c1, tol) || !check_conjugation(c2, tol)) {
    throw ValidationError("c_pair operand failed the conjugation check");
  }
  const double s = 1.0 / std::sqrt(2.0);
  ConjugationPair out;
  out.c_diamond = AntilinearMap(s * vstack(c1.m, c2.m));
  out.c_boxplus = AntilinearMap(s * hstack(c1.m, c2.m));
  out.q = compose(out.c_diamond, out.c_boxplus);
  return out;
}

double operator_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double max_abs_entry(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

int numerical_rank(const CMatrix& m, double threshold) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto sv = m.jacobiSvd().singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return rank;
}

namespace {

nlohmann::json matrix_to_json(const CMatrix& m, const char* kind) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"kind", kind}, {"entries", entries}};
}

}  // namespace

nlohmann::json to_json(const LinearMap& a) { return matrix_to_json(a.m, "linear"); }

nlohmann::json to_json(const AntilinearMap& x) { return matrix_to_json(x.m, "antilinear"); }

CMatrix matrix_from_json(const nlohmann::json& j, std::string* kind) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw ValidationError("matrix entry count does not match rows*cols");
  }
  CMatrix m(rows, cols);
  int idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int j2 = 0; j2 < cols; ++j2, ++idx)
      m(i, j2) = Complex(entries[idx].at(0).get<double>(), entries[idx].at(1).get<double>());
  if (kind) *kind = j.at("kind").get<std::string>();
  return m;
}

}  // namespace tto
