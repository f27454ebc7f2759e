#include "cylrig/linear_algebra.hpp"

#include "cylrig/error.hpp"

namespace cylrig {

int exact_rank(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<mpz_class>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("exact_rank: ragged rows");
    mpz_class l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> ir;
    ir.reserve(cols);
    for (const auto& x : r) ir.push_back(x.get_num() * (l / x.get_den()));
    m.push_back(std::move(ir));
  }

  const std::size_t n = m.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const mpz_class& p = m[rank][c];
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = m[i][j] * p - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues();
}

int float_rank(const Eigen::MatrixXd& m, double tau) {
  Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tau * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

}  // namespace cylrig
