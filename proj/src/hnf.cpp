#include "multitile/hnf.hpp"

#include <utility>

namespace multitile {

namespace {

IntegerMatrix identity(std::size_t n) {
  IntegerMatrix id(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// (r_i, r_j) <- (x r_i + y r_j, -b r_i + a r_j) on both matrices.
void combine_rows(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& x,
                  const Integer& y, const Integer& a, const Integer& b) {
  for (std::size_t c = 0; c < m[i].size(); ++c) {
    Integer ri = m[i][c];
    Integer rj = m[j][c];
    m[i][c] = x * ri + y * rj;
    m[j][c] = -b * ri + a * rj;
  }
}

void subtract_multiple(IntegerMatrix& m, std::size_t target, std::size_t source,
                       const Integer& q) {
  for (std::size_t c = 0; c < m[target].size(); ++c) m[target][c] -= q * m[source][c];
}

void negate_row(IntegerMatrix& m, std::size_t i) {
  for (Integer& v : m[i]) v = -v;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& input) {
  HermiteForm out;
  out.form = input;
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  out.transform = identity(rows);
  IntegerMatrix& h = out.form;
  IntegerMatrix& u = out.transform;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (h[i][col] == 0) continue;
      if (h[pivot_row][col] == 0) {
        std::swap(h[pivot_row], h[i]);
        std::swap(u[pivot_row], u[i]);
        continue;
      }
      Integer x, y;
      Integer g = extended_gcd(h[pivot_row][col], h[i][col], x, y);
      Integer a = h[pivot_row][col] / g;
      Integer b = h[i][col] / g;
      combine_rows(h, pivot_row, i, x, y, a, b);
      combine_rows(u, pivot_row, i, x, y, a, b);
    }
    if (h[pivot_row][col] == 0) continue;
    if (h[pivot_row][col] < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Integer& pivot = h[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[r][col].get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      subtract_multiple(h, r, pivot_row, q);
      subtract_multiple(u, r, pivot_row, q);
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  IntegerMatrix transposed(n, std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed[j][i] = a[i][j];
  }
  HermiteForm hf = hermite_normal_form(transposed);
  IntegerMatrix kernel(hf.transform.begin() + static_cast<std::ptrdiff_t>(hf.rank),
                       hf.transform.end());
  return hermite_normal_form(kernel).form;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace multitile
