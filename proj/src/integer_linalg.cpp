#include "symquot/integer_linalg.hpp"

#include "symquot/errors.hpp"

#include <utility>

namespace symquot {

void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

RowHermiteForm row_hermite_form(const IntegerMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  RowHermiteForm out;
  out.hermite = a;
  out.transform = IntegerMatrix::Identity(m, m);
  out.inverse_transform = IntegerMatrix::Identity(m, m);
  IntegerMatrix& h = out.hermite;
  IntegerMatrix& u = out.transform;
  IntegerMatrix& ui = out.inverse_transform;

  // Applies [[p, q], [r, s]] (determinant 1) to rows i, j.
  auto combine = [&](Index i, Index j, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    for (IntegerMatrix* mat : {&h, &u}) {
      for (Index c = 0; c < mat->cols(); ++c) {
        Integer vi = (*mat)(i, c), vj = (*mat)(j, c);
        (*mat)(i, c) = p * vi + q * vj;
        (*mat)(j, c) = r * vi + s * vj;
      }
    }
    // Inverse is [[s, -q], [-r, p]] applied on the right to columns i, j.
    for (Index row = 0; row < m; ++row) {
      Integer ci = ui(row, i), cj = ui(row, j);
      ui(row, i) = ci * s - cj * r;
      ui(row, j) = -ci * q + cj * p;
    }
  };

  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    for (Index i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      Integer g, x, y;
      const Integer p = h(r, c), q = h(i, c);
      extended_gcd(p, q, g, x, y);
      combine(r, i, x, y, Integer(-q / g), Integer(p / g));
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
      ui.col(r) = -ui.col(r);
    }
    for (Index i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      h.row(i) -= q * h.row(r);
      u.row(i) -= q * u.row(r);
      ui.col(r) += q * ui.col(i);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

SmithForm smith_form(const IntegerMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  SmithForm out;
  out.diagonal = a;
  out.left = IntegerMatrix::Identity(m, m);
  out.right = IntegerMatrix::Identity(n, n);
  IntegerMatrix& s = out.diagonal;
  IntegerMatrix& left = out.left;
  IntegerMatrix& right = out.right;

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    s.row(i).swap(s.row(j));
    left.row(i).swap(left.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    s.col(i).swap(s.col(j));
    right.col(i).swap(right.col(j));
  };

  for (Index t = 0; t < std::min(m, n); ++t) {
    Index bi = -1, bj = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j)
        if (s(i, j) != 0 && (bi < 0 || abs(s(i, j)) < abs(s(bi, bj)))) bi = i, bj = j;
    if (bi < 0) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        s.row(i) -= q * s.row(t);
        left.row(i) -= q * left.row(t);
        if (s(i, t) != 0) {
          swap_rows(i, t);
          clean = false;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        s.col(j) -= q * s.col(t);
        right.col(j) -= q * right.col(t);
        if (s(t, j) != 0) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (clean) {
        for (Index i = t + 1; i < m && clean; ++i)
          for (Index j = t + 1; j < n; ++j)
            if (s(i, j) % s(t, t) != 0) {
              s.row(t) += s.row(i);
              left.row(t) += left.row(i);
              clean = false;
              break;
            }
      }
      if (clean) break;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      left.row(t) = -left.row(t);
    }
    out.invariant_factors.push_back(s(t, t));
  }
  return out;
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& a) {
  const Index n = a.cols();
  RowHermiteForm h = row_hermite_form(IntegerMatrix(a.transpose()));
  const Index r = h.rank();
  return IntegerMatrix(h.transform.bottomRows(n - r).transpose());
}

SaturatedBasis saturate_columns(const IntegerMatrix& r) {
  RowHermiteForm h = row_hermite_form(r);
  const Index k = r.cols();
  if (h.rank() != k) throw PreconditionError("saturation needs linearly independent columns");
  return {IntegerMatrix(h.inverse_transform.leftCols(k)), IntegerMatrix(h.hermite.topRows(k))};
}

std::vector<Index> independent_rows(const IntegerMatrix& a) {
  std::vector<Index> rows;
  IntegerMatrix chosen(0, a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    IntegerMatrix trial(chosen.rows() + 1, a.cols());
    trial.topRows(chosen.rows()) = chosen;
    trial.row(chosen.rows()) = a.row(i);
    if (exact_rank(trial) == trial.rows()) {
      chosen = std::move(trial);
      rows.push_back(i);
    }
  }
  return rows;
}

}  // namespace symquot
