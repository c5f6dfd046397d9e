#include "qkle/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qkle/types.hpp"

namespace qkle::gf2 {

Matrix::Matrix(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > 64) throw std::invalid_argument("GF(2) column count out of range");
  for (auto r : rows_) {
    if (r & ~low_mask(n)) throw std::invalid_argument("row wider than the matrix");
  }
}

void Matrix::push_back(Row r) {
  if (r & ~low_mask(n_)) throw std::invalid_argument("row wider than the matrix");
  rows_.push_back(r);
}

int dot(Row a, Row b) { return std::popcount(a & b) & 1; }

std::vector<Row> canonical_basis(std::span<const Row> rows, int n) {
  std::vector<Row> basis;
  for (Row r : rows) {
    r &= low_mask(n);
    for (Row b : basis) {
      const Row lead = Row{1} << (63 - std::countl_zero(b));
      if (r & lead) r ^= b;
    }
    if (!r) continue;
    const Row lead = Row{1} << (63 - std::countl_zero(r));
    for (Row& b : basis) {
      if (b & lead) b ^= r;
    }
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

int rank(std::span<const Row> rows, int n) {
  std::vector<Row> pivots;
  for (Row r : rows) {
    r &= low_mask(n);
    for (Row p : pivots) r = std::min(r, r ^ p);
    if (r) {
      pivots.push_back(r);
      std::sort(pivots.begin(), pivots.end(), std::greater<>());
    }
  }
  return static_cast<int>(pivots.size());
}

int rank(const Matrix& m) { return rank(m.rows(), m.cols()); }

std::vector<Row> nullspace_basis(const Matrix& m) {
  const int n = m.cols();
  const auto basis = canonical_basis(m.rows(), n);
  Row pivot_mask = 0;
  for (Row b : basis) pivot_mask |= Row{1} << (63 - std::countl_zero(b));

  // One null vector per free column f: set bit f, and each pivot bit whose row has f set.
  std::vector<Row> out;
  for (int f = 0; f < n; ++f) {
    const Row fbit = Row{1} << f;
    if (pivot_mask & fbit) continue;
    Row v = fbit;
    for (Row b : basis) {
      if (b & fbit) v |= Row{1} << (63 - std::countl_zero(b));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Row> span_of(std::span<const Row> basis) {
  if (basis.size() > 24) throw std::invalid_argument("span too large to enumerate");
  std::vector<Row> out{0};
  out.reserve(std::size_t{1} << basis.size());
  for (Row b : basis) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

PeriodResult recover_period(std::span<const Row> samples, int n) {
  PeriodResult result;
  Matrix m(n, std::vector<Row>(samples.begin(), samples.end()));
  result.rank = rank(m);
  if (result.rank == n) {
    result.outcome = PeriodOutcome::Injective;
  } else if (result.rank == n - 1) {
    result.outcome = PeriodOutcome::Period;
    result.period = nullspace_basis(m).front();
  } else {
    result.outcome = PeriodOutcome::Undetermined;
  }
  return result;
}

}  // namespace qkle::gf2
