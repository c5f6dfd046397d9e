#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qkle::gf2 {

using Row = std::uint64_t;

// Rows of n-bit vectors over GF(2), n <= 64. Row order is preserved.
class Matrix {
 public:
  explicit Matrix(int n) : n_(n) {}
  Matrix(int n, std::vector<Row> rows);

  int cols() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  void push_back(Row r);

 private:
  int n_;
  std::vector<Row> rows_;
};

int dot(Row a, Row b);

int rank(const Matrix& m);
int rank(std::span<const Row> rows, int n);

// Basis of {v : dot(r, v) = 0 for every row r}; has n - rank elements.
std::vector<Row> nullspace_basis(const Matrix& m);

// Every element of span(basis), 0 first. Intended for small bases.
std::vector<Row> span_of(std::span<const Row> basis);

// Reduced row echelon basis of span(rows), sorted by decreasing leading bit.
// Equal spans give equal results.
std::vector<Row> canonical_basis(std::span<const Row> rows, int n);

enum class PeriodOutcome { Period, Injective, Undetermined };

struct PeriodResult {
  PeriodOutcome outcome = PeriodOutcome::Undetermined;
  Row period = 0;  // set for Period
  int rank = 0;
};

PeriodResult recover_period(std::span<const Row> samples, int n);

}  // namespace qkle::gf2
