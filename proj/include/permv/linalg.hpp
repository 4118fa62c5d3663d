#ifndef PERMV_LINALG_HPP
#define PERMV_LINALG_HPP

#include <vector>

#include "permv/field.hpp"

namespace permv {

// Dense exact matrix over the coefficient field; just enough for degree-slice
// nullspace computations.
class FieldMatrix {
  public:
    FieldMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
        : rows_(rows), cols_(cols), field_(std::move(field)),
          data_(rows, std::vector<mpq_class>(cols, 0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpq_class& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

    // In-place reduced row echelon form; returns pivot column indices in
    // increasing order. Deterministic: first nonzero entry per column sweep.
    std::vector<std::size_t> rref();

    // Basis of {x : Mx = 0} in reduced echelon convention: one vector per
    // free column, unit coefficient at that column. Deterministic.
    std::vector<std::vector<mpq_class>> nullspace() const;

    std::size_t rank() const;

  private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<std::vector<mpq_class>> data_;
};

} // namespace permv

#endif
