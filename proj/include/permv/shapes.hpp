#ifndef PERMV_SHAPES_HPP
#define PERMV_SHAPES_HPP

#include <string>
#include <vector>

#include "permv/ideal.hpp"

namespace permv {

enum class Family { generic, symmetric, hankel };

std::string family_name(Family f);

// Matrix family, minor size, and coefficient field. Generic shapes with
// m > n are transposed at construction (P_t is transpose-invariant).
struct ShapeSpec {
    Family family = Family::generic;
    int rows = 2;
    int cols = 2;
    int minor = 2;
    FieldSpec field{0};

    // "generic:MxN", "symmetric:N", "hankel:MxN", optional ":t=T".
    static ShapeSpec parse(const std::string& text, FieldSpec field = FieldSpec(0));
    std::string to_string() const;
    void validate() const;
};

// Grid of ring variables following the shape's naming scheme:
// generic x_i_j (row-major), symmetric y_i_j (i <= j), hankel x_{i+j-1}.
class SymbolicMatrix {
  public:
    SymbolicMatrix(RingPtr ring, int rows, int cols, std::vector<std::size_t> entries)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {}

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // 1-based; returns the ring variable index at (i, j).
    std::size_t entry(int i, int j) const { return entries_[std::size_t(i - 1) * cols_ + (j - 1)]; }

  private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<std::size_t> entries_;
};

SymbolicMatrix build_matrix(const ShapeSpec& shape);

// The paper's order for each family; coincides with lex over the natural
// variable sequence of the shape's ring.
MonomialOrder shape_order(const ShapeSpec& shape);

Polynomial subpermanent(const SymbolicMatrix& M, const std::vector<int>& rows,
                        const std::vector<int>& cols, const MonomialOrder& order);
Polynomial subdeterminant(const SymbolicMatrix& M, const std::vector<int>& rows,
                          const std::vector<int>& cols, const MonomialOrder& order);

// All distinct t x t subpermanents (duplicates from symmetry removed).
Ideal permanental_ideal(const ShapeSpec& shape);
Ideal determinantal_ideal(const ShapeSpec& shape);

} // namespace permv

#endif
