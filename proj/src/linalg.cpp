#include "permv/linalg.hpp"

namespace permv {

std::vector<std::size_t> FieldMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && data_[pivot][col] == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap(data_[pivot], data_[row]);
        mpq_class inv = field_.inv(data_[row][col]);
        for (std::size_t c = col; c < cols_; ++c)
            data_[row][c] = field_.mul(data_[row][c], inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || data_[r][col] == 0) continue;
            mpq_class factor = data_[r][col];
            for (std::size_t c = col; c < cols_; ++c)
                data_[r][c] = field_.sub(data_[r][c], field_.mul(factor, data_[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<mpq_class>> FieldMatrix::nullspace() const {
    FieldMatrix work(*this);
    std::vector<std::size_t> pivots = work.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = field_.neg(work.data_[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t FieldMatrix::rank() const {
    FieldMatrix work(*this);
    return work.rref().size();
}

} // namespace permv
