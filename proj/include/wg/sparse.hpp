#pragma once

#include <cstddef>
#include <vector>

namespace wg {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

// Compressed sparse rows assembled from triplets; duplicates are summed in
// sorted (row, col) order, so assembly is deterministic for a fixed triplet
// sequence.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, std::vector<Triplet> triplets);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzeros() const { return val_.size(); }

    void multiply(const std::vector<double>& x, std::vector<double>& y) const;
    std::vector<double> multiply(const std::vector<double>& x) const;

    double coeff(int row, int col) const;
    std::vector<double> diagonal() const;

    template <typename F> // F(row, col, value)
    void for_each(F&& f) const {
        for (int i = 0; i < rows_; ++i)
            for (int s = ptr_[i]; s < ptr_[i + 1]; ++s) f(i, col_[s], val_[s]);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> ptr_{0};
    std::vector<int> col_;
    std::vector<double> val_;
};

} // namespace wg
