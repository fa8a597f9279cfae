#include "wg/sparse.hpp"

#include <algorithm>

#include "wg/errors.hpp"

namespace wg {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
    for (const Triplet& t : triplets)
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw DomainError("sparse matrix triplet out of bounds");
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    ptr_.assign(rows + 1, 0);
    col_.reserve(triplets.size());
    val_.reserve(triplets.size());
    for (std::size_t i = 0; i < triplets.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < triplets.size() && triplets[j].row == triplets[i].row &&
               triplets[j].col == triplets[i].col)
            sum += triplets[j++].value;
        col_.push_back(triplets[i].col);
        val_.push_back(sum);
        ++ptr_[triplets[i].row + 1];
        i = j;
    }
    for (int r = 0; r < rows; ++r) ptr_[r + 1] += ptr_[r];
}

void SparseMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DomainError("sparse matvec: size mismatch");
    y.assign(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        double sum = 0.0;
        for (int s = ptr_[i]; s < ptr_[i + 1]; ++s) sum += val_[s] * x[col_[s]];
        y[i] = sum;
    }
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y;
    multiply(x, y);
    return y;
}

double SparseMatrix::coeff(int row, int col) const {
    for (int s = ptr_[row]; s < ptr_[row + 1]; ++s)
        if (col_[s] == col) return val_[s];
    return 0.0;
}

std::vector<double> SparseMatrix::diagonal() const {
    std::vector<double> d(rows_, 0.0);
    for (int i = 0; i < rows_ && i < cols_; ++i) d[i] = coeff(i, i);
    return d;
}

} // namespace wg
