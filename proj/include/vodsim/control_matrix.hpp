#ifndef VODSIM_CONTROL_MATRIX_HPP
#define VODSIM_CONTROL_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace vodsim {

// One column of the control matrix: per-partition admission probabilities.
struct PolicyVector {
    std::vector<double> probs;

    std::size_t size() const { return probs.size(); }
    double operator[](std::size_t i) const { return probs[i]; }
};

// k rows (sections/classes) x n columns (alternative policy vectors),
// row-major. Entries are probabilities; each column should sum to ~1.
class ControlMatrix {
public:
    ControlMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }

    // column_index is 1-based to match the table convention.
    PolicyVector column(std::size_t column_index) const;

    std::string to_csv() const;
    static ControlMatrix from_csv(const std::string& text);
    static ControlMatrix load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;  // row-major
};

struct MatrixViolation {
    enum class Kind { EntryOutOfRange, ColumnSum };
    Kind kind;
    std::size_t row = 0;  // 1-based; 0 for column-sum violations
    std::size_t col = 0;  // 1-based
    double value = 0.0;   // offending entry or column sum
    std::string describe() const;
};

// Empty report means valid. Column sums are allowed to deviate from 1 by
// up to `tolerance` (plus a 1e-9 floating guard).
std::vector<MatrixViolation> validate_control_matrix(const ControlMatrix& m, double tolerance);

PolicyVector select_policy_vector(const ControlMatrix& m, std::size_t column_index);

}  // namespace vodsim

#endif
