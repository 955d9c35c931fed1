#include "vodsim/control_matrix.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vodsim/util.hpp"

namespace vodsim {

ControlMatrix::ControlMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0)
        throw ConfigError("control matrix must have positive dimensions");
    if (entries_.size() != rows_ * cols_)
        throw ConfigError("control matrix entry count does not match dimensions");
}

PolicyVector ControlMatrix::column(std::size_t column_index) const {
    if (column_index < 1 || column_index > cols_)
        throw ConfigError("policy column " + std::to_string(column_index) +
                          " out of range 1.." + std::to_string(cols_));
    PolicyVector v;
    v.probs.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.probs.push_back(at(r, column_index - 1));
    return v;
}

std::string ControlMatrix::to_csv() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += ',';
            out += format_double(at(r, c));
        }
        out += '\n';
    }
    return out;
}

ControlMatrix ControlMatrix::from_csv(const std::string& text) {
    std::vector<double> entries;
    std::size_t rows = 0, cols = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto row = parse_double_list(line);
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ConfigError("row " + std::to_string(rows + 1) + " has " +
                              std::to_string(row.size()) + " fields, expected " +
                              std::to_string(cols));
        entries.insert(entries.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0) throw ConfigError("control matrix file is empty");
    return ControlMatrix(rows, cols, std::move(entries));
}

ControlMatrix ControlMatrix::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv(buf.str());
}

void ControlMatrix::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write matrix file: " + path);
    out << to_csv();
}

std::string MatrixViolation::describe() const {
    if (kind == Kind::EntryOutOfRange)
        return "entry (" + std::to_string(row) + "," + std::to_string(col) +
               ") out of range [0,1]: " + format_double(value);
    return "column " + std::to_string(col) + " sums to " + format_double(value);
}

std::vector<MatrixViolation> validate_control_matrix(const ControlMatrix& m, double tolerance) {
    std::vector<MatrixViolation> report;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            double e = m.at(r, c);
            if (e < 0.0 || e > 1.0)
                report.push_back({MatrixViolation::Kind::EntryOutOfRange, r + 1, c + 1, e});
        }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) sum += m.at(r, c);
        if (std::abs(sum - 1.0) > tolerance + 1e-9)  // 1e-9 absorbs FP accumulation
            report.push_back({MatrixViolation::Kind::ColumnSum, 0, c + 1, sum});
    }
    return report;
}

PolicyVector select_policy_vector(const ControlMatrix& m, std::size_t column_index) {
    return m.column(column_index);
}

}  // namespace vodsim
