#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <stdexcept>
#include <string>

namespace dwd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
// Feature-major storage: column j holds sample j (d rows, n columns).
using SparseColMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using Index = Eigen::Index;

// Malformed user input: bad file contents, inconsistent dimensions,
// out-of-range parameters.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure in an input stream; message carries the 1-based line number.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Breakdown of a numerical routine (factorization failure, divergence).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dwd
