#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "supertrop/scalar.hpp"

namespace supertrop {

/// Dense square matrix over S, row-major, indices 0-based.
class Matrix {
public:
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n) { check_order(); }

  Matrix(std::size_t n, std::vector<Scalar> entries)
      : n_(n), entries_(std::move(entries)) {
    check_order();
    if (entries_.size() != n_ * n_)
      throw std::invalid_argument("Matrix: expected n*n entries");
  }

  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
      : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto &row : rows) {
      if (row.size() != n_)
        throw std::invalid_argument("Matrix: ragged initializer");
      std::size_t j = 0;
      for (const auto &s : row)
        (*this)(i, j++) = s;
      ++i;
    }
  }

  /// Supertropical identity: 0t on the diagonal, eps elsewhere.
  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = Scalar::one();
    return m;
  }

  std::size_t order() const { return n_; }

  Scalar &operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }
  const Scalar &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  std::span<const Scalar> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const Scalar> entries() const { return entries_; }

  Matrix transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

  /// "n\n" followed by n lines of n space-separated scalar tokens.
  std::string to_text() const {
    std::string out = std::to_string(n_) + '\n';
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j)
          out += ' ';
        out += (*this)(i, j).to_string();
      }
      out += '\n';
    }
    return out;
  }

  /// Single-line form used in reports: rows separated by ';'.
  std::string to_compact() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i)
        out += ';';
      for (std::size_t j = 0; j < n_; ++j) {
        if (j)
          out += ' ';
        out += (*this)(i, j).to_string();
      }
    }
    return out;
  }

  static Matrix read(std::istream &in) {
    std::string line;
    std::size_t n = 0;
    if (!next_line(in, line))
      throw ParseError("matrix: missing order line");
    {
      std::istringstream head(line);
      std::string extra;
      if (!(head >> n) || n == 0 || (head >> extra))
        throw ParseError("matrix: bad order line '" + line + "'");
    }
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!next_line(in, line))
        throw ParseError("matrix: expected " + std::to_string(n) + " rows");
      std::istringstream row(line);
      std::string tok;
      std::size_t j = 0;
      while (row >> tok) {
        if (j == n)
          throw ParseError("matrix: row " + std::to_string(i + 1) +
                           " has too many entries");
        m(i, j++) = Scalar::parse(tok);
      }
      if (j != n)
        throw ParseError("matrix: row " + std::to_string(i + 1) +
                         " has too few entries");
    }
    while (next_line(in, line))
      throw ParseError("matrix: trailing content '" + line + "'");
    return m;
  }

  static Matrix parse(const std::string &text) {
    std::istringstream in(text);
    return read(in);
  }

private:
  std::size_t n_;
  std::vector<Scalar> entries_;

  void check_order() const {
    if (n_ == 0)
      throw std::invalid_argument("Matrix: order must be positive");
  }

  // Skips blank lines.
  static bool next_line(std::istream &in, std::string &line) {
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    return false;
  }
};

/// Entrywise c (.) A.
inline Matrix scaled(const Matrix &a, const Scalar &c) {
  Matrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      r(i, j) = mul(c, a(i, j));
  return r;
}

} // namespace supertrop
