#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbound::linalg {

/// Dense real symmetric matrix, row-major storage. Entries are symmetrized
/// once at construction (average of the two mirror entries) and stay exactly
/// symmetric afterwards: set(i, j, v) writes both (i,j) and (j,i).
class SymMatrix {
 public:
  /// Zero matrix of order n.
  explicit SymMatrix(int n) : n_(checked_order(n)), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  /// From raw row-major entries; symmetrizes and rejects non-finite input.
  SymMatrix(int n, const std::vector<double>& raw) : SymMatrix(n) {
    if (raw.size() != a_.size()) {
      throw std::invalid_argument("SymMatrix: expected " + std::to_string(a_.size()) +
                                  " entries, got " + std::to_string(raw.size()));
    }
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (!std::isfinite(raw[k])) {
        throw std::invalid_argument("SymMatrix: non-finite entry at (" +
                                    std::to_string(k / n) + "," + std::to_string(k % n) + ")");
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double v = 0.5 * (raw[idx(i, j)] + raw[idx(j, i)]);
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
      }
    }
  }

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.a_[m.idx(i, i)] = 1.0;
    return m;
  }

  int order() const { return n_; }

  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  /// Writes both mirror entries, preserving exact symmetry.
  void set(int i, int j, double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix::set: non-finite value");
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  const std::vector<double>& data() const { return a_; }

  /// Membership in the box class: every entry in [0, 1].
  bool is_box_class() const {
    for (double v : a_)
      if (v < 0.0 || v > 1.0) return false;
    return true;
  }

  /// Off-diagonal entries in [0, 1] and nonnegative diagonal.
  bool is_theorem_class() const { return theorem_class_violations(1).empty(); }

  /// Human-readable descriptions of entries violating the theorem-class
  /// hypotheses, at most max_items of them (upper triangle scan order).
  std::vector<std::string> theorem_class_violations(int max_items = 16) const {
    std::vector<std::string> out;
    for (int i = 0; i < n_ && static_cast<int>(out.size()) < max_items; ++i) {
      if (a_[idx(i, i)] < 0.0) {
        out.push_back("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") = " +
                      format(a_[idx(i, i)]) + " is negative");
      }
      for (int j = i + 1; j < n_ && static_cast<int>(out.size()) < max_items; ++j) {
        const double v = a_[idx(i, j)];
        if (v < 0.0 || v > 1.0) {
          out.push_back("off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + format(v) + " outside [0,1]");
        }
      }
    }
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

 private:
  static int checked_order(int n) {
    if (n < 1) throw std::invalid_argument("SymMatrix: order must be positive");
    return n;
  }
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }
  static std::string format(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  int n_;
  std::vector<double> a_;
};

/// Eigenvalues sorted descending with 1-based accessors, so eig(1) is the
/// largest and eig(n) the smallest.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> descending) : v_(std::move(descending)) {
    if (v_.empty()) throw std::invalid_argument("Spectrum: empty value list");
    for (std::size_t k = 0; k + 1 < v_.size(); ++k) {
      if (v_[k] < v_[k + 1]) throw std::logic_error("Spectrum: values not sorted descending");
    }
  }

  int order() const { return static_cast<int>(v_.size()); }

  double eig(int i) const {
    if (i < 1 || i > order()) {
      throw std::out_of_range("Spectrum::eig: index " + std::to_string(i) +
                              " outside [1," + std::to_string(order()) + "]");
    }
    return v_[static_cast<std::size_t>(i) - 1];
  }

  const std::vector<double>& values() const { return v_; }

 private:
  std::vector<double> v_;
};

struct LoadedMatrix {
  SymMatrix matrix;
  double max_asymmetry;  // max |raw_ij - raw_ji| before symmetrization
};

/// Plain-text interchange: first line n, then n rows of n decimal floats.
inline LoadedMatrix read_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::runtime_error("matrix parse error: missing order line");
  if (n < 1) throw std::runtime_error("matrix parse error: order must be positive");
  std::vector<double> raw(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> raw[static_cast<std::size_t>(i) * n + j])) {
        throw std::runtime_error("matrix parse error: expected number at row " +
                                 std::to_string(i) + ", column " + std::to_string(j));
      }
    }
  }
  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(raw[static_cast<std::size_t>(i) * n + j] -
                                     raw[static_cast<std::size_t>(j) * n + i]));
  return LoadedMatrix{SymMatrix(n, raw), asym};
}

inline LoadedMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const SymMatrix& a) {
  const int n = a.order();
  out << n << '\n';
  out << std::setprecision(17);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
}

}  // namespace specbound::linalg
