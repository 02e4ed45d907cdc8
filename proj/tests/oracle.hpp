#pragma once

// Straight-line arithmetic re-implementation of the decision math, used to
// cross-check the library. Deliberately shares no code with include/vhsim:
// plain loops, natural accumulation order, no helpers.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

enum class Norm { Max, Min, InvMin, Vec };

using Matrix = std::vector<std::vector<double>>;

inline std::vector<double> normalize(const Matrix& m, std::size_t j, Norm norm) {
  const std::size_t n = m.size();
  std::vector<double> out(n);
  double mx = m[0][j], mn = m[0][j], ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][j] > mx) mx = m[i][j];
    if (m[i][j] < mn) mn = m[i][j];
    ss += m[i][j] * m[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    switch (norm) {
      case Norm::Max: out[i] = m[i][j] / mx; break;
      case Norm::Min: out[i] = mn / m[i][j]; break;
      case Norm::InvMin: out[i] = m[i][j] / mn; break;
      case Norm::Vec: out[i] = m[i][j] / std::sqrt(ss); break;
    }
  }
  return out;
}

inline std::vector<double> saw(const Matrix& m, const std::vector<double>& w,
                               const std::vector<Norm>& norms) {
  const std::size_t rows = m.size(), cols = w.size();
  std::vector<std::vector<double>> cols_norm(cols);
  for (std::size_t j = 0; j < cols; ++j) cols_norm[j] = normalize(m, j, norms[j]);
  std::vector<double> scores(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) scores[i] += w[j] * cols_norm[j][i];
  return scores;
}

struct TopsisTrace {
  Matrix weighted;
  std::vector<double> positive_ideal;
  std::vector<double> negative_ideal;
  std::vector<double> s_plus;
  std::vector<double> s_minus;
  std::vector<double> closeness;
};

inline TopsisTrace topsis(const Matrix& m, const std::vector<double>& w,
                          const std::vector<bool>& benefit) {
  const std::size_t rows = m.size(), cols = w.size();
  TopsisTrace t;
  t.weighted.assign(rows, std::vector<double>(cols, 0.0));
  for (std::size_t j = 0; j < cols; ++j) {
    double ss = 0.0;
    for (std::size_t i = 0; i < rows; ++i) ss += m[i][j] * m[i][j];
    const double norm = std::sqrt(ss);
    for (std::size_t i = 0; i < rows; ++i) t.weighted[i][j] = w[j] * m[i][j] / norm;
  }
  t.positive_ideal.resize(cols);
  t.negative_ideal.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double mx = t.weighted[0][j], mn = t.weighted[0][j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (t.weighted[i][j] > mx) mx = t.weighted[i][j];
      if (t.weighted[i][j] < mn) mn = t.weighted[i][j];
    }
    t.positive_ideal[j] = benefit[j] ? mx : mn;
    t.negative_ideal[j] = benefit[j] ? mn : mx;
  }
  t.s_plus.assign(rows, 0.0);
  t.s_minus.assign(rows, 0.0);
  t.closeness.assign(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double dp = 0.0, dn = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      dp += (t.weighted[i][j] - t.positive_ideal[j]) *
            (t.weighted[i][j] - t.positive_ideal[j]);
      dn += (t.weighted[i][j] - t.negative_ideal[j]) *
            (t.weighted[i][j] - t.negative_ideal[j]);
    }
    t.s_plus[i] = std::sqrt(dp);
    t.s_minus[i] = std::sqrt(dn);
    t.closeness[i] = t.s_minus[i] / (t.s_minus[i] + t.s_plus[i]);
  }
  return t;
}

}  // namespace oracle
