#pragma once

// SAW and TOPSIS ranking over a decision matrix with per-criterion
// direction, weight and normalization strategy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vhsim/error.hpp"

namespace vhsim::madm {

enum class Direction { Benefit, Cost };

enum class Normalization { MaxRatio, MinRatio, InverseMinRatio, VectorNorm };

enum class Method { Saw, Topsis };

/// Scores closer than this are treated as numerically tied and ordered by
/// ascending alternative id.
inline constexpr double score_tie_epsilon = 1e-12;

/// Tolerance on |sum(weights) - 1|.
inline constexpr double weight_sum_tolerance = 1e-9;

struct CriterionSpec {
  std::string name;
  Direction direction = Direction::Benefit;
  double weight = 0.0;
  Normalization normalization = Normalization::MaxRatio;
};

/// Raw performance values; row = alternative, column = criterion.
struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> values;

  std::size_t rows() const { return values.size(); }
  std::size_t cols() const { return values.empty() ? 0 : values.front().size(); }
};

/// Same shape as DecisionMatrix, values already on a comparable scale.
struct NormalizedMatrix {
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> values;

  std::size_t rows() const { return values.size(); }
  std::size_t cols() const { return values.empty() ? 0 : values.front().size(); }
};

struct RankedAlternative {
  std::string id;
  double score = 0.0;
};

/// Alternatives ordered best first.
struct Ranking {
  Method method = Method::Saw;
  std::vector<RankedAlternative> entries;
};

struct Ideals {
  std::vector<double> positive;
  std::vector<double> negative;
};

struct Separations {
  std::vector<double> to_positive;
  std::vector<double> to_negative;
};

namespace detail {

// Sum of squares accumulated in ascending value order so that column
// reductions do not depend on the row order of the matrix.
inline double stable_sum_of_squares(std::span<const double> xs) {
  std::vector<double> sq(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) sq[i] = xs[i] * xs[i];
  std::sort(sq.begin(), sq.end());
  return std::accumulate(sq.begin(), sq.end(), 0.0);
}

inline void require_positive_finite(std::span<const double> xs,
                                    const std::string& where) {
  for (double x : xs) {
    if (!std::isfinite(x) || x <= 0.0) throw NonPositiveValue(where);
  }
}

inline std::vector<double> column(const std::vector<std::vector<double>>& m,
                                  std::size_t j) {
  std::vector<double> out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(row[j]);
  return out;
}

}  // namespace detail

/// Rejects matrices that are empty, ragged, or carry non-positive values.
inline void validate_matrix(const DecisionMatrix& m) {
  if (m.rows() == 0) throw DimensionMismatch("decision matrix has no alternatives");
  if (m.alternatives.size() != m.rows())
    throw DimensionMismatch("decision matrix has " + std::to_string(m.rows()) +
                            " rows but " + std::to_string(m.alternatives.size()) +
                            " alternative ids");
  const std::size_t n_cols = m.cols();
  if (n_cols == 0) throw DimensionMismatch("decision matrix has no criteria");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.values[i].size() != n_cols)
      throw DimensionMismatch("row '" + m.alternatives[i] + "' has " +
                              std::to_string(m.values[i].size()) +
                              " values, expected " + std::to_string(n_cols));
    detail::require_positive_finite(m.values[i], "row '" + m.alternatives[i] + "'");
  }
}

/// Weights must each be positive and sum to 1 within 1e-9.
inline void validate_weights(std::span<const CriterionSpec> specs) {
  if (specs.empty()) throw EmptyList("criterion list");
  double sum = 0.0;
  for (const auto& s : specs) {
    if (!std::isfinite(s.weight) || s.weight <= 0.0) throw NonPositiveWeight(s.name);
    sum += s.weight;
  }
  if (std::abs(sum - 1.0) > weight_sum_tolerance) throw WeightSumViolation(sum);
}

/// Scales one criterion column onto a comparable scale.
///   MaxRatio         x / max(x)
///   MinRatio         min(x) / x
///   InverseMinRatio  x / min(x)
///   VectorNorm       x / sqrt(sum x^2)
inline std::vector<double> normalize_column(std::span<const double> column,
                                            Normalization normalization) {
  if (column.empty()) throw EmptyColumn();
  detail::require_positive_finite(column, "column");
  std::vector<double> out(column.begin(), column.end());
  switch (normalization) {
    case Normalization::MaxRatio: {
      const double mx = *std::max_element(out.begin(), out.end());
      for (double& x : out) x /= mx;
      break;
    }
    case Normalization::MinRatio: {
      const double mn = *std::min_element(out.begin(), out.end());
      for (double& x : out) x = mn / x;
      break;
    }
    case Normalization::InverseMinRatio: {
      const double mn = *std::min_element(out.begin(), out.end());
      for (double& x : out) x /= mn;
      break;
    }
    case Normalization::VectorNorm: {
      const double norm = std::sqrt(detail::stable_sum_of_squares(out));
      for (double& x : out) x /= norm;
      break;
    }
  }
  return out;
}

inline void check_spec_count(std::size_t cols, std::size_t specs) {
  if (cols != specs)
    throw DimensionMismatch("matrix has " + std::to_string(cols) +
                            " criteria but " + std::to_string(specs) +
                            " criterion specs");
}

/// Applies each spec's normalization to its column.
inline NormalizedMatrix normalize_matrix(const DecisionMatrix& matrix,
                                         std::span<const CriterionSpec> specs) {
  validate_matrix(matrix);
  check_spec_count(matrix.cols(), specs.size());
  NormalizedMatrix out;
  out.alternatives = matrix.alternatives;
  out.values.assign(matrix.rows(), std::vector<double>(matrix.cols()));
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const auto norm =
        normalize_column(detail::column(matrix.values, j), specs[j].normalization);
    for (std::size_t i = 0; i < matrix.rows(); ++i) out.values[i][j] = norm[i];
  }
  return out;
}

/// Weighted sum per alternative over an already-normalized matrix.
inline std::vector<double> saw_scores(const NormalizedMatrix& matrix,
                                      std::span<const CriterionSpec> specs) {
  validate_weights(specs);
  check_spec_count(matrix.cols(), specs.size());
  std::vector<double> scores;
  scores.reserve(matrix.rows());
  for (const auto& row : matrix.values) {
    double s = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) s += specs[j].weight * row[j];
    scores.push_back(s);
  }
  return scores;
}

/// Normalize per spec, then weighted-sum: the full SAW pipeline.
inline std::vector<double> saw(const DecisionMatrix& matrix,
                               std::span<const CriterionSpec> specs) {
  return saw_scores(normalize_matrix(matrix, specs), specs);
}

/// Scales each column of a vector-normalized matrix by its weight.
inline NormalizedMatrix topsis_weighted(const NormalizedMatrix& matrix,
                                        std::span<const CriterionSpec> specs) {
  validate_weights(specs);
  check_spec_count(matrix.cols(), specs.size());
  NormalizedMatrix out = matrix;
  for (auto& row : out.values)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= specs[j].weight;
  return out;
}

/// Per column of the weighted matrix: the positive ideal takes the max over
/// alternatives for Benefit criteria and the min for Cost; the negative
/// ideal mirrors it.
inline Ideals topsis_ideals(const NormalizedMatrix& weighted,
                            std::span<const CriterionSpec> specs) {
  check_spec_count(weighted.cols(), specs.size());
  if (weighted.rows() == 0) throw DimensionMismatch("weighted matrix has no rows");
  Ideals ideals;
  ideals.positive.resize(weighted.cols());
  ideals.negative.resize(weighted.cols());
  for (std::size_t j = 0; j < weighted.cols(); ++j) {
    const auto col = detail::column(weighted.values, j);
    const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
    const bool benefit = specs[j].direction == Direction::Benefit;
    ideals.positive[j] = benefit ? *mx : *mn;
    ideals.negative[j] = benefit ? *mn : *mx;
  }
  return ideals;
}

/// Euclidean distance of every row to each ideal vector.
inline Separations topsis_separations(const NormalizedMatrix& weighted,
                                      const Ideals& ideals) {
  if (ideals.positive.size() != weighted.cols() ||
      ideals.negative.size() != weighted.cols())
    throw DimensionMismatch("ideal vectors do not match the matrix width");
  Separations sep;
  sep.to_positive.reserve(weighted.rows());
  sep.to_negative.reserve(weighted.rows());
  for (const auto& row : weighted.values) {
    double dp = 0.0, dn = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double ep = row[j] - ideals.positive[j];
      const double en = row[j] - ideals.negative[j];
      dp += ep * ep;
      dn += en * en;
    }
    sep.to_positive.push_back(std::sqrt(dp));
    sep.to_negative.push_back(std::sqrt(dn));
  }
  return sep;
}

/// Relative closeness C = S' / (S' + S*) per alternative, in [0,1].
inline std::vector<double> topsis_closeness(std::span<const double> to_positive,
                                            std::span<const double> to_negative,
                                            std::span<const std::string> ids = {}) {
  if (to_positive.size() != to_negative.size())
    throw DimensionMismatch("separation vectors differ in length");
  std::vector<double> closeness;
  closeness.reserve(to_positive.size());
  for (std::size_t i = 0; i < to_positive.size(); ++i) {
    const double denom = to_positive[i] + to_negative[i];
    if (denom == 0.0)
      throw DegenerateAlternative(i < ids.size() ? ids[i] : std::to_string(i));
    closeness.push_back(to_negative[i] / denom);
  }
  return closeness;
}

/// Full TOPSIS pipeline from raw values: vector normalization on every
/// column, weighting, ideals, separations, closeness.
inline std::vector<double> topsis(const DecisionMatrix& matrix,
                                  std::span<const CriterionSpec> specs) {
  validate_matrix(matrix);
  check_spec_count(matrix.cols(), specs.size());
  std::vector<CriterionSpec> vec_specs(specs.begin(), specs.end());
  for (auto& s : vec_specs) s.normalization = Normalization::VectorNorm;
  const auto weighted =
      topsis_weighted(normalize_matrix(matrix, vec_specs), vec_specs);
  const auto ideals = topsis_ideals(weighted, vec_specs);
  const auto sep = topsis_separations(weighted, ideals);
  return topsis_closeness(sep.to_positive, sep.to_negative, matrix.alternatives);
}

/// Orders alternatives by score descending. Scores within score_tie_epsilon
/// of a neighbour form a tie group and are ordered by ascending id.
inline Ranking rank_alternatives(std::span<const double> scores,
                                 std::span<const std::string> ids,
                                 Method method) {
  if (scores.size() != ids.size())
    throw DimensionMismatch("got " + std::to_string(scores.size()) +
                            " scores for " + std::to_string(ids.size()) + " ids");
  if (scores.empty()) throw EmptyList("score list");
  Ranking ranking;
  ranking.method = method;
  ranking.entries.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i)
    ranking.entries.push_back({ids[i], scores[i]});
  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const RankedAlternative& a, const RankedAlternative& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.id < b.id;
            });
  // Re-order near-tie runs by id so float noise cannot decide the order.
  std::size_t start = 0;
  for (std::size_t i = 1; i <= ranking.entries.size(); ++i) {
    const bool chained =
        i < ranking.entries.size() &&
        std::abs(ranking.entries[i - 1].score - ranking.entries[i].score) <=
            score_tie_epsilon;
    if (!chained) {
      std::sort(ranking.entries.begin() + start, ranking.entries.begin() + i,
                [](const RankedAlternative& a, const RankedAlternative& b) {
                  return a.id < b.id;
                });
      start = i;
    }
  }
  return ranking;
}

}  // namespace vhsim::madm
