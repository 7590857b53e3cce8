#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "degplus/polynomial.hpp"
#include "degplus/roots.hpp"

namespace degplus {

/// deg+(p) - deg(p); nullopt when deg+ is infinite.
std::optional<std::size_t> capital_D(const Polynomial& p);

struct TruncationCheck {
  /// p * (1/p)_{D(p)}
  Polynomial product;
  bool nonneg = false;
  std::size_t D = 0;
};

TruncationCheck truncation_check(const Polynomial& p);

struct StarReport {
  std::vector<Polynomial> factors;
  std::size_t total_D = 0;
  std::vector<std::size_t> per_factor_D;
  std::vector<Polynomial> truncation_products;
  bool additivity_holds = false;
  bool verdict = false;
};

/// Checks the property for one supplied factorization p = p_1 ... p_k.
StarReport property_star(const Polynomial& p, const std::vector<Polynomial>& factors);

struct StarSearch {
  /// Some tried factorization satisfies the property. A false value means
  /// "not established", never "refuted".
  bool established = false;
  std::vector<StarReport> attempts;
};

/// Tries [p], the supplied factors (if any), k copies of g when p = c g^k,
/// and groupings of the repeated squarefree factors.
StarSearch property_star_auto(const Polynomial& p, const std::vector<Polynomial>& supplied = {});

/// Monic quadratics x^2 + a x + b with a, b rationals of denominator at most
/// `denominator_bound` in the given closed ranges, restricted to a < 0 and
/// a^2 < 4b.
struct ScanGrid {
  Rational a_min;
  Rational a_max;
  Rational b_min;
  Rational b_max;
  unsigned denominator_bound = 1;
  unsigned k_max = 1;
};

/// Grid points (a, b) in canonical order.
std::vector<std::pair<Rational, Rational>> grid_points(const ScanGrid& grid);

struct ScanRow {
  Rational a;
  Rational b;
  unsigned k = 1;
  std::size_t deg_plus = 0;
  /// ceil(k pi / phi) + 1
  std::size_t bound = 0;
  long slack = 0;
  /// The angle ceiling was taken on the safe side at the precision ceiling.
  bool bound_conservative = false;
  /// Filled by the star scan only.
  std::optional<bool> verdict;
};

struct ScanResult {
  ScanGrid grid;
  std::vector<ScanRow> rows;
  std::vector<ScanRow> violations;
};

using RowSink = std::function<void(const ScanRow&)>;

/// Rows come out sorted by (a, b, k) whatever the completion order; `sink`
/// sees each row as soon as every earlier row is done.
ScanResult conjecture_scan(const ScanGrid& grid, unsigned jobs = 1, const RowSink& sink = {},
                           const PrecisionPolicy& policy = {});

/// As conjecture_scan, plus property_star(p^k, [p] * k) per row. A row is a
/// violation when its verdict is false.
ScanResult star_conjecture_scan(const ScanGrid& grid, unsigned jobs = 1, const RowSink& sink = {},
                                const PrecisionPolicy& policy = {});

std::string csv_header(bool with_verdict);
std::string csv_row(const ScanRow& row, bool with_verdict);

}  // namespace degplus
