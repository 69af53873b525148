// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//
// The k-multilinear extension F(p) = E[f(s)], where s_i = j with probability
// p[i][j] and s_i = 0 otherwise, independently per element.
//
// Exact evaluation contracts the full value table one element at a time over
// a per-row common denominator, so all arithmetic is integral until the final
// division. Transformation paths move a reference solution o into a greedy
// solution s at rate 1/c(e) per element and are checked at segment midpoints.
//

#ifndef KSKM_MULTILINEAR_HPP_
#define KSKM_MULTILINEAR_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kskm/core.hpp"
#include "kskm/oracles.hpp"

namespace kskm {

// A point of Δ_k^n: n rows of k probabilities with row sums at most 1.
class FractionalPoint {
 public:
  FractionalPoint() = default;
  FractionalPoint(std::size_t n, int k)
      : n_(n), k_(k), probs_(n * static_cast<std::size_t>(k)) {}

  static FractionalPoint from_solution(const Solution& x, int k) {
    FractionalPoint p(x.size(), k);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) p.set(i, x[i], 1);
    }
    return p;
  }

  std::size_t n() const { return n_; }
  int k() const { return k_; }

  // Dimensions are 1-based, matching Solution.
  const Rational& at(std::size_t i, int j) const { return probs_[slot(i, j)]; }
  void set(std::size_t i, int j, const Rational& v) {
    Rational& entry = probs_[slot(i, j)];
    entry = v;
    entry.canonicalize();
  }
  void add(std::size_t i, int j, const Rational& v) {
    Rational& entry = probs_[slot(i, j)];
    entry += v;
    entry.canonicalize();
  }

  void clear_row(std::size_t i) {
    for (int j = 1; j <= k_; ++j) set(i, j, 0);
  }

  Rational row_sum(std::size_t i) const {
    Rational total = 0;
    for (int j = 1; j <= k_; ++j) total += at(i, j);
    return total;
  }

  bool in_domain() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (int j = 1; j <= k_; ++j) {
        if (at(i, j) < 0 || at(i, j) > 1) return false;
      }
      if (row_sum(i) > 1) return false;
    }
    return true;
  }

  void validate() const {
    if (!in_domain()) throw Error(ErrorCode::kShapeMismatch, "point outside Δ_k^n");
  }

  // Entry-wise p ≤ q.
  bool dominated_by(const FractionalPoint& q) const {
    for (std::size_t s = 0; s < probs_.size(); ++s) {
      if (probs_[s] > q.probs_[s]) return false;
    }
    return true;
  }

  friend bool operator==(const FractionalPoint& a, const FractionalPoint& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.probs_ == b.probs_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      os << (i ? " | " : "");
      for (int j = 1; j <= k_; ++j) os << (j > 1 ? "," : "") << at(i, j);
    }
    return os.str();
  }

 private:
  std::size_t slot(std::size_t i, int j) const {
    return i * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j - 1);
  }

  std::size_t n_ = 0;
  int k_ = 0;
  std::vector<Rational> probs_;
};

inline constexpr std::size_t kExactMaxElements = 12;
inline constexpr std::uint64_t kExactMaxOutcomes = 531441;  // 3^12

// Exact F over a cached value table.
class ExtensionEvaluator {
 public:
  explicit ExtensionEvaluator(const ValueOracle& oracle)
      : ExtensionEvaluator(oracle, kExactMaxElements) {}

  ExtensionEvaluator(const ValueOracle& oracle, std::size_t max_elements)
      : n_(oracle.n()), k_(oracle.k()) {
    if (n_ > max_elements ||
        solution_count(n_, k_, kExactMaxOutcomes) > kExactMaxOutcomes) {
      throw Error(ErrorCode::kTooLarge,
                  "exact extension needs n <= " + std::to_string(max_elements) +
                      " and (k+1)^n <= 3^12");
    }
    table_ = tabulate(oracle, kExactMaxOutcomes);
  }

  std::size_t n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Value>& table() const { return table_; }

  Rational eval(const FractionalPoint& p) const {
    check(p);
    const std::size_t radix = static_cast<std::size_t>(k_ + 1);
    mpz_class denominator = 1;
    std::vector<mpz_class> current;
    std::vector<mpz_class> weights(radix);
    std::size_t width = table_.size();
    for (std::size_t i = 0; i < n_; ++i) {
      row_weights(p, i, weights, denominator);
      const std::size_t next_width = width / radix;
      std::vector<mpz_class> next(next_width);
      for (std::size_t r = 0; r < next_width; ++r) {
        mpz_class acc = 0;
        for (std::size_t v = 0; v < radix; ++v) {
          if (weights[v] == 0) continue;
          if (i == 0) {
            acc += weights[v] * static_cast<long>(table_[v + radix * r]);
          } else {
            acc += weights[v] * current[v + radix * r];
          }
        }
        next[r] = std::move(acc);
      }
      current = std::move(next);
      width = next_width;
    }
    if (n_ == 0) return Rational(static_cast<long>(table_[0]));
    Rational out(current[0], denominator);
    out.canonicalize();
    return out;
  }

  // ∂F/∂x_{i,j} = E[f | s_i = j] − E[f | s_i = 0]; independent of row i.
  Rational partial(const FractionalPoint& p, std::size_t i, int j) const {
    FractionalPoint up = p;
    up.clear_row(i);
    FractionalPoint down = up;
    up.set(i, j, 1);
    return eval(up) - eval(down);
  }

 private:
  void check(const FractionalPoint& p) const {
    if (p.n() != n_ || p.k() != k_) {
      throw Error(ErrorCode::kShapeMismatch, "point shape differs from oracle");
    }
    p.validate();
  }

  // Integer weights of row i over {0, 1..k} scaled by the row's common
  // denominator, which is folded into `denominator`.
  void row_weights(const FractionalPoint& p, std::size_t i,
                   std::vector<mpz_class>& weights, mpz_class& denominator) const {
    mpz_class row_den = 1;
    for (int j = 1; j <= k_; ++j) {
      mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(),
              p.at(i, j).get_den_mpz_t());
    }
    mpz_class used = 0;
    for (int j = 1; j <= k_; ++j) {
      const Rational& q = p.at(i, j);
      weights[static_cast<std::size_t>(j)] = q.get_num() * (row_den / q.get_den());
      used += weights[static_cast<std::size_t>(j)];
    }
    weights[0] = row_den - used;
    denominator *= row_den;
  }

  std::size_t n_;
  int k_;
  std::vector<Value> table_;
};

inline Rational eval_exact(const ValueOracle& oracle, const FractionalPoint& p) {
  return ExtensionEvaluator(oracle).eval(p);
}

inline Rational partial_exact(const ValueOracle& oracle, const FractionalPoint& p,
                              std::size_t i, int j) {
  return ExtensionEvaluator(oracle).partial(p, i, j);
}

struct MonteCarloEstimate {
  Rational estimate;
  double standard_error = 0.0;
};

// Sample mean of f over `samples` independent draws; deterministic in seed.
// The mean of integer values is reported exactly.
inline MonteCarloEstimate eval_mc(const ValueOracle& oracle,
                                  const FractionalPoint& p, std::size_t samples,
                                  std::uint64_t seed) {
  if (p.n() != oracle.n() || p.k() != oracle.k()) {
    throw Error(ErrorCode::kShapeMismatch, "point shape differs from oracle");
  }
  p.validate();
  samples = std::max<std::size_t>(samples, 1);
  const std::size_t n = p.n();
  const int k = p.k();
  // Cumulative thresholds per row; a row with all mass on j draws j always.
  std::vector<std::vector<double>> cumulative(n, std::vector<double>(k));
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      acc += p.at(i, j);
      cumulative[i][j - 1] = acc.get_d();
    }
  }
  std::mt19937_64 rng(seed);
  mpz_class sum = 0;
  double mean = 0.0, m2 = 0.0;
  std::vector<int> draw(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      int pick = 0;
      for (int j = 1; j <= k; ++j) {
        if (u < cumulative[i][j - 1]) {
          pick = j;
          break;
        }
      }
      draw[i] = pick;
    }
    const Value v = oracle.value_unchecked(Solution(draw));
    sum += static_cast<long>(v);
    // Welford update for the sample variance.
    const double delta = static_cast<double>(v) - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (static_cast<double>(v) - mean);
  }
  MonteCarloEstimate out;
  out.estimate = Rational(sum, mpz_class(static_cast<unsigned long>(samples)));
  out.estimate.canonicalize();
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    out.standard_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property verification.

struct ExtensionViolation {
  std::string property;  // "monotone", "pairwise", "hessian", "antitone"
  std::string detail;
};

struct ExtensionReport {
  std::size_t points = 0;
  bool monotone_checked = false;
  std::size_t monotone_checks = 0;
  std::size_t pairwise_checks = 0;
  std::size_t hessian_checks = 0;
  std::size_t hessian_skipped = 0;
  std::size_t antitone_checks = 0;
  std::vector<ExtensionViolation> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr std::size_t kPropertyMaxElements = 10;

namespace internal {

// Row entries are multiples of 1/8 from a random composition of 8 into k+1
// parts, so rows of every shape (empty, partial, full) occur.
inline FractionalPoint random_point(std::mt19937_64& rng, std::size_t n, int k,
                                    int grid = 8) {
  FractionalPoint p(n, k);
  std::vector<int> cuts(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& c : cuts) c = static_cast<int>(rng() % static_cast<std::uint64_t>(grid + 1));
    std::sort(cuts.begin(), cuts.end());
    for (int j = 1; j <= k; ++j) {
      const int part = (j < k ? cuts[j] : grid) - cuts[j - 1];
      Rational v(part, grid);
      v.canonicalize();
      p.set(i, j, v);
    }
  }
  return p;
}

}  // namespace internal

// Checks, at `trials` random points of Δ_k^n:
//   (a) ∂F/∂x_{i,j} ≥ 0 when the oracle is monotone;
//   (b) ∂F/∂x_{i,j1} + ∂F/∂x_{i,j2} ≥ 0 for j1 ≠ j2;
//   (c) the exact cross second difference with steps a, b along (i,j),
//       (i',j'), i ≠ i', has sign opposite to a·b (or is zero);
//   (d) ∂F(y)/∂x_{i,j} ≥ ∂F(x)/∂x_{i,j} for a random y ≤ x.
inline ExtensionReport check_extension_properties(const ValueOracle& oracle,
                                                  std::size_t trials,
                                                  std::uint64_t seed) {
  const ExtensionEvaluator F(oracle, kPropertyMaxElements);
  const std::size_t n = oracle.n();
  const int k = oracle.k();
  const Rational step(1, 4);
  std::mt19937_64 rng(seed);
  ExtensionReport report;
  report.monotone_checked = oracle.monotone();

  auto flag = [&](const char* property, const FractionalPoint& p,
                  const std::string& what) {
    report.violations.push_back({property, what + " at p=" + p.to_string()});
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const FractionalPoint p = internal::random_point(rng, n, k);
    ++report.points;

    std::vector<std::vector<Rational>> grad(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 1; j <= k; ++j) grad[i][j] = F.partial(p, i, j);
    }

    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (report.monotone_checked) {
          ++report.monotone_checks;
          if (grad[i][j] < 0) {
            flag("monotone", p, "dF/dx(" + std::to_string(i + 1) + "," +
                                    std::to_string(j) + ")=" + grad[i][j].get_str());
          }
        }
        for (int j2 = j + 1; j2 <= k; ++j2) {
          ++report.pairwise_checks;
          if (grad[i][j] + grad[i][j2] < 0) {
            flag("pairwise", p, "row " + std::to_string(i + 1) + " dims " +
                                    std::to_string(j) + "," + std::to_string(j2));
          }
        }
      }
    }

    // (c) Steps stay inside Δ_k^n: +1/4 clipped to the row's slack, or a
    // negative step when the row is full.
    std::vector<std::vector<Rational>> delta(n, std::vector<Rational>(k + 1));
    std::vector<std::vector<Rational>> moved(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
      const Rational slack = 1 - p.row_sum(i);
      for (int j = 1; j <= k; ++j) {
        Rational d = slack < step ? slack : step;
        if (d == 0) d = -(p.at(i, j) < step ? p.at(i, j) : step);
        delta[i][j] = d;
        if (d != 0) {
          FractionalPoint q = p;
          q.add(i, j, d);
          moved[i][j] = F.eval(q);
        }
      }
    }
    const Rational base = F.eval(p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t i2 = i + 1; i2 < n; ++i2) {
        for (int j = 1; j <= k; ++j) {
          for (int j2 = 1; j2 <= k; ++j2) {
            const Rational& a = delta[i][j];
            const Rational& b = delta[i2][j2];
            if (a == 0 || b == 0) {
              ++report.hessian_skipped;
              continue;
            }
            ++report.hessian_checks;
            FractionalPoint q = p;
            q.add(i, j, a);
            q.add(i2, j2, b);
            const Rational second = F.eval(q) - moved[i][j] - moved[i2][j2] + base;
            if (sgn(second) * sgn(a) * sgn(b) > 0) {
              flag("hessian", p, "pair (" + std::to_string(i + 1) + "," +
                                     std::to_string(j) + "),(" +
                                     std::to_string(i2 + 1) + "," +
                                     std::to_string(j2) + ") second difference " +
                                     second.get_str());
            }
          }
        }
      }
    }

    // (d) y ≤ p entry-wise by halving or zeroing random entries.
    FractionalPoint y = p;
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 1; j <= k; ++j) {
        const auto r = rng() % 3;
        if (r == 0) y.set(i, j, 0);
        if (r == 1) y.set(i, j, p.at(i, j) / 2);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 1; j <= k; ++j) {
        ++report.antitone_checks;
        if (F.partial(y, i, j) < grad[i][j]) {
          flag("antitone", p, "coordinate (" + std::to_string(i + 1) + "," +
                                  std::to_string(j) + ") y=" + y.to_string());
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Transformation paths.

struct ScheduledPick {
  std::size_t element;
  int dimension;
  Rational start;
  Value cost;

  Rational end() const { return start + Rational(static_cast<long>(cost)); }
};

struct PathSegment {
  Rational start;
  Rational end;
  // Coordinate of s(t) increasing and of o(t) decreasing on this segment.
  ScheduledPick increasing;
  ScheduledPick decreasing;
};

// s(t) raises the greedy picks one at a time; o(t) lowers the reference
// entries one at a time; both at rate 1/c(e) over [0, c(o)].
class TransformationPath {
 public:
  std::size_t n() const { return n_; }
  int k() const { return k_; }
  const Rational& total_time() const { return total_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<ScheduledPick>& s_schedule() const { return s_schedule_; }
  const std::vector<ScheduledPick>& o_schedule() const { return o_schedule_; }
  const Solution& reference() const { return reference_; }
  const Solution& target() const { return target_; }

  std::vector<PathSegment> segments() const {
    std::vector<PathSegment> out;
    for (std::size_t b = 0; b + 1 < breakpoints_.size(); ++b) {
      const Rational& a = breakpoints_[b];
      const Rational mid = (a + breakpoints_[b + 1]) / 2;
      out.push_back({a, breakpoints_[b + 1], active(s_schedule_, mid),
                     active(o_schedule_, mid)});
    }
    return out;
  }

  FractionalPoint s_at(const Rational& t) const { return raise(t, false); }
  FractionalPoint floor_s_at(const Rational& t) const { return raise(t, true); }

  FractionalPoint o_at(const Rational& t) const {
    FractionalPoint p(n_, k_);
    for (const auto& pick : o_schedule_) {
      p.set(pick.element, pick.dimension, 1 - progress(pick, t));
    }
    return p;
  }

  FractionalPoint x_at(const Rational& t) const { return sum(o_at(t), s_at(t)); }
  FractionalPoint y_at(const Rational& t) const {
    return sum(o_at(t), floor_s_at(t));
  }

 private:
  friend TransformationPath build_path(const Instance&, const Solution&,
                                       const std::vector<std::pair<std::size_t, int>>&);

  static Rational progress(const ScheduledPick& pick, const Rational& t) {
    if (t <= pick.start) return 0;
    if (t >= pick.end()) return 1;
    Rational r = (t - pick.start) / Rational(static_cast<long>(pick.cost));
    r.canonicalize();
    return r;
  }

  static ScheduledPick active(const std::vector<ScheduledPick>& schedule,
                              const Rational& t) {
    for (const auto& pick : schedule) {
      if (pick.start <= t && t < pick.end()) return pick;
    }
    throw Error(ErrorCode::kInfeasibleSchedule, "no active coordinate");
  }

  FractionalPoint raise(const Rational& t, bool floor) const {
    FractionalPoint p(n_, k_);
    for (const auto& pick : s_schedule_) {
      const Rational r = progress(pick, t);
      if (!floor || r == 1) p.set(pick.element, pick.dimension, r);
    }
    return p;
  }

  FractionalPoint sum(const FractionalPoint& a, const FractionalPoint& b) const {
    FractionalPoint p = a;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int j = 1; j <= k_; ++j) p.add(i, j, b.at(i, j));
    }
    return p;
  }

  std::size_t n_ = 0;
  int k_ = 0;
  Rational total_ = 0;
  Solution reference_;
  Solution target_;
  std::vector<ScheduledPick> s_schedule_;
  std::vector<ScheduledPick> o_schedule_;
  std::vector<Rational> breakpoints_;
};

// The reference schedule lowers the elements shared with s first, in the
// order s raises them, then the remaining reference elements by index. A
// shared element therefore starts decreasing no later than it starts
// increasing in s; the rule is still verified and reported as
// InfeasibleSchedule if it fails.
inline TransformationPath build_path(
    const Instance& inst, const Solution& reference,
    const std::vector<std::pair<std::size_t, int>>& s_trace) {
  inst.oracle().check_shape(reference);
  TransformationPath path;
  path.n_ = inst.n();
  path.k_ = inst.k();
  path.reference_ = reference;

  std::vector<int> target(inst.n(), 0);
  Rational clock = 0;
  for (const auto& [element, dimension] : s_trace) {
    if (element >= inst.n() || dimension < 1 || dimension > inst.k() ||
        target[element] != 0) {
      throw Error(ErrorCode::kShapeMismatch, "bad or repeated pick in trace");
    }
    target[element] = dimension;
    path.s_schedule_.push_back({element, dimension, clock, inst.cost(element)});
    clock += static_cast<long>(inst.cost(element));
  }
  path.target_ = Solution(target);

  const Value cost_o = cost(reference, inst);
  const Value cost_s = cost(path.target_, inst);
  if (cost_o != cost_s) {
    throw Error(ErrorCode::kCostMismatch,
                "c(o)=" + std::to_string(cost_o) + " but c(s)=" + std::to_string(cost_s));
  }
  path.total_ = static_cast<long>(cost_o);

  std::vector<std::size_t> order;
  for (const auto& [element, dimension] : s_trace) {
    if (reference.assigned(element)) order.push_back(element);
  }
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (reference.assigned(i) && target[i] == 0) order.push_back(i);
  }
  clock = 0;
  for (std::size_t element : order) {
    path.o_schedule_.push_back({element, reference[element], clock, inst.cost(element)});
    clock += static_cast<long>(inst.cost(element));
  }
  for (const auto& o_pick : path.o_schedule_) {
    for (const auto& s_pick : path.s_schedule_) {
      if (s_pick.element == o_pick.element && o_pick.start > s_pick.start) {
        throw Error(ErrorCode::kInfeasibleSchedule,
                    "element " + std::to_string(o_pick.element + 1) +
                        " would start decreasing after it starts increasing");
      }
    }
  }

  std::vector<Rational> points{Rational(0), path.total_};
  for (const auto& pick : path.s_schedule_) points.push_back(pick.start);
  for (const auto& pick : path.o_schedule_) points.push_back(pick.start);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  while (!points.empty() && points.back() > path.total_) points.pop_back();
  path.breakpoints_ = std::move(points);
  if (path.total_ == 0) path.breakpoints_ = {Rational(0)};
  return path;
}

struct PathReport {
  std::size_t segments = 0;
  bool monotone = true;
  // Monotone checks: F'(x) ≥ F'(y), F'(y) ≤ 0, −F'(y) ≤ F'(s).
  std::size_t x_below_y = 0;
  std::size_t y_positive = 0;
  std::size_t y_exceeds_s = 0;
  // Non-monotone check: F'(x) ≥ −2 F'(s).
  std::size_t x_below_minus_2s = 0;
  std::size_t outside_domain = 0;
  // Σ len·F'(x(mid)) against f(s) − f(o), and Σ len·F'(s(mid)) against f(s).
  Rational x_integral = 0;
  Rational x_expected = 0;
  Rational s_integral = 0;
  Rational s_expected = 0;
  std::vector<std::string> details;

  bool telescopes() const { return x_integral == x_expected && s_integral == s_expected; }
  std::size_t violations() const {
    return x_below_y + y_positive + y_exceeds_s + x_below_minus_2s + outside_domain;
  }
  bool ok() const { return violations() == 0 && telescopes(); }
};

// F(x(t)) is at most quadratic in t on each segment, so len·F'(midpoint) is
// the exact change of F over the segment and the sums telescope.
inline PathReport verify_path(const Instance& inst, const TransformationPath& path) {
  const ExtensionEvaluator F(inst.oracle(), kPropertyMaxElements);
  PathReport report;
  report.monotone = inst.monotone();
  const Value f_s = inst.oracle().value(path.target());
  const Value f_o = inst.oracle().value(path.reference());
  report.x_expected = static_cast<long>(f_s - f_o);
  report.s_expected = static_cast<long>(f_s);

  for (const auto& seg : path.segments()) {
    ++report.segments;
    const Rational mid = (seg.start + seg.end) / 2;
    const Rational len = seg.end - seg.start;
    const FractionalPoint x = path.x_at(mid);
    const FractionalPoint y = path.y_at(mid);
    const FractionalPoint s = path.s_at(mid);
    if (!x.in_domain()) {
      ++report.outside_domain;
      report.details.push_back("x(t) outside domain at t=" + mid.get_str());
      continue;
    }
    const Rational up_rate(1, static_cast<long>(seg.increasing.cost));
    const Rational down_rate(1, static_cast<long>(seg.decreasing.cost));
    const std::size_t ui = seg.increasing.element;
    const int uj = seg.increasing.dimension;
    const std::size_t di = seg.decreasing.element;
    const int dj = seg.decreasing.dimension;

    const Rational dx = F.partial(x, ui, uj) * up_rate - F.partial(x, di, dj) * down_rate;
    const Rational dy = -F.partial(y, di, dj) * down_rate;
    const Rational ds = F.partial(s, ui, uj) * up_rate;
    report.x_integral += len * dx;
    report.s_integral += len * ds;

    auto note = [&](const char* what) {
      report.details.push_back(std::string(what) + " at t=" + mid.get_str() +
                               " F'(x)=" + dx.get_str() + " F'(y)=" +
                               dy.get_str() + " F'(s)=" + ds.get_str());
    };
    if (report.monotone) {
      if (dx < dy) {
        ++report.x_below_y;
        note("F'(x) < F'(y)");
      }
      if (dy > 0) {
        ++report.y_positive;
        note("F'(y) > 0");
      }
      if (-dy > ds) {
        ++report.y_exceeds_s;
        note("-F'(y) > F'(s)");
      }
    } else if (dx < -2 * ds) {
      ++report.x_below_minus_2s;
      note("F'(x) < -2F'(s)");
    }
  }
  report.x_integral.canonicalize();
  report.s_integral.canonicalize();
  return report;
}

}  // namespace kskm

#endif  // KSKM_MULTILINEAR_HPP_
