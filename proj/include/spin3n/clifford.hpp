// Copyright 2026 The spin3n Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spin3n/linalg.hpp"

namespace spin3n {

/// Signature of m generators all squaring to +1.
std::vector<int> euclidean_signature(int m);

/// Element of the real Clifford algebra Cl(p,q) on up to 64 generators.
/// A blade is a bit mask over generator indices 1..m (bit i-1 = generator i),
/// kept in canonical ascending order; reordering signs live in the
/// coefficients.  Coefficients with magnitude below kTolExact are pruned.
class CliffordElement {
 public:
  using Terms = std::map<std::uint64_t, double>;

  explicit CliffordElement(std::vector<int> signature);

  static CliffordElement scalar(std::vector<int> signature, double value);
  static CliffordElement basis_blade(std::vector<int> signature,
                                     std::uint64_t mask, double coeff = 1.0);
  static CliffordElement generator(std::vector<int> signature, int index);
  /// Product of all m generators.
  static CliffordElement pseudoscalar(std::vector<int> signature);

  int generator_count() const { return static_cast<int>(signature_.size()); }
  const std::vector<int>& signature() const { return signature_; }
  const Terms& terms() const { return terms_; }
  double coefficient(std::uint64_t mask) const;
  double max_abs_coefficient() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;
  /// True when every blade has the given grade (the zero element qualifies).
  bool is_homogeneous(int grade) const;
  CliffordElement grade_part(int grade) const;

  /// Each grade-g blade scaled by (-1)^(g(g-1)/2); antiautomorphism.
  CliffordElement reversed() const;

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(double factor);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) {
    a += b;
    return a;
  }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) {
    a -= b;
    return a;
  }
  friend CliffordElement operator*(CliffordElement a, double factor) {
    a *= factor;
    return a;
  }
  friend CliffordElement operator*(double factor, CliffordElement a) {
    a *= factor;
    return a;
  }
  /// Geometric product.
  friend CliffordElement operator*(const CliffordElement& a,
                                   const CliffordElement& b);

 private:
  void add_term(std::uint64_t mask, double coeff);
  void prune();

  std::vector<int> signature_;
  Terms terms_;
};

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b);

/// Even, versor-normalized Clifford element: S * reversed(S) = 1 within tol.
class SpinElement {
 public:
  explicit SpinElement(CliffordElement value, double tol = kTolCompose);

  const CliffordElement& element() const { return value_; }
  SpinElement operator-() const;
  /// reversed(S) / scalar(S * reversed(S)).
  SpinElement inverse() const;

 private:
  CliffordElement value_;
};

/// Dimension of the smallest Lie-bracket-closed real span of the given
/// grade-2 elements, by iterated bracketing and Gram-Schmidt rank
/// accumulation until fixpoint.
int lie_closure_dimension(const std::vector<CliffordElement>& bivectors,
                          double pivot_tol = 1e-9);

}  // namespace spin3n
