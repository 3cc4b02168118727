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

#include "spin3n/clifford.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spin3n {

namespace {

// Parity of the transposition count needed to interleave two canonically
// ordered blades: counts pairs (i in a, j in b) with j < i.
int reorder_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) {
    swaps += std::popcount(a & b);
  }
  return swaps % 2 == 0 ? 1 : -1;
}

void check_signature(const std::vector<int>& signature) {
  if (signature.empty() || signature.size() > 64) {
    throw std::invalid_argument("CliffordElement: 1..64 generators supported");
  }
  for (int s : signature) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("CliffordElement: signature entries must be +-1");
    }
  }
}

}  // namespace

std::vector<int> euclidean_signature(int m) {
  if (m < 1) {
    throw std::invalid_argument("euclidean_signature: m must be positive");
  }
  return std::vector<int>(static_cast<std::size_t>(m), 1);
}

CliffordElement::CliffordElement(std::vector<int> signature)
    : signature_(std::move(signature)) {
  check_signature(signature_);
}

CliffordElement CliffordElement::scalar(std::vector<int> signature,
                                        double value) {
  CliffordElement out(std::move(signature));
  out.add_term(0, value);
  out.prune();
  return out;
}

CliffordElement CliffordElement::basis_blade(std::vector<int> signature,
                                             std::uint64_t mask, double coeff) {
  CliffordElement out(std::move(signature));
  if (out.generator_count() < 64 &&
      (mask >> out.generator_count()) != 0) {
    throw std::invalid_argument("CliffordElement: blade uses unknown generator");
  }
  out.add_term(mask, coeff);
  out.prune();
  return out;
}

CliffordElement CliffordElement::generator(std::vector<int> signature,
                                           int index) {
  const int m = static_cast<int>(signature.size());
  if (index < 1 || index > m) {
    throw std::invalid_argument("CliffordElement: generator index out of range");
  }
  return basis_blade(std::move(signature), std::uint64_t{1} << (index - 1));
}

CliffordElement CliffordElement::pseudoscalar(std::vector<int> signature) {
  const int m = static_cast<int>(signature.size());
  const std::uint64_t mask =
      m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  return basis_blade(std::move(signature), mask);
}

double CliffordElement::coefficient(std::uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? 0.0 : it->second;
}

double CliffordElement::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [mask, coeff] : terms_) {
    best = std::max(best, std::abs(coeff));
  }
  return best;
}

bool CliffordElement::is_even() const {
  for (const auto& [mask, coeff] : terms_) {
    if (std::popcount(mask) % 2 != 0) return false;
  }
  return true;
}

bool CliffordElement::is_homogeneous(int grade) const {
  for (const auto& [mask, coeff] : terms_) {
    if (std::popcount(mask) != grade) return false;
  }
  return true;
}

CliffordElement CliffordElement::grade_part(int grade) const {
  CliffordElement out(signature_);
  for (const auto& [mask, coeff] : terms_) {
    if (std::popcount(mask) == grade) out.terms_[mask] = coeff;
  }
  return out;
}

CliffordElement CliffordElement::reversed() const {
  CliffordElement out(signature_);
  for (const auto& [mask, coeff] : terms_) {
    const int g = std::popcount(mask);
    out.terms_[mask] = (g * (g - 1) / 2) % 2 == 0 ? coeff : -coeff;
  }
  return out;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out(signature_);
  for (const auto& [mask, coeff] : terms_) {
    out.terms_[mask] = -coeff;
  }
  return out;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  if (signature_ != other.signature_) {
    throw std::invalid_argument("CliffordElement: signature mismatch");
  }
  for (const auto& [mask, coeff] : other.terms_) {
    add_term(mask, coeff);
  }
  prune();
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  if (signature_ != other.signature_) {
    throw std::invalid_argument("CliffordElement: signature mismatch");
  }
  for (const auto& [mask, coeff] : other.terms_) {
    add_term(mask, -coeff);
  }
  prune();
  return *this;
}

CliffordElement& CliffordElement::operator*=(double factor) {
  for (auto& [mask, coeff] : terms_) {
    coeff *= factor;
  }
  prune();
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  if (a.signature_ != b.signature_) {
    throw std::invalid_argument("CliffordElement: signature mismatch");
  }
  CliffordElement out(a.signature_);
  for (const auto& [mask_a, coeff_a] : a.terms_) {
    for (const auto& [mask_b, coeff_b] : b.terms_) {
      double coeff = coeff_a * coeff_b * reorder_sign(mask_a, mask_b);
      std::uint64_t shared = mask_a & mask_b;
      while (shared != 0) {
        const int index = std::countr_zero(shared);
        coeff *= a.signature_[static_cast<std::size_t>(index)];
        shared &= shared - 1;
      }
      out.add_term(mask_a ^ mask_b, coeff);
    }
  }
  out.prune();
  return out;
}

void CliffordElement::add_term(std::uint64_t mask, double coeff) {
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) it->second += coeff;
}

void CliffordElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < kTolExact) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b) {
  return a * b - b * a;
}

SpinElement::SpinElement(CliffordElement value, double tol)
    : value_(std::move(value)) {
  if (!value_.is_even()) {
    throw std::invalid_argument("SpinElement: element has odd-grade terms");
  }
  CliffordElement norm = value_ * value_.reversed();
  norm -= CliffordElement::scalar(value_.signature(), 1.0);
  if (norm.max_abs_coefficient() >= tol) {
    throw std::invalid_argument("SpinElement: element is not versor-normalized");
  }
}

SpinElement SpinElement::operator-() const {
  return SpinElement(-value_);
}

SpinElement SpinElement::inverse() const {
  CliffordElement rev = value_.reversed();
  const double norm = (value_ * rev).coefficient(0);
  if (std::abs(norm) < kTolExact) {
    throw std::invalid_argument("SpinElement: non-invertible element");
  }
  return SpinElement(rev * (1.0 / norm));
}

namespace {

// Index of blade (i,j), i<j, within the list of all two-generator blades.
int bivector_slot(int i, int j, int m) {
  return (i * (2 * m - i - 1)) / 2 + (j - i - 1);
}

Eigen::VectorXd bivector_coordinates(const CliffordElement& e, int dim) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  const int m = e.generator_count();
  for (const auto& [mask, coeff] : e.terms()) {
    const int i = std::countr_zero(mask);
    const int j = 63 - std::countl_zero(mask);
    v(bivector_slot(i, j, m)) = coeff;
  }
  return v;
}

}  // namespace

int lie_closure_dimension(const std::vector<CliffordElement>& bivectors,
                          double pivot_tol) {
  if (bivectors.empty()) return 0;
  const int m = bivectors.front().generator_count();
  for (const auto& e : bivectors) {
    if (e.generator_count() != m || !e.is_homogeneous(2)) {
      throw std::invalid_argument(
          "lie_closure_dimension: inputs must be grade-2 over one algebra");
    }
  }
  const int coord_dim = m * (m - 1) / 2;

  std::vector<CliffordElement> basis;
  std::vector<Eigen::VectorXd> ortho;
  auto try_add = [&](const CliffordElement& candidate) {
    if (candidate.is_zero()) return false;
    Eigen::VectorXd v = bivector_coordinates(candidate, coord_dim);
    v.normalize();
    for (const auto& u : ortho) {
      v -= u.dot(v) * u;
    }
    if (v.norm() <= pivot_tol) return false;
    v.normalize();
    ortho.push_back(v);
    basis.push_back(candidate);
    return true;
  };

  for (const auto& e : bivectors) {
    try_add(e);
  }
  std::size_t bracketed = 0;
  while (bracketed < basis.size()) {
    const std::size_t frontier = basis.size();
    for (std::size_t i = bracketed; i < frontier; ++i) {
      for (std::size_t j = 0; j < frontier; ++j) {
        if (i == j) continue;
        try_add(commutator(basis[i], basis[j]));
        if (static_cast<int>(basis.size()) == coord_dim) {
          return coord_dim;
        }
      }
    }
    bracketed = frontier;
  }
  return static_cast<int>(basis.size());
}

}  // namespace spin3n
