#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercomp/varieties.hpp"

namespace hypercomp {

enum class QuadricKind { X, Y };

// X_{m,n}: sum_{i<m} x_{2i} x_{2i+1} (= 1), 1 <= 2m-1 <= n.
// Y_{m,n}: the same plus x_{2m}^2,            0 <= 2m   <= n.
// Both live in n+1 variables x_0..x_n.
struct QuadricNormalForm {
  QuadricKind kind = QuadricKind::X;
  unsigned m = 1;
  unsigned n = 1;

  void validate() const;
  bool valid() const;
  QPoly quadratic_form() const;
  QPoly affine_polynomial() const;  // quadratic_form() - 1
  std::string name() const;
  friend bool operator==(const QuadricNormalForm&, const QuadricNormalForm&) = default;
};

struct CountFormulaResult {
  std::uint64_t total = 0;
  std::uint64_t regular = 0;
  std::uint64_t singular = 0;
};

CountFormulaResult closed_form_count(const QuadricNormalForm& form, std::uint64_t q);

// Every valid form with n <= nmax. Y-forms with m = 0 only when include_y0.
std::vector<QuadricNormalForm> normal_forms_up_to(unsigned nmax, bool include_y0 = false);

struct QuadricCountCheck {
  QuadricNormalForm form;
  std::uint64_t q = 0;
  CountFormulaResult predicted;
  PointCount observed;
  bool match() const {
    return predicted.total == observed.total && predicted.regular == observed.regular &&
           predicted.singular == observed.singular;
  }
};

std::vector<QuadricCountCheck> verify_against_bruteforce(const QuadricNormalForm& form,
                                                         const std::vector<FieldSpec>& fields,
                                                         const CountOptions& opts = {});

struct QuadricClass {
  QuadricKind kind = QuadricKind::X;
  unsigned m = 0;
  unsigned rank = 0;
  bool reducible = false;    // rank 2: product of two linear forms
  bool non_reduced = false;  // rank 1: a double hyperplane
  std::string to_string() const;
};

// Class over the algebraic closure from the rank of the Gram matrix; the
// characteristic must be 0 or an odd prime.
QuadricClass classify_quadric(const QPoly& f, std::uint64_t characteristic = 0);

// Symmetric Gram matrix rank helper (exposed for tests).
unsigned gram_rank(const QPoly& f, std::uint64_t characteristic);

struct EmpiricalClass {
  std::vector<QuadricNormalForm> matches;  // forms whose counts agree on every probe field
  std::vector<std::pair<std::uint64_t, PointCount>> fingerprint;
};

// Characteristic-2 fallback: compares counts of {f = 1} over the probe fields
// with the closed forms of the normal forms in the same number of variables.
EmpiricalClass classify_quadric_char2(const QPoly& f, const std::vector<std::uint64_t>& probe_q = {4, 16},
                                      const CountOptions& opts = {});

}  // namespace hypercomp
