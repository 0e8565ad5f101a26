#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hypercomp/varieties.hpp"

namespace hypercomp {

// Integer polynomial in the Lefschetz class L.
class MotivicClass {
 public:
  MotivicClass() = default;
  explicit MotivicClass(std::vector<mpz_class> coeffs);  // low to high degree
  static MotivicClass constant(long c);
  static MotivicClass L();
  static MotivicClass point() { return constant(1); }
  static MotivicClass affine_space(unsigned m);
  static MotivicClass projective_space(unsigned m);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class evaluate(const mpz_class& q) const;
  mpz_class chi() const { return evaluate(1); }
  mpz_class predicted_count(std::uint64_t q) const { return evaluate(mpz_class(static_cast<unsigned long>(q))); }

  friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator*(long k, const MotivicClass& a);
  friend bool operator==(const MotivicClass& a, const MotivicClass& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

enum class PieceKind { A2, A1, Point, P1, P1VeeP1, A1xGm, Custom };

struct Piece {
  PieceKind kind = PieceKind::Point;
  long count = 1;
  MotivicClass custom;  // used when kind == Custom
  std::string label;    // used when kind == Custom

  MotivicClass klass() const;
  std::string to_string() const;
};

MotivicClass piece_class(PieceKind kind);
MotivicClass sum_class(const std::vector<Piece>& pieces);

// Split of a projective hypersurface along {x_var != 0} and {x_var = 0}.
struct ChartSplit {
  std::size_t var = 0;
  std::vector<Piece> open_part;
  std::vector<Piece> closed_part;
};

struct StratificationRecord {
  std::string name;
  std::string description;
  std::vector<Piece> strata;
  std::optional<ChartSplit> chart;
  // Concrete surface whose counts the record predicts; absent for record-only entries.
  std::optional<QPoly> surface;
  bool projective = true;
  std::vector<std::string> var_names;
  // Strata rational over every prime field, so counts are meaningful.
  bool prime_field_strata = true;

  MotivicClass klass() const { return sum_class(strata); }
  mpz_class chi() const { return klass().chi(); }
};

struct RecordFieldCheck {
  std::uint64_t q = 0;
  mpz_class predicted;
  std::uint64_t observed = 0;
  bool chart_checked = false;
  mpz_class predicted_open, predicted_closed;
  std::uint64_t observed_open = 0, observed_closed = 0;
  bool ok() const {
    return predicted == observed &&
           (!chart_checked || (predicted_open == observed_open && predicted_closed == observed_closed));
  }
};

struct RecordReport {
  std::string name;
  MotivicClass klass;
  bool chart_consistent = true;  // chart pieces sum to the record class
  std::vector<RecordFieldCheck> fields;
  std::string note;
  bool ok() const;
};

RecordReport verify_record(const StratificationRecord& record, const std::vector<FieldSpec>& fields,
                           const CountOptions& opts = {});

// Built-in registry. Names: nonnormal-cubic-f1..f6, smooth-cubic, normal-cubic:n=K,
// smooth-rational-surface:n=K, normal-trees:n=N,r=R, union-tree:r=R,s=S,
// projective-space:m=M, affine-space:m=M, projective-plane, quadric-surface.
std::vector<std::string> builtin_record_names();
// Accepts an optional "record:" prefix.
StratificationRecord find_record(const std::string& name);

StratificationRecord nonnormal_cubic_record(unsigned i);
MotivicClass tree_class(long r, long s);

struct InterpolationResult {
  bool polynomial = false;
  MotivicClass klass;
  std::optional<std::uint64_t> failing_q;
  std::string detail;
};

// Fits a polynomial of degree <= degree_bound through the first
// degree_bound + 1 points and validates it on the rest.
InterpolationResult interpolate_count_polynomial(const std::vector<std::pair<std::uint64_t, mpz_class>>& counts,
                                                 unsigned degree_bound);

struct CurveRecord {
  std::string name;
  std::vector<std::string> birational_labels;  // one per 1-dimensional component
  long chi = 0;
};

// Piecewise isomorphism of curves: equal label multisets and equal chi.
bool curves_piecewise_iso(const CurveRecord& a, const CurveRecord& b);

// Count identity for the quartic X = {w f(x,y,z) = g(x,y,z)} in P^3:
// #X = #P^2 - #V(f) + 1 + q * #V(f, g).
struct QuarticCountCheck {
  std::uint64_t q = 0;
  std::uint64_t quartic = 0;
  std::uint64_t curve = 0;         // #V(f) in P^2
  std::uint64_t intersection = 0;  // #V(f, g) in P^2
  std::uint64_t predicted = 0;
  bool ok() const { return quartic == predicted; }
};
QuarticCountCheck quartic_count_check(const QPoly& f, const QPoly& g, const FieldPtr& F, const CountOptions& opts = {});

}  // namespace hypercomp
