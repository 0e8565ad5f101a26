#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercomp/finite_field.hpp"
#include "hypercomp/poly_ops.hpp"

namespace hypercomp {

inline constexpr std::uint64_t kDefaultPointBound = 100'000'000;

enum class Ambient { Affine, Projective };

class Hypersurface {
 public:
  // Affine hypersurface in A^{nvars}.
  static Hypersurface affine(QPoly defining);
  // Projective hypersurface in P^{nvars-1}; defining must be homogeneous.
  static Hypersurface projective(QPoly defining);

  const QPoly& defining() const { return f_; }
  Ambient ambient() const { return ambient_; }
  bool is_projective() const { return ambient_ == Ambient::Projective; }
  std::size_t nvars() const { return f_.nvars(); }
  unsigned degree() const { return static_cast<unsigned>(f_.degree()); }

 private:
  Hypersurface(QPoly f, Ambient a) : f_(std::move(f)), ambient_(a) {}
  QPoly f_;
  Ambient ambient_;
};

struct PointCount {
  std::uint64_t total = 0;
  std::uint64_t regular = 0;
  std::uint64_t singular = 0;
  std::uint64_t q = 0;
};

// Restricts a count to {poly = 0} (vanish) or {poly != 0}.
struct Condition {
  QPoly poly;
  bool vanish = true;
};

struct CountOptions {
  std::uint64_t max_points = kDefaultPointBound;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Brute-force count with a Jacobian regular/singular split. Projective points
// are enumerated once each via normalized representatives.
PointCount count_points(const Hypersurface& h, const FieldPtr& F, const std::vector<Condition>& conditions = {},
                        const CountOptions& opts = {});

// Number of points of the ambient space itself (q^n or (q^{n+1}-1)/(q-1)).
std::uint64_t ambient_point_count(Ambient a, std::size_t nvars, std::uint64_t q);

template <class D>
struct MultiplicityReport {
  std::vector<typename D::Elem> point;
  unsigned multiplicity = 0;
  bool is_max_possible = false;
};

// Order of vanishing of f at point, computed in the affine chart of the first
// nonzero coordinate (projective) or directly (affine).
template <class D>
MultiplicityReport<D> multiplicity_at(const Polynomial<D>& f, bool projective, std::vector<typename D::Elem> point) {
  const D& dom = f.domain();
  const std::size_t n = f.nvars();
  if (point.size() != n) throw DomainMismatch("point has wrong number of coordinates");
  if (f.is_zero()) throw InvalidArgument("zero polynomial has no multiplicity");
  if (!dom.is_zero(f.evaluate(point))) throw InvalidArgument("point does not lie on the hypersurface");
  std::vector<Polynomial<D>> subs;
  if (projective) {
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!dom.is_zero(point[i])) {
        lead = i;
        break;
      }
    if (lead == n) throw InvalidArgument("the zero vector is not a projective point");
    auto inv = dom.inv(point[lead]);
    for (auto& c : point) c = dom.mul(c, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == lead)
        subs.push_back(Polynomial<D>::constant(dom, n, dom.one()));
      else
        subs.push_back(Polynomial<D>::variable(dom, n, i) + Polynomial<D>::constant(dom, n, point[i]));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      subs.push_back(Polynomial<D>::variable(dom, n, i) + Polynomial<D>::constant(dom, n, point[i]));
  }
  Polynomial<D> shifted = compose(f, subs);
  MultiplicityReport<D> rep;
  rep.point = point;
  rep.multiplicity = shifted.min_degree();
  rep.is_max_possible = rep.multiplicity == static_cast<unsigned>(f.degree());
  return rep;
}

struct LocusReport {
  std::vector<std::vector<FieldElement>> points;  // normalized, in enumeration order
  unsigned degree = 0;
  bool linear = true;
  std::string detail;
};

// All F_q-points of multiplicity d = deg f on the projective hypersurface,
// plus the check that the line through any two of them stays inside.
LocusReport max_multiplicity_locus(const Hypersurface& h, const FieldPtr& F, const CountOptions& opts = {});

struct LineScanReport {
  unsigned generic_multiplicity = 0;
  std::vector<std::pair<std::string, unsigned>> exceptional;  // t-value (or "inf") and multiplicity
  unsigned max_multiplicity = 0;
  unsigned degree = 0;
  std::string limitation;  // set when the exceptional search is not exhaustive
};

// Multiplicity of the projective hypersurface along the line through P0 and P1.
LineScanReport multiplicity_along_line(const QPoly& f, const std::vector<mpq_class>& p0, const std::vector<mpq_class>& p1);
LineScanReport multiplicity_along_line(const GFPoly& f, const std::vector<FieldElement>& p0,
                                       const std::vector<FieldElement>& p1);

// Rational roots of a univariate integer-coefficient polynomial (coefficients low to high).
std::vector<mpq_class> rational_roots(std::vector<mpz_class> coeffs);

}  // namespace hypercomp
