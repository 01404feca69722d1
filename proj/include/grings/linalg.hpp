#pragma once

// Exact linear algebra over a finite coefficient ring: solution sets of
// M*x = rhs, enumerated element by element.
//
// Over a field this is Gaussian elimination with first-nonzero pivoting.
// Over Z/n with composite n the solutions modulo each prime power p^e are
// lifted digit by digit (each digit solves an affine system over Z/p) and
// the prime-power parts are combined by the Chinese remainder theorem.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "grings/ring.hpp"

namespace grings {

/// Dense row-major matrix of coefficient-ring element indices.
struct CoeffMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  CoeffMatrix() = default;
  CoeffMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Return false to stop an enumeration early.
using VectorVisitor = std::function<bool(const std::vector<Elem>&)>;

/// Arithmetic tables of a finite field with q <= FiniteRing::kTableCap.
class FieldTables {
 public:
  /// From a commutative division ring.
  explicit FieldTables(const FiniteRing& field);
  /// Z/p for a prime p.
  explicit FieldTables(std::uint64_t p);

  Elem size() const noexcept { return q_; }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const { return inv_[a]; }

 private:
  void derive_inverses();

  Elem q_;
  Elem one_ = 1;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Solution set of an affine system over a field: particular + span(basis).
struct AffineSolution {
  std::vector<Elem> particular;
  std::vector<std::vector<Elem>> basis;
};

std::optional<AffineSolution> solve_over_field(const FieldTables& f, const CoeffMatrix& m,
                                               const std::vector<Elem>& rhs);

/// Visits particular + sum c_i basis_i for every coefficient tuple, the first
/// basis vector varying fastest. Returns the number of vectors visited and
/// whether the enumeration completed.
FiniteRing::Scan enumerate_affine(const FieldTables& f, const AffineSolution& s,
                                  const VectorVisitor& visit);

class CoefficientSolver {
 public:
  virtual ~CoefficientSolver() = default;

  /// Visits every x with m*x == rhs in a fixed, implementation-defined order.
  virtual FiniteRing::Scan for_each_solution(const CoeffMatrix& m, const std::vector<Elem>& rhs,
                                             const VectorVisitor& visit) const = 0;
  virtual bool solvable(const CoeffMatrix& m, const std::vector<Elem>& rhs) const = 0;
  /// True iff m*x == 0 forces x == 0.
  virtual bool injective(const CoeffMatrix& m) const = 0;

  /// Field bases (any commutative division ring of size <= 4096) and Z/n
  /// bases have solvers; anything else returns nullptr.
  static std::unique_ptr<CoefficientSolver> for_ring(const FiniteRing& base);
};

std::unique_ptr<CoefficientSolver> make_field_solver(const FiniteRing& field);
std::unique_ptr<CoefficientSolver> make_zmod_solver(std::uint64_t n);

/// Prime factorization as (p, e) pairs in increasing p.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace grings
