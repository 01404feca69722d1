#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grings/expr.hpp"
#include "grings/linalg.hpp"
#include "grings/rings.hpp"

using namespace grings;

namespace {

std::vector<Elem> apply(const FiniteRing& k, const CoeffMatrix& m, const std::vector<Elem>& x) {
  std::vector<Elem> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] = k.add(out[i], k.mul(m.at(i, j), x[j]));
  return out;
}

// All x with m*x == rhs, by enumerating every vector.
std::set<std::vector<Elem>> brute(const FiniteRing& k, const CoeffMatrix& m,
                                  const std::vector<Elem>& rhs) {
  std::set<std::vector<Elem>> out;
  std::vector<Elem> x(m.cols, 0);
  while (true) {
    if (apply(k, m, x) == rhs) out.insert(x);
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == k.size()) x[i++] = 0;
    if (i == x.size()) break;
  }
  return out;
}

void compare(const FiniteRing& k, const CoefficientSolver& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, k.size() - 1);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int t = 0; t < 60; ++t) {
    CoeffMatrix m(dim(rng), dim(rng));
    for (auto& e : m.data) e = (rng() % 3 == 0) ? 0 : pick(rng);
    std::vector<Elem> rhs(m.rows);
    for (auto& e : rhs) e = t % 2 ? 0 : pick(rng);
    auto want = brute(k, m, rhs);
    std::set<std::vector<Elem>> got;
    std::size_t visits = 0;
    s.for_each_solution(m, rhs, [&](const std::vector<Elem>& x) {
      got.insert(x);
      ++visits;
      return true;
    });
    CHECK(got == want);
    CHECK(visits == want.size());
    CHECK(s.solvable(m, rhs) == !want.empty());
    CHECK(s.injective(m) == (brute(k, m, std::vector<Elem>(m.rows, 0)).size() == 1));
  }
}

}  // namespace

TEST_CASE("factorization") {
  using F = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(factorize(12) == F{{2, 2}, {3, 1}});
  CHECK(factorize(97) == F{{97, 1}});
  CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
}

TEST_CASE("field solver matches brute force") {
  for (const char* e : {"GF(2)", "GF(5)", "GF(4)", "GF(9)", "GF(8)"}) {
    auto k = parse_ring(e);
    CAPTURE(e);
    auto s = CoefficientSolver::for_ring(*k);
    REQUIRE(s);
    compare(*k, *s, k->size());
  }
}

TEST_CASE("Z/n solver matches brute force") {
  for (std::uint64_t n : {4u, 6u, 8u, 9u, 12u}) {
    auto k = make_zmod(n);
    CAPTURE(n);
    auto s = CoefficientSolver::for_ring(*k);
    REQUIRE(s);
    compare(*k, *s, n);
  }
}

TEST_CASE("solvers are picked by base type") {
  CHECK(CoefficientSolver::for_ring(*parse_ring("M2(GF(2))")) == nullptr);
  CHECK(CoefficientSolver::for_ring(*parse_ring("GF(2)(+)GF(3)")) == nullptr);
  CHECK(CoefficientSolver::for_ring(*make_zmod(10)) != nullptr);
}

TEST_CASE("affine enumeration over GF(4) covers every scalar multiple") {
  auto k = parse_ring("GF(4)");
  FieldTables f(*k);
  CoeffMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  auto sol = solve_over_field(f, m, {0});
  REQUIRE(sol);
  CHECK(sol->basis.size() == 1);
  std::set<std::vector<Elem>> seen;
  auto scan = enumerate_affine(f, *sol, [&](const std::vector<Elem>& x) {
    seen.insert(x);
    return true;
  });
  CHECK(scan.completed);
  CHECK(seen.size() == 4);
  CHECK_FALSE(solve_over_field(f, CoeffMatrix(1, 1), {1}));
}
