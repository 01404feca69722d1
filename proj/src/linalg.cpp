#include "grings/linalg.hpp"

#include <stdexcept>

#include "grings/rings.hpp"

namespace grings {

__extension__ typedef unsigned __int128 u128;

FieldTables::FieldTables(const FiniteRing& field) : q_(field.size()) {
  if (q_ > FiniteRing::kTableCap) throw std::invalid_argument("field too large for tables");
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint32_t>(field.neg(a));
    for (Elem b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint32_t>(field.add(a, b));
      mul_[a * q_ + b] = static_cast<std::uint32_t>(field.mul(a, b));
    }
  }
  one_ = field.one();
  derive_inverses();
}

FieldTables::FieldTables(std::uint64_t p) : q_(p) {
  if (!is_prime(p) || p > FiniteRing::kTableCap)
    throw std::invalid_argument("Z/p tables need a small prime p");
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint32_t>((q_ - a) % q_);
    for (Elem b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint32_t>((a + b) % q_);
      mul_[a * q_ + b] = static_cast<std::uint32_t>(a * b % q_);
    }
  }
  derive_inverses();
}

void FieldTables::derive_inverses() {
  inv_.assign(q_, 0);
  for (Elem a = 1; a < q_; ++a) {
    for (Elem b = 1; b < q_; ++b) {
      if (mul(a, b) == one_) {
        inv_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
    if (inv_[a] == 0) throw std::invalid_argument("not a field: missing inverse");
  }
}

std::optional<AffineSolution> solve_over_field(const FieldTables& f, const CoeffMatrix& m,
                                               const std::vector<Elem>& rhs) {
  const std::size_t rows = m.rows, cols = m.cols;
  CoeffMatrix a(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = m.at(i, j);
    a.at(i, cols) = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    const Elem s = f.inv(a.at(r, c));
    for (std::size_t j = c; j <= cols; ++j) a.at(r, j) = f.mul(a.at(r, j), s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Elem factor = f.neg(a.at(i, c));
      for (std::size_t j = c; j <= cols; ++j)
        a.at(i, j) = f.add(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a.at(i, cols) != 0) return std::nullopt;

  AffineSolution s;
  s.particular.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) s.particular[pivot_col[i]] = a.at(i, cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = f.one();
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = f.neg(a.at(i, free));
    s.basis.push_back(std::move(v));
  }
  return s;
}

FiniteRing::Scan enumerate_affine(const FieldTables& f, const AffineSolution& s,
                                  const VectorVisitor& visit) {
  FiniteRing::Scan scan;
  const std::size_t d = s.basis.size();
  std::vector<Elem> digits(d, 0);
  std::vector<Elem> x = s.particular;
  while (true) {
    ++scan.examined;
    if (!visit(x)) {
      scan.completed = false;
      return scan;
    }
    // Odometer step over scalar digits: moving digit i from c to c' adds
    // (c' - c) * basis_i to x.
    std::size_t i = 0;
    for (; i < d; ++i) {
      const Elem old_digit = digits[i];
      digits[i] = digits[i] + 1 == f.size() ? 0 : digits[i] + 1;
      const Elem delta = f.add(digits[i], f.neg(old_digit));
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = f.add(x[j], f.mul(delta, s.basis[i][j]));
      if (digits[i] != 0) break;
    }
    if (i == d) return scan;
  }
}

namespace {

class FieldSolver final : public CoefficientSolver {
 public:
  explicit FieldSolver(const FiniteRing& field) : f_(field) {}

  FiniteRing::Scan for_each_solution(const CoeffMatrix& m, const std::vector<Elem>& rhs,
                                     const VectorVisitor& visit) const override {
    auto s = solve_over_field(f_, m, rhs);
    if (!s) return {};
    return enumerate_affine(f_, *s, visit);
  }

  bool solvable(const CoeffMatrix& m, const std::vector<Elem>& rhs) const override {
    return solve_over_field(f_, m, rhs).has_value();
  }

  bool injective(const CoeffMatrix& m) const override {
    return solve_over_field(f_, m, std::vector<Elem>(m.rows, 0))->basis.empty();
  }

 private:
  FieldTables f_;
};

// Solutions modulo n = prod p^e. For each prime power, x = sum_j p^j y_j with
// digits y_j in [0, p); once x mod p^j solves the system mod p^j, the residual
// (rhs - M x) / p^j reduced mod p is an affine system for the next digit.
class ZModSolver final : public CoefficientSolver {
 public:
  explicit ZModSolver(std::uint64_t n) {
    std::uint64_t before = 1;
    for (auto [p, e] : factorize(n)) {
      PrimePower pp;
      pp.p = p;
      pp.e = e;
      pp.pe = 1;
      for (unsigned i = 0; i < e; ++i) pp.pe *= p;
      pp.tables = std::make_shared<FieldTables>(p);
      pp.before = before;
      for (std::uint64_t t = 0; t < pp.pe; ++t)
        if (before % pp.pe * t % pp.pe == 1 % pp.pe) {
          pp.inv_before = t;
          break;
        }
      before *= pp.pe;
      parts_.push_back(std::move(pp));
    }
  }

  FiniteRing::Scan for_each_solution(const CoeffMatrix& m, const std::vector<Elem>& rhs,
                                     const VectorVisitor& visit) const override {
    // Solution lists per prime power, then their CRT product. Lists of all
    // but the last part are materialized; the last part streams.
    std::vector<std::vector<std::vector<Elem>>> lists(parts_.size());
    for (std::size_t k = 0; k + 1 < parts_.size(); ++k) {
      bool any = false;
      lift(parts_[k], m, rhs, [&](const std::vector<Elem>& x) {
        lists[k].push_back(x);
        any = true;
        return true;
      });
      if (!any) return {};
    }
    FiniteRing::Scan scan;
    std::vector<Elem> combined(m.cols, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
      if (k + 1 == parts_.size()) {
        auto last = lift(parts_[k], m, rhs, [&](const std::vector<Elem>& x) {
          std::vector<Elem> full(m.cols);
          for (std::size_t j = 0; j < m.cols; ++j) full[j] = crt_add(combined[j], k, x[j]);
          ++scan.examined;
          return visit(full);
        });
        return last.completed;
      }
      for (const auto& x : lists[k]) {
        std::vector<Elem> saved = combined;
        for (std::size_t j = 0; j < m.cols; ++j) combined[j] = crt_add(combined[j], k, x[j]);
        bool go_on = rec(k + 1);
        combined = std::move(saved);
        if (!go_on) return false;
      }
      return true;
    };
    scan.completed = rec(0);
    return scan;
  }

  bool solvable(const CoeffMatrix& m, const std::vector<Elem>& rhs) const override {
    for (const auto& pp : parts_) {
      bool found = false;
      lift(pp, m, rhs, [&](const std::vector<Elem>&) {
        found = true;
        return false;
      });
      if (!found) return false;
    }
    return true;
  }

  bool injective(const CoeffMatrix& m) const override {
    // A nonzero kernel vector mod p^e can be divided down to one mod p, and
    // p^(e-1) times a kernel vector mod p is a kernel vector mod p^e.
    for (const auto& pp : parts_) {
      CoeffMatrix mp(m.rows, m.cols);
      for (std::size_t i = 0; i < m.data.size(); ++i) mp.data[i] = m.data[i] % pp.p;
      auto s = solve_over_field(*pp.tables, mp, std::vector<Elem>(m.rows, 0));
      if (!s->basis.empty()) return false;
    }
    return true;
  }

 private:
  struct PrimePower {
    std::uint64_t p;
    unsigned e;
    std::uint64_t pe;
    std::shared_ptr<FieldTables> tables;
    std::uint64_t before = 1;      // product of the earlier prime powers
    std::uint64_t inv_before = 0;  // its inverse modulo pe
  };

  // Adds the residue r (mod parts_[k].pe) into the running CRT value c which
  // is already correct modulo the product of the earlier prime powers.
  Elem crt_add(Elem c, std::size_t k, Elem r) const {
    const auto& pp = parts_[k];
    std::uint64_t diff = (r + pp.pe - c % pp.pe) % pp.pe;
    return c + pp.before * (diff * pp.inv_before % pp.pe);
  }

  FiniteRing::Scan lift(const PrimePower& pp, const CoeffMatrix& m, const std::vector<Elem>& rhs,
                        const VectorVisitor& visit) const {
    FiniteRing::Scan scan;
    std::vector<Elem> x(m.cols, 0);
    CoeffMatrix mp(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) mp.data[i] = m.data[i] % pp.p;

    std::function<bool(unsigned, std::uint64_t)> dfs = [&](unsigned level,
                                                           std::uint64_t scale) -> bool {
      if (level == pp.e) {
        ++scan.examined;
        return visit(x);
      }
      // Residual (rhs - M x) mod p^(level+1), divisible by p^level.
      const std::uint64_t mod = scale * pp.p;
      std::vector<Elem> residual(m.rows);
      for (std::size_t i = 0; i < m.rows; ++i) {
        u128 acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
          acc += static_cast<u128>(m.at(i, j) % mod) * x[j];
        std::uint64_t mx = static_cast<std::uint64_t>(acc % mod);
        std::uint64_t r = (rhs[i] % mod + mod - mx) % mod;
        residual[i] = r / scale;
      }
      auto s = solve_over_field(*pp.tables, mp, residual);
      if (!s) return true;
      bool go_on = true;
      enumerate_affine(*pp.tables, *s, [&](const std::vector<Elem>& y) {
        for (std::size_t j = 0; j < m.cols; ++j) x[j] += scale * y[j];
        go_on = dfs(level + 1, mod);
        for (std::size_t j = 0; j < m.cols; ++j) x[j] -= scale * y[j];
        return go_on;
      });
      return go_on;
    };
    scan.completed = dfs(0, 1);
    return scan;
  }

  std::vector<PrimePower> parts_;
};

}  // namespace

std::unique_ptr<CoefficientSolver> make_field_solver(const FiniteRing& field) {
  return std::make_unique<FieldSolver>(field);
}

std::unique_ptr<CoefficientSolver> make_zmod_solver(std::uint64_t n) {
  return std::make_unique<ZModSolver>(n);
}

std::unique_ptr<CoefficientSolver> CoefficientSolver::for_ring(const FiniteRing& base) {
  if (base.size() <= FiniteRing::kTableCap && base.is_commutative() && is_division_ring(base))
    return make_field_solver(base);
  if (const auto* z = dynamic_cast<const ZModRing*>(&base)) return make_zmod_solver(z->modulus());
  return nullptr;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace grings
