#include "grings/rings.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "grings/errors.hpp"

namespace grings {

__extension__ typedef unsigned __int128 u128;

namespace {


std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

bool wrapped_in(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close) return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

Elem checked_power(Elem base, std::uint64_t exp, Elem cap, const std::string& what) {
  u128 acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > cap) throw CapExceeded(what + " exceeds the size cap " + std::to_string(cap));
  }
  return static_cast<Elem>(acc);
}

// Polynomials over Z/p, constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::invalid_argument("no inverse modulo p");
}

// Remainder of f modulo g (g nonzero).
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  normalize(f);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    std::uint64_t factor = f.back() * lead_inv % p;
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + (p - factor) * g[i]) % p;
    normalize(f);
  }
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Z/n

ZModRing::ZModRing(std::uint64_t n) : FiniteRing(n, "Z/" + std::to_string(n)) {}

Elem ZModRing::raw_add(Elem a, Elem b) const {
  return static_cast<Elem>((u128(a) + b) % size());
}
Elem ZModRing::raw_mul(Elem a, Elem b) const {
  return static_cast<Elem>((u128(a) * b) % size());
}
Elem ZModRing::raw_neg(Elem a) const { return a == 0 ? 0 : size() - a; }

RingPtr make_zmod(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("Z/n needs n >= 2");
  auto r = std::shared_ptr<ZModRing>(new ZModRing(n));
  r->finalize(true);
  return r;
}

// ---------------------------------------------------------------- GF(p^k)

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic) {
  Poly f = monic;
  normalize(f);
  const std::size_t k = f.empty() ? 0 : f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  // Any factorization has a monic factor of degree <= k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> default_irreducible(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p^k) needs a prime p");
  if (k == 0) throw std::invalid_argument("GF(p^k) needs k >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

GaloisField::GaloisField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : FiniteRing(checked_power(p, k, Elem{1} << 32, "GF(p^k)"),
                 k == 1 ? "GF(" + std::to_string(p) + ")"
                        : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")"),
      p_(p),
      k_(k),
      modulus_(std::move(modulus)) {}

Elem GaloisField::raw_add(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem GaloisField::raw_neg(Elem a) const {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem GaloisField::raw_mul(Elem a, Elem b) const {
  Poly fa(k_), fb(k_);
  for (unsigned i = 0; i < k_; ++i) {
    fa[i] = a % p_;
    fb[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  Poly rem = poly_mod(prod, modulus_, p_);
  Elem out = 0, scale = 1;
  for (std::size_t i = 0; i < rem.size(); ++i) {
    out += rem[i] * scale;
    scale *= p_;
  }
  return out;
}

ElementList GaloisField::compute_additive_generators() const {
  ElementList gens;
  Elem scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    gens.push_back(scale);
    scale *= p_;
  }
  return gens;
}

std::string GaloisField::format(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::vector<std::uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty())
      out += std::to_string(c[i]);
    else if (c[i] == 1)
      out += mono;
    else
      out += std::to_string(c[i]) + "*" + mono;
  }
  return out;
}

Elem GaloisField::parse(std::string_view text) const {
  text = trim(text);
  if (wrapped_in(text, '(', ')')) text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw ParseError(0, "empty field element");
  std::vector<std::uint64_t> c(k_, 0);
  std::size_t i = 0;
  while (i < text.size()) {
    bool negative = false;
    while (i < text.size() && (text[i] == '+' || text[i] == '-' || text[i] == ' ')) {
      if (text[i] == '-') negative = !negative;
      ++i;
    }
    std::uint64_t coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coef = std::stoull(std::string(text.substr(start, i - start))) % p_;
      have_coef = true;
    }
    while (i < text.size() && (text[i] == ' ' || text[i] == '*')) ++i;
    unsigned power = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t ds = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (ds == i) throw ParseError(ds, "expected an exponent");
        power = static_cast<unsigned>(std::stoul(std::string(text.substr(ds, i - ds))));
      }
    } else if (!have_coef) {
      throw ParseError(i, "cannot read field element '" + std::string(text) + "'");
    }
    if (power >= k_) throw ParseError(start, "power of t must stay below the degree");
    if (negative) coef = (p_ - coef) % p_;
    c[power] = (c[power] + coef) % p_;
    while (i < text.size() && text[i] == ' ') ++i;
  }
  Elem out = 0, scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += c[j] * scale;
    scale *= p_;
  }
  return out;
}

RingPtr make_gf(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p^k) needs a prime p");
  if (k == 0) throw std::invalid_argument("GF(p^k) needs k >= 1");
  if (modulus.size() != k + 1 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree k");
  for (auto& c : modulus) c %= p;
  if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible");
  auto r = std::shared_ptr<GaloisField>(new GaloisField(p, k, std::move(modulus)));
  r->finalize(true);
  return r;
}

RingPtr make_gf(std::uint64_t p, unsigned k) { return make_gf(p, k, default_irreducible(p, k)); }

// ---------------------------------------------------------------- M_n(R)

MatrixRing::MatrixRing(RingPtr base, unsigned n, Elem size)
    : FiniteRing(size, "M" + std::to_string(n) + "(" + base->label() + ")"),
      base_(std::move(base)),
      n_(n) {}

std::vector<Elem> MatrixRing::entries(Elem a) const {
  std::vector<Elem> e(std::size_t{n_} * n_);
  const Elem q = base_->size();
  for (auto& x : e) {
    x = a % q;
    a /= q;
  }
  return e;
}

Elem MatrixRing::from_entries(const std::vector<Elem>& entries) const {
  if (entries.size() != std::size_t{n_} * n_)
    throw std::invalid_argument("matrix needs n*n entries");
  Elem out = 0;
  for (std::size_t i = entries.size(); i-- > 0;) {
    if (entries[i] >= base_->size()) throw std::invalid_argument("matrix entry out of range");
    out = out * base_->size() + entries[i];
  }
  return out;
}

Elem MatrixRing::entry(Elem a, unsigned i, unsigned j) const { return entries(a).at(i * n_ + j); }

Elem MatrixRing::raw_add(Elem a, Elem b) const {
  auto x = entries(a), y = entries(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add(x[i], y[i]);
  return from_entries(x);
}

Elem MatrixRing::raw_neg(Elem a) const {
  auto x = entries(a);
  for (auto& v : x) v = base_->neg(v);
  return from_entries(x);
}

Elem MatrixRing::raw_mul(Elem a, Elem b) const {
  auto x = entries(a), y = entries(b);
  std::vector<Elem> z(x.size(), 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      Elem xik = x[i * n_ + k];
      if (xik == 0) continue;
      for (unsigned j = 0; j < n_; ++j)
        z[i * n_ + j] = base_->add(z[i * n_ + j], base_->mul(xik, y[k * n_ + j]));
    }
  return from_entries(z);
}

Elem MatrixRing::raw_one() const {
  std::vector<Elem> e(std::size_t{n_} * n_, 0);
  for (unsigned i = 0; i < n_; ++i) e[i * n_ + i] = base_->one();
  return from_entries(e);
}

ElementList MatrixRing::compute_additive_generators() const {
  ElementList gens;
  for (std::size_t pos = 0; pos < std::size_t{n_} * n_; ++pos) {
    for (Elem g : base_->additive_generators()) {
      std::vector<Elem> e(std::size_t{n_} * n_, 0);
      e[pos] = g;
      gens.push_back(from_entries(e));
    }
  }
  return gens;
}

std::string MatrixRing::format(Elem a) const {
  auto e = entries(a);
  std::string out = "[";
  for (unsigned i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (unsigned j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += base_->format(e[i * n_ + j]);
    }
    out += "]";
  }
  return out + "]";
}

Elem MatrixRing::parse(std::string_view text) const {
  text = trim(text);
  if (!wrapped_in(text, '[', ']')) return FiniteRing::parse(text);
  auto rows = split_top_level(text.substr(1, text.size() - 2), ',');
  if (rows.size() != n_) throw ParseError(0, "matrix literal needs " + std::to_string(n_) + " rows");
  std::vector<Elem> e;
  for (auto row : rows) {
    if (!wrapped_in(row, '[', ']')) throw ParseError(0, "matrix row must be bracketed");
    auto cells = split_top_level(row.substr(1, row.size() - 2), ',');
    if (cells.size() != n_) throw ParseError(0, "matrix row has the wrong length");
    for (auto cell : cells) e.push_back(base_->parse(cell));
  }
  return from_entries(e);
}

RingPtr make_matrix_ring(const RingPtr& base, unsigned n, Elem cap) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (!base->is_commutative() && !is_division_ring(*base))
    throw std::invalid_argument("matrix base must be commutative or a division ring");
  Elem size = checked_power(base->size(), std::uint64_t{n} * n, cap, "matrix ring");
  auto r = std::shared_ptr<MatrixRing>(new MatrixRing(base, n, size));
  r->finalize(n == 1 && base->is_commutative());
  return r;
}

// ---------------------------------------------------------------- direct sums

DirectSumRing::DirectSumRing(std::vector<RingPtr> parts, Elem size, std::string label)
    : FiniteRing(size, std::move(label)), parts_(std::move(parts)) {}

std::vector<Elem> DirectSumRing::components(Elem a) const {
  std::vector<Elem> c(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    c[i] = a % parts_[i]->size();
    a /= parts_[i]->size();
  }
  return c;
}

Elem DirectSumRing::from_components(const std::vector<Elem>& comps) const {
  if (comps.size() != parts_.size()) throw std::invalid_argument("wrong number of components");
  Elem out = 0;
  for (std::size_t i = parts_.size(); i-- > 0;) {
    if (comps[i] >= parts_[i]->size()) throw std::invalid_argument("component out of range");
    out = out * parts_[i]->size() + comps[i];
  }
  return out;
}

Elem DirectSumRing::embed(std::size_t part, Elem x) const {
  std::vector<Elem> c(parts_.size(), 0);
  c.at(part) = x;
  return from_components(c);
}

Elem DirectSumRing::raw_add(Elem a, Elem b) const {
  auto x = components(a), y = components(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->add(x[i], y[i]);
  return from_components(x);
}

Elem DirectSumRing::raw_mul(Elem a, Elem b) const {
  auto x = components(a), y = components(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->mul(x[i], y[i]);
  return from_components(x);
}

Elem DirectSumRing::raw_neg(Elem a) const {
  auto x = components(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->neg(x[i]);
  return from_components(x);
}

Elem DirectSumRing::raw_one() const {
  std::vector<Elem> c;
  for (const auto& p : parts_) c.push_back(p->one());
  return from_components(c);
}

ElementList DirectSumRing::compute_additive_generators() const {
  ElementList gens;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (Elem g : parts_[i]->additive_generators()) gens.push_back(embed(i, g));
  return gens;
}

std::string DirectSumRing::format(Elem a) const {
  auto c = components(a);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += parts_[i]->format(c[i]);
  }
  return out + ")";
}

Elem DirectSumRing::parse(std::string_view text) const {
  text = trim(text);
  if (!wrapped_in(text, '(', ')')) return FiniteRing::parse(text);
  auto cells = split_top_level(text.substr(1, text.size() - 2), ',');
  if (cells.size() != parts_.size()) {
    // A parenthesized scalar such as "(2)".
    if (cells.size() == 1) return parse(cells[0]);
    throw ParseError(0, "direct sum literal needs " + std::to_string(parts_.size()) + " components");
  }
  std::vector<Elem> c;
  for (std::size_t i = 0; i < cells.size(); ++i) c.push_back(parts_[i]->parse(cells[i]));
  return from_components(c);
}

RingPtr direct_sum(const std::vector<RingPtr>& parts, Elem cap) {
  if (parts.empty()) throw std::invalid_argument("direct sum needs at least one part");
  u128 size = 1;
  std::string label;
  bool commutative = true;
  for (const auto& p : parts) {
    size *= p->size();
    if (size > cap) throw CapExceeded("direct sum exceeds the size cap " + std::to_string(cap));
    if (!label.empty()) label += "(+)";
    bool wrap = dynamic_cast<const DirectSumRing*>(p.get()) != nullptr;
    label += wrap ? "(" + p->label() + ")" : p->label();
    commutative = commutative && p->is_commutative();
  }
  auto r = std::shared_ptr<DirectSumRing>(
      new DirectSumRing(parts, static_cast<Elem>(size), std::move(label)));
  r->finalize(commutative);
  return r;
}

// ---------------------------------------------------------------- subset rings

SubsetRing::SubsetRing(RingPtr parent, ElementList carrier, Elem identity, std::string label)
    : FiniteRing(carrier.size(), std::move(label)),
      parent_(std::move(parent)),
      carrier_(std::move(carrier)),
      identity_(identity) {}

Elem SubsetRing::from_parent(Elem x) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), x);
  if (it == carrier_.end() || *it != x)
    throw std::invalid_argument("element is not in the subring carrier");
  return static_cast<Elem>(it - carrier_.begin());
}

Elem SubsetRing::raw_add(Elem a, Elem b) const {
  return from_parent(parent_->add(carrier_[a], carrier_[b]));
}
Elem SubsetRing::raw_mul(Elem a, Elem b) const {
  return from_parent(parent_->mul(carrier_[a], carrier_[b]));
}
Elem SubsetRing::raw_neg(Elem a) const { return from_parent(parent_->neg(carrier_[a])); }

Elem SubsetRing::parse(std::string_view text) const {
  return from_parent(parent_->parse(text));
}

RingPtr make_subset_ring(const RingPtr& parent, ElementList carrier, Elem identity,
                         std::string label) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (carrier.empty() || carrier.front() != 0)
    throw std::invalid_argument("subring carrier must contain zero");
  auto r = std::shared_ptr<SubsetRing>(
      new SubsetRing(parent, std::move(carrier), identity, std::move(label)));
  r->finalize(false);
  return r;
}

}  // namespace grings
