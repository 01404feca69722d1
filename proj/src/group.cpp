#include "grings/group.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

#include "grings/errors.hpp"

namespace grings {

namespace {

constexpr std::size_t kExhaustiveAssociativityOrder = 64;
constexpr std::size_t kAssociativitySamples = 10000;

std::string power_word(const std::string& name, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

std::string join_words(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<GroupElem> mul_table,
                         GroupElem identity, std::string label,
                         std::vector<Generator> generators,
                         std::vector<std::string> element_names)
    : order_(order),
      table_(std::move(mul_table)),
      identity_(identity),
      inv_(order),
      label_(std::move(label)),
      gens_(std::move(generators)),
      names_(std::move(element_names)) {
  if (order_ == 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != order_ * order_)
    throw std::invalid_argument("multiplication table has wrong size");
  if (identity_ >= order_) throw std::invalid_argument("identity out of range");
  if (names_.size() != order_)
    throw std::invalid_argument("element name list has wrong size");

  // Latin square and identity row/column.
  std::vector<char> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order_; ++c) {
      GroupElem v = table_[r * order_ + c];
      if (v >= order_ || seen[v]) throw std::invalid_argument("row is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order_; ++r) {
      GroupElem v = table_[r * order_ + c];
      if (seen[v]) throw std::invalid_argument("column is not a permutation");
      seen[v] = 1;
    }
  }
  for (GroupElem a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw std::invalid_argument("identity does not act trivially");
  }

  auto assoc = [&](GroupElem a, GroupElem b, GroupElem c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (order_ <= kExhaustiveAssociativityOrder) {
    for (GroupElem a = 0; a < order_; ++a)
      for (GroupElem b = 0; b < order_; ++b)
        for (GroupElem c = 0; c < order_; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<GroupElem> pick(0, static_cast<GroupElem>(order_ - 1));
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("table is not associative");
    }
  }

  for (GroupElem a = 0; a < order_; ++a) {
    for (GroupElem b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        inv_[a] = b;
        break;
      }
    }
  }
  for (const auto& g : gens_) {
    if (g.element >= order_) throw std::invalid_argument("generator out of range");
  }
}

GroupElem FiniteGroup::pow(GroupElem a, std::uint64_t k) const noexcept {
  GroupElem result = identity_;
  GroupElem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (GroupElem a = 0; a < order_; ++a)
    for (GroupElem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupElem FiniteGroup::parse_word(std::string_view word) const {
  GroupElem acc = identity_;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
  };
  bool expect_factor = true;
  while (true) {
    skip_ws();
    if (i >= word.size()) break;
    if (!expect_factor) {
      if (word[i] != '*') throw ParseError(i, "expected '*' between group factors");
      ++i;
      expect_factor = true;
      continue;
    }
    std::size_t start = i;
    if (word[i] == '1') {
      ++i;
      expect_factor = false;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(word[i])))
      throw ParseError(i, "expected a generator name");
    while (i < word.size() && (std::isalnum(static_cast<unsigned char>(word[i])) || word[i] == '_')) ++i;
    std::string name(word.substr(start, i - start));
    auto it = std::find_if(gens_.begin(), gens_.end(),
                           [&](const Generator& g) { return g.name == name; });
    if (it == gens_.end())
      throw ParseError(start, "unknown generator '" + name + "' in group " + label_);
    std::uint64_t exponent = 1;
    skip_ws();
    if (i < word.size() && word[i] == '^') {
      ++i;
      skip_ws();
      std::size_t digits = i;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
      if (digits == i) throw ParseError(digits, "expected an exponent");
      exponent = std::stoull(std::string(word.substr(digits, i - digits)));
    }
    acc = mul(acc, pow(it->element, exponent));
    expect_factor = false;
  }
  if (expect_factor) throw ParseError(i, "empty group word");
  return acc;
}

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<GroupElem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = power_word("g", i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<GroupElem>((i + j) % n);
  }
  std::vector<Generator> gens;
  if (n > 1) gens.push_back({"g", 1});
  return std::make_shared<FiniteGroup>(n, std::move(table), 0, "C" + std::to_string(n),
                                       std::move(gens), std::move(names));
}

GroupPtr make_quaternion8() {
  // Element x^k y^s sits at index k + 4s. From y^-1 x y = x^-1 we get
  // y x^b = x^-b y, and y^2 = x^2.
  constexpr std::size_t n = 8;
  std::vector<GroupElem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = i % 4, s = i / 4;
    names[i] = join_words(power_word("x", a), s ? "y" : "1");
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t b = j % 4, t = j / 4;
      std::size_t e = (s == 0 ? a + b : a + 4 - b) % 4;
      std::size_t prod = (s && t) ? (e + 2) % 4 : e + 4 * ((s + t) % 2);
      table[i * n + j] = static_cast<GroupElem>(prod);
    }
  }
  auto g = std::make_shared<FiniteGroup>(n, std::move(table), 0, "Q8",
                                         std::vector<Generator>{{"x", 1}, {"y", 4}},
                                         std::move(names));
  const GroupElem x = 1, y = 4;
  if (g->pow(x, 4) != 0 || g->pow(x, 2) != g->pow(y, 2) ||
      g->mul(g->mul(g->inv(y), x), y) != g->inv(x))
    throw std::logic_error("quaternion table violates its defining relations");
  return g;
}

GroupPtr make_dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  // r^k s^t at index k + n*t, with s r = r^-1 s and s^2 = 1.
  const std::size_t order = 2 * n;
  std::vector<GroupElem> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t a = i % n, s = i / n;
    names[i] = join_words(power_word("r", a), s ? "s" : "1");
    for (std::size_t j = 0; j < order; ++j) {
      std::size_t b = j % n, t = j / n;
      std::size_t e = (s == 0 ? a + b : a + n - b) % n;
      table[i * order + j] = static_cast<GroupElem>(e + n * ((s + t) % 2));
    }
  }
  return std::make_shared<FiniteGroup>(order, std::move(table), 0, "D" + std::to_string(n),
                                       std::vector<Generator>{{"r", 1}, {"s", static_cast<GroupElem>(n)}},
                                       std::move(names));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t order_cap) {
  const std::size_t ng = g->order(), nh = h->order();
  if (ng * nh > order_cap)
    throw CapExceeded("direct product order " + std::to_string(ng * nh) +
                      " exceeds the cap " + std::to_string(order_cap));
  const std::size_t n = ng * nh;
  // (i, j) sits at index i + ng*j so that C1 x G and G x C1 reproduce G.
  std::vector<GroupElem> table(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      GroupElem i = g->mul(static_cast<GroupElem>(p % ng), static_cast<GroupElem>(q % ng));
      GroupElem j = h->mul(static_cast<GroupElem>(p / ng), static_cast<GroupElem>(q / ng));
      table[p * n + q] = static_cast<GroupElem>(i + ng * j);
    }
  }

  std::set<std::string> taken;
  std::vector<Generator> gens;
  for (const auto& gen : g->generators()) {
    gens.push_back({gen.name, static_cast<GroupElem>(gen.element + ng * h->identity())});
    taken.insert(gen.name);
  }
  std::vector<std::pair<std::string, std::string>> renames;
  for (const auto& gen : h->generators()) {
    std::string name = gen.name;
    for (int suffix = 2; taken.count(name); ++suffix) name = gen.name + std::to_string(suffix);
    taken.insert(name);
    renames.emplace_back(gen.name, name);
    gens.push_back({name, static_cast<GroupElem>(g->identity() + ng * gen.element)});
  }

  // Rename generator occurrences in h's element words token by token.
  auto rename_word = [&](const std::string& w) {
    if (w == "1") return w;
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      if (std::isalpha(static_cast<unsigned char>(w[i]))) {
        std::size_t start = i;
        while (i < w.size() && (std::isalnum(static_cast<unsigned char>(w[i])) || w[i] == '_')) ++i;
        std::string tok = w.substr(start, i - start);
        for (const auto& [from, to] : renames) {
          if (tok == from) {
            tok = to;
            break;
          }
        }
        out += tok;
      } else {
        out += w[i++];
      }
    }
    return out;
  };

  std::vector<std::string> names(n);
  for (std::size_t p = 0; p < n; ++p) {
    names[p] = join_words(g->element_name(static_cast<GroupElem>(p % ng)),
                          rename_word(h->element_name(static_cast<GroupElem>(p / ng))));
  }
  GroupElem identity = static_cast<GroupElem>(g->identity() + ng * h->identity());
  return std::make_shared<FiniteGroup>(n, std::move(table), identity,
                                       g->label() + "x" + h->label(), std::move(gens),
                                       std::move(names));
}

std::uint64_t element_order(const FiniteGroup& g, GroupElem e) {
  if (e >= g.order()) throw std::out_of_range("group element index out of range");
  std::uint64_t k = 1;
  GroupElem cur = e;
  while (cur != g.identity()) {
    cur = g.mul(cur, e);
    ++k;
  }
  return k;
}

std::vector<GroupElem> cyclic_subgroup(const FiniteGroup& g, GroupElem e) {
  std::vector<GroupElem> out{g.identity()};
  for (GroupElem cur = e; cur != g.identity(); cur = g.mul(cur, e)) out.push_back(cur);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElem> generated_subgroup(const FiniteGroup& g,
                                          const std::vector<GroupElem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<GroupElem> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    for (GroupElem s : gens) {
      GroupElem next = g.mul(members[idx], s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_normal(const FiniteGroup& g, const std::vector<GroupElem>& s) {
  std::vector<char> in(g.order(), 0);
  for (GroupElem e : s) {
    if (e >= g.order()) throw std::invalid_argument("subset element out of range");
    in[e] = 1;
  }
  if (s.empty() || !in[g.identity()]) throw std::invalid_argument("subset is not a subgroup");
  for (GroupElem a : s) {
    if (!in[g.inv(a)]) throw std::invalid_argument("subset is not a subgroup");
    for (GroupElem b : s)
      if (!in[g.mul(a, b)]) throw std::invalid_argument("subset is not a subgroup");
  }
  for (GroupElem a = 0; a < g.order(); ++a) {
    GroupElem ai = g.inv(a);
    for (GroupElem e : s)
      if (!in[g.mul(g.mul(a, e), ai)]) return false;
  }
  return true;
}

bool is_hamiltonian(const FiniteGroup& g) {
  if (g.is_abelian()) return false;
  for (GroupElem e = 0; e < g.order(); ++e)
    if (!is_normal(g, cyclic_subgroup(g, e))) return false;
  return true;
}

std::vector<std::vector<GroupElem>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<GroupElem>> found;
  for (GroupElem e = 0; e < g.order(); ++e) found.insert(cyclic_subgroup(g, e));
  std::vector<std::vector<GroupElem>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<GroupElem>> next;
    for (const auto& s : frontier) {
      for (GroupElem e = 0; e < g.order(); ++e) {
        if (std::binary_search(s.begin(), s.end(), e)) continue;
        std::vector<GroupElem> gens = s;
        gens.push_back(e);
        auto joined = generated_subgroup(g, gens);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::size_t conjugacy_class_count(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t classes = 0;
  for (GroupElem e = 0; e < g.order(); ++e) {
    if (seen[e]) continue;
    ++classes;
    for (GroupElem a = 0; a < g.order(); ++a) seen[g.mul(g.mul(a, e), g.inv(a))] = 1;
  }
  return classes;
}

GroupPtr parse_group(std::string_view expr, std::size_t order_cap) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  auto number = [&]() -> std::size_t {
    std::size_t start = i;
    while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
    if (start == i) throw ParseError(start, "expected a number");
    return std::stoul(std::string(expr.substr(start, i - start)));
  };
  auto factor = [&]() -> GroupPtr {
    skip_ws();
    if (i >= expr.size()) throw ParseError(i, "expected a group factor");
    std::size_t start = i;
    char c = expr[i++];
    try {
      switch (c) {
        case 'Q': {
          std::size_t n = number();
          if (n != 8) throw ParseError(start, "only Q8 is supported");
          return make_quaternion8();
        }
        case 'C': {
          std::size_t n = number();
          if (n > order_cap) throw CapExceeded("group order exceeds the cap");
          return make_cyclic(n);
        }
        case 'D': {
          std::size_t n = number();
          if (2 * n > order_cap) throw CapExceeded("group order exceeds the cap");
          return make_dihedral(n);
        }
        default:
          throw ParseError(start, std::string("unknown group factor '") + c + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(start, e.what());
    }
  };

  GroupPtr acc = factor();
  while (true) {
    skip_ws();
    if (i >= expr.size()) break;
    if (expr[i] != 'x') throw ParseError(i, "expected 'x' between group factors");
    ++i;
    acc = direct_product(acc, factor(), order_cap);
  }
  return acc;
}

}  // namespace grings
