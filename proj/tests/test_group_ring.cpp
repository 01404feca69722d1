#include <doctest.h>

#include <random>

#include "grings/expr.hpp"
#include "grings/group_ring.hpp"
#include "grings/linalg.hpp"
#include "grings/rings.hpp"
#include "oracle.hpp"

using namespace grings;

namespace {

std::shared_ptr<const GroupRing> gr(const char* base, const char* group) {
  return parse_group_ring(base, group);
}

// Runs f on every pair when there are at most 2^16 pairs, else on 10^4
// seeded random pairs.
template <class F>
void for_pairs(const FiniteRing& r, F f) {
  if (r.size() * r.size() <= (1u << 16)) {
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b) f(a, b);
    return;
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Elem> pick(0, r.size() - 1);
  for (int i = 0; i < 10000; ++i) f(pick(rng), pick(rng));
}

}  // namespace

TEST_CASE("products agree with the quaternion oracle") {
  for (std::uint64_t n : {2u, 3u, 4u, 6u}) {
    auto r = gr(("Z/" + std::to_string(n)).c_str(), "Q8");
    oracle::Q8Algebra ref(n);
    REQUIRE(r->size() == ref.size());
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<Elem> pick(0, r->size() - 1);
    for (int i = 0; i < 2000; ++i) {
      Elem a = pick(rng), b = pick(rng);
      CHECK(r->mul(a, b) == ref.mul(a, b));
      CHECK(r->add(a, b) == ref.add(a, b));
    }
  }
}

TEST_CASE("basis elements and identity") {
  auto r = gr("Z/3", "Q8");
  const auto& g = r->group();
  for (GroupElem x = 0; x < 8; ++x)
    for (GroupElem y = 0; y < 8; ++y) CHECK(r->mul(r->basis(x), r->basis(y)) == r->basis(g.mul(x, y)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Elem> pick(0, r->size() - 1);
  for (int i = 0; i < 100; ++i) {
    Elem a = pick(rng);
    CHECK(r->mul(a, r->one()) == a);
    CHECK(r->mul(r->one(), a) == a);
  }
}

TEST_CASE("the (1+x)(1+x+x^2+x^3) = 0 construction") {
  auto r = parse_ring("GF(2)[Q8]");
  CHECK(r->mul(r->parse("1 + x"), r->parse("1 + x + x^2 + x^3")) == 0);
  auto z3 = gr("Z/3", "Q8");
  CHECK(z3->mul(z3->parse("1 + 2*x"), z3->parse("1 + x + x^2 + x^3")) == 0);
}

TEST_CASE("element literals") {
  auto r = gr("Z/3", "Q8");
  CHECK(r->format(0) == "0");
  CHECK(r->format(r->one()) == "1");
  CHECK(r->parse("1 + x + 2*x^2*y") == r->from_coefficients({1, 1, 0, 0, 0, 0, 2, 0}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Elem> pick(0, r->size() - 1);
  for (int i = 0; i < 500; ++i) {
    Elem a = pick(rng);
    CHECK(r->parse(r->format(a)) == a);
  }
  auto f4 = gr("GF(4)", "C3");
  for (Elem a = 0; a < f4->size(); ++a) CHECK(f4->parse(f4->format(a)) == a);
}

TEST_CASE("value elements and JSON") {
  auto r = gr("Z/3", "Q8");
  auto a = GroupRingElement::parse(r, "1 + x");
  auto b = GroupRingElement::parse(r, "2*y");
  CHECK(gr_mul(a, b).to_string() == "2*y + 2*x*y");
  CHECK(gr_add(a, a).to_string() == "2 + 2*x");
  CHECK(involution(a).to_string() == "1 + x^3");
  CHECK(trace(a) == 1);
  CHECK(augmentation(a) == 2);
  auto j = to_json(gr_mul(a, b));
  CHECK(j["ring"] == "Z/3[Q8]");
  CHECK(element_from_json(r, j) == gr_mul(a, b));
  auto other = gr("Z/3", "C8");
  CHECK_THROWS_AS(gr_mul(a, GroupRingElement::from_index(other, 1)), std::invalid_argument);
}

TEST_CASE("involution is an anti-automorphism") {
  for (auto [base, group] : {std::pair{"GF(2)", "Q8"}, {"Z/3", "Q8"}, {"Z/4", "D3"}, {"GF(2)", "C3"}}) {
    auto r = gr(base, group);
    CAPTURE(r->label());
    for_pairs(*r, [&](Elem a, Elem b) {
      CHECK(r->involution(r->mul(a, b)) == r->mul(r->involution(b), r->involution(a)));
      CHECK(r->involution(r->add(a, b)) == r->add(r->involution(a), r->involution(b)));
    });
    for (Elem a = 0; a < std::min<Elem>(r->size(), 4096); ++a)
      CHECK(r->involution(r->involution(a)) == a);
    for (GroupElem g = 0; g < r->group().order(); ++g)
      CHECK(r->involution(r->basis(g)) == r->basis(r->group().inv(g)));
  }
}

TEST_CASE("trace is symmetric") {
  auto r = gr("Z/3", "C4");
  for (Elem a = 0; a < r->size(); ++a)
    for (Elem b = 0; b < r->size(); ++b) CHECK(r->trace(r->mul(a, b)) == r->trace(r->mul(b, a)));
  auto q = gr("GF(2)", "Q8");
  for_pairs(*q, [&](Elem a, Elem b) { CHECK(q->trace(q->mul(a, b)) == q->trace(q->mul(b, a))); });
  CHECK(q->trace(q->one()) == 1);
  for (GroupElem g = 1; g < 8; ++g) CHECK(q->trace(q->basis(g)) == 0);
}

TEST_CASE("traces recover coefficients") {
  auto r = gr("Z/3", "Q8");
  const auto& g = r->group();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Elem> pick(0, r->size() - 1);
  for (int i = 0; i < 100; ++i) {
    Elem a = pick(rng);
    std::vector<Elem> coeffs;
    for (GroupElem h = 0; h < g.order(); ++h) coeffs.push_back(r->trace(r->mul(r->basis(g.inv(h)), a)));
    CHECK(coeffs == r->coefficients(a));
  }
}

TEST_CASE("augmentation is a ring homomorphism") {
  auto r = gr("Z/4", "Q8");
  const auto& base = r->base();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Elem> pick(0, r->size() - 1);
  for (int i = 0; i < 2000; ++i) {
    Elem a = pick(rng), b = pick(rng);
    CHECK(r->augmentation(r->mul(a, b)) == base.mul(r->augmentation(a), r->augmentation(b)));
    CHECK(r->augmentation(r->add(a, b)) == base.add(r->augmentation(a), r->augmentation(b)));
  }
}

TEST_CASE("characteristic is inherited") {
  for (auto [base, group] : {std::pair{"GF(2)", "Q8"}, {"Z/6", "Q8"}, {"Z/4", "C2"}, {"GF(9)", "C2"}}) {
    auto r = gr(base, group);
    CHECK(r->characteristic() == r->base().characteristic());
  }
}

TEST_CASE("multiplication matrices") {
  for (auto [base, group] : {std::pair{"Z/6", "Q8"}, {"GF(4)", "D3"}}) {
    auto r = gr(base, group);
    const auto& k = r->base();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Elem> pick(0, r->size() - 1);
    for (int i = 0; i < 200; ++i) {
      Elem a = pick(rng), b = pick(rng);
      auto apply = [&](const CoeffMatrix& m) {
        auto v = r->coefficients(b);
        std::vector<Elem> out(m.rows, 0);
        for (std::size_t row = 0; row < m.rows; ++row)
          for (std::size_t col = 0; col < m.cols; ++col)
            out[row] = k.add(out[row], k.mul(m.at(row, col), v[col]));
        return r->from_coefficients(out);
      };
      CHECK(apply(r->left_mul_matrix(a)) == r->mul(a, b));
      CHECK(apply(r->right_mul_matrix(a)) == r->mul(b, a));
    }
  }
}

TEST_CASE("annihilators match carrier scans") {
  for (auto [base, group] : {std::pair{"GF(2)", "Q8"}, {"Z/4", "C2"}, {"Z/6", "C2"}, {"GF(4)", "C3"},
                             {"Z/6", "C3"}, {"Z/9", "C2"}, {"GF(3)", "D3"}}) {
    auto r = gr(base, group);
    CAPTURE(r->label());
    REQUIRE(r->has_linear_solver());
    for (Elem a = 0; a < r->size(); a += 1 + r->size() / 97) {
      ElementList right, left, want_right, want_left;
      r->for_each_right_annihilator(a, [&](Elem b) { right.push_back(b); return true; });
      r->for_each_left_annihilator(a, [&](Elem b) { left.push_back(b); return true; });
      for (Elem b = 0; b < r->size(); ++b) {
        if (r->mul(a, b) == 0) want_right.push_back(b);
        if (r->mul(b, a) == 0) want_left.push_back(b);
      }
      std::sort(right.begin(), right.end());
      std::sort(left.begin(), left.end());
      CHECK(right == want_right);
      CHECK(left == want_left);
      CHECK(r->is_unit(a) == (want_right.size() == 1 && want_left.size() == 1));
    }
  }
}

TEST_CASE("principal ideals match carrier scans") {
  for (auto [base, group] : {std::pair{"Z/4", "C2"}, {"Z/6", "C2"}, {"GF(2)", "D3"}}) {
    auto r = gr(base, group);
    for (Elem a = 0; a < r->size(); ++a) {
      std::vector<bool> aR(r->size(), false), Ra(r->size(), false);
      for (Elem x = 0; x < r->size(); ++x) {
        aR[r->mul(a, x)] = true;
        Ra[r->mul(x, a)] = true;
      }
      auto right = r->right_multiples(a);
      auto left = r->left_multiples(a);
      for (Elem y = 0; y < r->size(); ++y) {
        CHECK(right->contains(y) == aR[y]);
        CHECK(left->contains(y) == Ra[y]);
      }
    }
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS(make_group_ring(make_zmod(6), parse_group("Q8xC3")));
  CHECK_THROWS(make_group_ring(parse_ring("M2(GF(2))"), make_cyclic(2)));
}
