#include <doctest.h>

#include <algorithm>

#include "grings/decompose.hpp"
#include "grings/expr.hpp"
#include "grings/group.hpp"
#include "grings/rings.hpp"
#include "oracle.hpp"

using namespace grings;

namespace {

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("fields and coordinate splittings") {
  auto f = central_idempotent_decomposition(parse_ring("GF(4)"));
  CHECK(f.idempotents == ElementList{1});
  CHECK(f.kinds == std::vector<FactorKind>{FactorKind::DivisionRing});
  CHECK(f.checks.all());

  auto s = central_idempotent_decomposition(parse_ring("GF(2)(+)GF(3)"));
  CHECK(sorted(s.factor_sizes()) == std::vector<Elem>{2, 3});
  CHECK(s.checks.all());

  auto z6 = central_idempotent_decomposition(make_zmod(6));
  CHECK(z6.idempotents == ElementList{3, 4});
  CHECK(z6.factor_sizes() == std::vector<Elem>{2, 3});
}

TEST_CASE("GF(3)Q8 against a brute-force center scan") {
  oracle::Q8Algebra q(3);
  const Elem x = 3, y = 81;  // basis elements x and y
  std::vector<Elem> center, idem;
  for (Elem a = 0; a < q.size(); ++a)
    if (q.mul(a, x) == q.mul(x, a) && q.mul(a, y) == q.mul(y, a)) center.push_back(a);
  CHECK(center.size() == 243);
  for (Elem e : center)
    if (q.mul(e, e) == e) idem.push_back(e);
  CHECK(idem.size() == 32);
  std::vector<Elem> primitive, sizes;
  for (Elem e : idem) {
    if (e == 0) continue;
    bool split = false;
    for (Elem f : idem)
      if (f != 0 && f != e && q.mul(e, f) == f) split = true;
    if (split) continue;
    primitive.push_back(e);
    std::vector<bool> seen(q.size(), false);
    Elem count = 0;
    for (Elem a = 0; a < q.size(); ++a) {
      Elem p = q.mul(e, a);
      if (!seen[p]) {
        seen[p] = true;
        ++count;
      }
    }
    sizes.push_back(count);
  }

  auto r = parse_ring("GF(3)[Q8]");
  auto d = central_idempotent_decomposition(r);
  CHECK(d.central_idempotent_count == idem.size());
  CHECK(d.idempotents == primitive);
  CHECK(d.factor_sizes() == sizes);
  CHECK(sorted(sizes) == std::vector<Elem>{3, 3, 3, 3, 81});
  CHECK(d.checks.all());
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (d.factors[i]->size() == 81) {
      CHECK(d.kinds[i] == FactorKind::MatrixLike);
      CHECK_FALSE(is_division_ring(*d.factors[i]));
    } else {
      CHECK(d.kinds[i] == FactorKind::DivisionRing);
    }
  }
  auto j = to_json(d);
  CHECK(j["factor_sizes"].size() == 5);
  CHECK(j["checks"]["reassembly"] == true);
}

TEST_CASE("factor kinds") {
  auto m = central_idempotent_decomposition(parse_ring("M2(GF(2))"));
  CHECK(m.kinds == std::vector<FactorKind>{FactorKind::MatrixLike});
  auto q = central_idempotent_decomposition(parse_ring("GF(2)[Q8]"));
  CHECK(q.kinds == std::vector<FactorKind>{FactorKind::Other});
  auto c3 = central_idempotent_decomposition(parse_ring("GF(2)[C3]"));
  CHECK(sorted(c3.factor_sizes()) == std::vector<Elem>{2, 4});
  CHECK(std::all_of(c3.kinds.begin(), c3.kinds.end(),
                    [](FactorKind k) { return k == FactorKind::DivisionRing; }));
  CHECK(is_simple(*parse_ring("M2(GF(3))")));
  CHECK_FALSE(is_simple(*make_zmod(4)));
}

TEST_CASE("reassembly and idempotent laws on the corpus") {
  for (const char* e : {"Z/12", "GF(2)(+)GF(4)", "M2(GF(2))(+)GF(3)", "GF(2)[C3]", "GF(3)[C2]",
                        "GF(4)[C3]", "Z/4[C2]", "Z/6[C2]"}) {
    auto d = central_idempotent_decomposition(parse_ring(e));
    CHECK_MESSAGE(d.checks.all(), e);
  }
}

TEST_CASE("semisimple equivalences") {
  auto gf3 = verify_semisimple_equivalences(parse_ring("GF(3)"), make_quaternion8());
  CHECK(gf3.hypothesis());
  CHECK(gf3.asserted);
  CHECK(gf3.consistent);
  for (const auto& v : gf3.verdicts) CHECK(v.status == Status::Fails);

  auto c3 = verify_semisimple_equivalences(parse_ring("GF(2)"), make_cyclic(3));
  CHECK(c3.consistent);
  CHECK(c3.all_division);
  for (const auto& v : c3.verdicts) CHECK(v.status == Status::Holds);

  auto q = verify_semisimple_equivalences(parse_ring("GF(2)"), make_quaternion8());
  CHECK_FALSE(q.hypothesis());
  CHECK_FALSE(q.asserted);

  auto d3 = verify_semisimple_equivalences(parse_ring("GF(5)"), make_dihedral(3));
  CHECK(d3.hypothesis());
  CHECK(d3.consistent);
}

TEST_CASE("direct sum lemma") {
  auto a = verify_direct_sum_lemma({parse_ring("GF(2)[Q8]"), parse_ring("Z/3")});
  CHECK(a.consistent());
  for (const auto& row : a.rows) {
    if (row.property == Property::Symmetric)
      CHECK(row.sum == Status::Fails);
    else
      CHECK(row.sum == Status::Holds);
  }
  auto b = verify_direct_sum_lemma({parse_ring("M2(GF(2))"), parse_ring("GF(3)")});
  CHECK(b.consistent());
  for (const auto& row : b.rows) CHECK(row.sum == Status::Fails);
  auto c = verify_direct_sum_lemma({parse_ring("GF(2)")});
  CHECK(c.consistent());
}

TEST_CASE("commutative semisimple rings split into fields") {
  for (const char* e : {"Z/2", "Z/6", "Z/10", "GF(4)", "GF(2)[C3]", "GF(2)(+)Z/3", "GF(3)[C2]"})
    CHECK_MESSAGE(commutative_factors_are_fields(parse_ring(e)), e);
  CHECK_FALSE(commutative_factors_are_fields(parse_ring("Z/4")));
  CHECK_FALSE(commutative_factors_are_fields(parse_ring("M2(GF(2))")));
}

TEST_CASE("base splitting") {
  auto s = verify_base_splitting(make_zmod(6), make_cyclic(2));
  CHECK(s.factor_rings.size() == 2);
  CHECK(s.consistent());
  auto t = verify_base_splitting(make_zmod(4), make_cyclic(2));
  CHECK(t.rows.empty());
  CHECK_FALSE(t.consistent());
}
