#include "doctest.h"
#include "linf/comoment.hpp"

using namespace linf;

namespace {

Poly X(int i) { return Poly::var(i); }

int so_index(int n, int a, int b) {  // 1-based a < b
  auto pairs = so_pairs(n);
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i] == std::make_pair(a - 1, b - 1)) return static_cast<int>(i);
  return -1;
}

MssSpace space_for(int n) { return n == 2 ? MssSpace::symplectic(2) : MssSpace::volume(n); }

Comoment euler_comoment(const ActionData& A, const MssSpace& M) {
  PolyForm alpha = iota(PolyField::euler(M.N), M.omega);
  alpha *= Q(1, M.N);
  return comoment_from_potential(alpha, A, M);
}

// Euclidean algebra so(3) + translations on R^3.
ActionData euclidean3() {
  auto so3 = so_n_action(3);
  std::vector<std::string> labels;
  std::vector<PolyField> fields;
  for (int i = 0; i < 3; ++i) {
    labels.push_back(so3.algebra.space->label(i));
    fields.push_back(so3.fields[i]);
  }
  for (int i = 0; i < 3; ++i) {
    labels.push_back("t" + std::to_string(i + 1));
    fields.push_back(PolyField::coordinate(3, i));
  }
  return action_from_fields(labels, fields);
}

}  // namespace

TEST_CASE("so(n) actions") {
  auto A3 = so_n_action(3);
  CHECK(A3.algebra.dim() == 3);
  CHECK(so_n_action(4).algebra.dim() == 6);
  CHECK(A3.algebra.bracket_basis(so_index(3, 1, 2), so_index(3, 1, 3)) ==
        Element::basis(A3.algebra.space, so_index(3, 2, 3)));
  for (int n = 3; n <= 5; ++n) {
    auto g = so_algebra(n);
    for (int k = 1; k <= n; ++k)
      for (int a = k + 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          CHECK(g.bracket_basis(so_index(n, k, a), so_index(n, k, b)) == Element::basis(g.space, so_index(n, a, b)));
  }
  // v_{A_ab} = (-1)^{1+a+b} (x_a d_b - x_b d_a)
  auto v13 = A3.fields[so_index(3, 1, 3)];
  CHECK(v13 == Q(-1) * (PolyField::coordinate(3, 2, X(0)) - PolyField::coordinate(3, 0, X(2))));
  auto vol = PolyForm::volume(3);
  CHECK(lie(A3.fields[so_index(3, 1, 2)], vol).is_zero());
  CHECK_THROWS(so_n_action(1));
  // a wrong structure constant is caught
  CHECK_THROWS(ActionData::make(LieAlgebraData::make({"a", "b", "c"}, {{0, 1, 2, Q(-1)}, {0, 2, 1, Q(-1)}, {1, 2, 0, Q(1)}}),
                                A3.fields));
}

TEST_CASE("action from fields") {
  auto E = euclidean3();
  CHECK(E.algebra.dim() == 6);
  // rotations act on translations
  auto br = E.algebra.bracket_basis(0, 3);
  CHECK(E.field(br) == bracket(E.fields[0], E.fields[3]));
  CHECK_THROWS(action_from_fields({"a", "b"}, {PolyField::coordinate(2, 0), PolyField::coordinate(2, 0)}));
  // x d/dy and d/dx do not close: [d/dx, x d/dy] = d/dy
  CHECK_THROWS(action_from_fields({"a", "b"}, {PolyField::coordinate(2, 0), PolyField::coordinate(2, 1, X(0))}));
}

TEST_CASE("verify_comoment examples") {
  auto S = MssSpace::symplectic(2);
  auto A = so_n_action(2);
  Comoment f{1, 2, {{{0}, PolyForm::function(2, Q(1, 2) * (X(0) * X(0) + X(1) * X(1)))}}};
  CHECK(verify_comoment(f, A, S).ok);
  CHECK(euler_comoment(A, S) == f);

  auto M = MssSpace::volume(3);
  auto A3 = so_n_action(3);
  auto g = euler_comoment(A3, M);
  auto r = verify_comoment(g, A3, M);
  CHECK(r.ok);
  CHECK(r.tuples_checked == 3 + 3 + 1);

  Comoment zero{2, 3, {}};
  auto z = verify_comoment(zero, A3, M);
  CHECK_FALSE(z.ok);
  REQUIRE(z.failure);
  CHECK(z.failure->k == 1);
  CHECK_FALSE(z.failure->residual.empty());

  // a non-invariant form is rejected
  auto bent = MssSpace::make(PolyForm::volume(3) + PolyForm::basic(3, {0, 1, 2}, X(0)));
  CHECK_THROWS(verify_comoment(g, A3, bent));
}

TEST_CASE("euler potential comoments for so(n)") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    auto A = so_n_action(n);
    auto M = space_for(n);
    PolyForm E = iota(PolyField::euler(n), PolyForm::volume(n));
    CHECK_FALSE(A.non_preserving(E));  // strictly conserved
    auto f = euler_comoment(A, M);
    CHECK(verify_comoment(f, A, M).ok);
    CHECK(check_comoment_morphism(f, A, M).ok);
    CHECK(equivariance(f, A).equivariant);
    // constraint at the top: mu_{n+1} = 0
    for (const auto& p : wedge_basis(A.algebra.dim(), M.n + 1))
      CHECK(mu_aux(f, A, M.omega, M.n + 1, p).is_zero());
  }
  // a non-invariant potential is refused
  auto M = MssSpace::volume(3);
  CHECK_THROWS(comoment_from_potential(PolyForm::basic(3, {1, 2}, X(0)), so_n_action(3), M));
}

TEST_CASE("mu_aux") {
  auto M = MssSpace::volume(3);
  auto A = so_n_action(3);
  auto f = euler_comoment(A, M);
  auto mu = mu_aux(f, A, M.omega, 2, {0, 1});
  CHECK(mu.degree() == 1);
  CHECK(d(mu).is_zero());
  // abelian: only the contraction survives
  auto M4 = MssSpace::volume(4);
  auto P = product_action(so_n_action(2), so_n_action(2));
  auto fp = euler_comoment(P, M4);
  CHECK(verify_comoment(fp, P, M4).ok);
  PolyForm expect = iota_seq(P.fields_of({0, 1}), M4.omega);
  expect *= Q(varsigma(2));
  CHECK(mu_aux(fp, P, M4.omega, 2, {0, 1}) == expect);
}

TEST_CASE("gauge shifted comoments") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    auto A = so_n_action(n);
    auto M = space_for(n);
    auto f = euler_comoment(A, M);
    PolyForm B = iota(PolyField::euler(n), M.omega);
    auto ft = gauge_shift_comoment(f, A, B);
    CHECK(verify_comoment(ft, A, M.omega + d(B)).ok);
    CHECK_FALSE(verify_comoment(ft, A, M.omega - d(B)).ok);
    // the opposite shift belongs to omega - dB
    CHECK(verify_comoment(gauge_shift_comoment(f, A, -B), A, M.omega - d(B)).ok);
    CHECK(gauge_shift_comoment(ft, A, -B) == f);
    CHECK(gauge_shift_comoment(f, A, PolyForm(n, M.n)) == f);
    // b_1(x) = -iota_{v_x} B up to the sign of s(2) = 1
    CHECK(ft.eval(std::vector<int>{0}) - f.eval(std::vector<int>{0}) == iota(A.fields[0], B));
  }
  auto A = so_n_action(3);
  auto M = MssSpace::volume(3);
  CHECK_THROWS(gauge_shift_comoment(euler_comoment(A, M), A, PolyForm::basic(3, {0, 1}, X(0))));
}

TEST_CASE("equivariance detects a broken comoment") {
  auto P = product_action(so_n_action(2), so_n_action(2));
  auto M = MssSpace::volume(4);
  auto f = euler_comoment(P, M);
  CHECK(equivariance(f, P).equivariant);
  // a closed non-invariant shift keeps the equations on an abelian algebra
  f.values[{0}] += PolyForm::basic(4, {0, 2});
  CHECK(verify_comoment(f, P, M).ok);
  auto e = equivariance(f, P);
  CHECK_FALSE(e.equivariant);
  REQUIRE(e.failure);
}

TEST_CASE("adjoint action on wedges") {
  auto g = so_algebra(3);
  Chain p{{{0, 1}, Q(1)}};
  // [A12, A12 ^ A13] = A12 ^ [A12, A13] = A12 ^ A23
  Chain expect{{{0, 2}, Q(1)}};
  CHECK(adjoint_action(g, 0, p) == expect);
}

TEST_CASE("induced comoments") {
  auto A = so_n_action(3);
  auto M = MssSpace::volume(3);
  auto f = euler_comoment(A, M);
  SUBCASE("subalgebra") {
    auto h = induce_subalgebra(f, A, M.omega, {{1, 0, 0}});
    CHECK(h.action.algebra.dim() == 1);
    CHECK(verify_comoment(h.f, h.action, h.omega).ok);
    CHECK(h.f.eval(std::vector<int>{0}) == f.eval(std::vector<int>{0}));
    CHECK_THROWS(subalgebra(A.algebra, {{1, 0, 0}, {0, 1, 0}}));
  }
  SUBCASE("submanifold") {
    auto h = induce_subalgebra(f, A, M.omega, {{1, 0, 0}});
    Matrix plane{{1, 0}, {0, 1}, {0, 0}};
    auto s = induce_submanifold(h.f, h.action, h.omega, plane);
    CHECK(s.action.N == 2);
    CHECK(verify_comoment(s.f, s.action, s.omega).ok);
    CHECK_THROWS(induce_submanifold(f, A, M.omega, plane));
  }
  SUBCASE("lie kernel on so(4)") {
    auto A4 = so_n_action(4);
    auto M4 = MssSpace::volume(4);
    auto f4 = euler_comoment(A4, M4);
    Chain p{{{so_index(4, 1, 2), so_index(4, 3, 4)}, Q(1)}};
    for (auto v : {KernelVariant::wedge, KernelVariant::contract}) {
      auto k = induce_lie_kernel(f4, A4, M4.omega, p, v);
      CHECK(k.action.algebra.dim() == 2);
      CHECK(verify_comoment(k.f, k.action, k.omega).ok);
    }
    Chain notcycle{{{so_index(4, 1, 2), so_index(4, 1, 3)}, Q(1)}};
    CHECK_THROWS(induce_lie_kernel(f4, A4, M4.omega, notcycle, KernelVariant::wedge));
  }
  SUBCASE("lie kernel of a self-dual rotation") {
    // A12 + A34 has a 4-dimensional centralizer and nonzero induced components
    auto A4 = so_n_action(4);
    auto M4 = MssSpace::volume(4);
    auto f4 = euler_comoment(A4, M4);
    Chain p{{{so_index(4, 1, 2)}, Q(1)}, {{so_index(4, 3, 4)}, Q(1)}};
    auto w = induce_lie_kernel(f4, A4, M4.omega, p, KernelVariant::wedge);
    auto c = induce_lie_kernel(f4, A4, M4.omega, p, KernelVariant::contract);
    CHECK(w.action.algebra.dim() == 4);
    CHECK(verify_comoment(w.f, w.action, w.omega).ok);
    CHECK(verify_comoment(c.f, c.action, c.omega).ok);
    CHECK(lie_kernel_discrepancy(f4, A4, M4.omega, p).empty());
    // the displayed variants, s(1) f_{i+1}(q ^ p) and -iota(v_q) f_1(p), do not close
    Comoment literal_w = w.f, literal_c = c.f;
    for (auto& [q, v] : literal_w.values) v *= Q(-1);
    for (auto& [q, v] : literal_c.values)
      if (q.size() == 2) v *= Q(-1);
    auto rw = verify_comoment(literal_w, w.action, w.omega);
    auto rc = verify_comoment(literal_c, c.action, c.omega);
    CHECK_FALSE(rw.ok);
    CHECK_FALSE(rc.ok);
    REQUIRE(rc.failure);
    CHECK(rc.failure->k == 2);
  }
  SUBCASE("lie kernel of degree two with nonzero components") {
    auto A6 = so_n_action(6);
    auto M6 = MssSpace::volume(6);
    auto f6 = euler_comoment(A6, M6);
    Chain p;
    add_chain(p, {so_index(6, 1, 2), so_index(6, 3, 4)}, Q(1));
    add_chain(p, {so_index(6, 1, 2), so_index(6, 5, 6)}, Q(1));
    for (auto v : {KernelVariant::wedge, KernelVariant::contract}) {
      auto k = induce_lie_kernel(f6, A6, M6.omega, p, v);
      CHECK(k.f.n == 3);
      CHECK_FALSE(k.f.values.empty());
      CHECK(verify_comoment(k.f, k.action, k.omega).ok);
    }
  }
  SUBCASE("lie kernel on a product") {
    auto P = product_action(so_n_action(2), so_n_action(2));
    auto M4 = MssSpace::volume(4);
    auto fp = euler_comoment(P, M4);
    Chain p{{{0}, Q(1)}};
    auto w = induce_lie_kernel(fp, P, M4.omega, p, KernelVariant::wedge);
    auto c = induce_lie_kernel(fp, P, M4.omega, p, KernelVariant::contract);
    CHECK(verify_comoment(w.f, w.action, w.omega).ok);
    CHECK(verify_comoment(c.f, c.action, c.omega).ok);
    CHECK(w.omega == c.omega);
    CHECK(lie_kernel_discrepancy(fp, P, M4.omega, p).empty());
    // an invariant closed shift of f_1 keeps f equivariant; the variants now differ
    auto g = fp;
    g.values[{0}] += PolyForm::basic(4, {0, 1});
    CHECK(verify_comoment(g, P, M4).ok);
    CHECK(equivariance(g, P).equivariant);
    auto gw = induce_lie_kernel(g, P, M4.omega, p, KernelVariant::wedge);
    auto gc = induce_lie_kernel(g, P, M4.omega, p, KernelVariant::contract);
    CHECK(verify_comoment(gw.f, gw.action, gw.omega).ok);
    CHECK(verify_comoment(gc.f, gc.action, gc.omega).ok);
    auto diff = lie_kernel_discrepancy(g, P, M4.omega, p);
    REQUIRE(diff.size() == 1);
    CHECK(diff.begin()->first == std::vector<int>{0});
    CHECK(d(diff.begin()->second).is_zero());
  }
}

TEST_CASE("obstruction cocycle") {
  auto A3 = so_n_action(3);
  auto vol3 = PolyForm::volume(3);
  CHECK(obstruction_cocycle(A3, vol3, {0, 0, 0}).empty());
  // rotation fields at a point are tangent to the sphere through it
  CHECK(obstruction_cocycle(A3, vol3, {1, 0, 0}).empty());
  CHECK(obstruction_cocycle(A3, vol3, {2, -1, 3}).empty());

  auto E = euclidean3();
  auto c = obstruction_cocycle(E, vol3, {1, 2, 3});
  CHECK(c.at({3, 4, 5}) == 1);
  CHECK(c.at({0, 1, 3}) == -1);
  CHECK(obstruction_cocycle(E, vol3, {0, 0, 0}).size() == 1);

  auto A4 = so_n_action(4);
  CHECK_NOTHROW(obstruction_cocycle(A4, PolyForm::volume(4), {1, 2, 3, 5}));
  CHECK_THROWS(obstruction_cocycle(A4, PolyForm::volume(4), {1, 2}));
}

TEST_CASE("comoment as a morphism") {
  auto A = so_n_action(3);
  auto M = MssSpace::volume(3);
  auto f = euler_comoment(A, M);
  auto F = comoment_morphism(f, A, 3);
  auto x = Element::basis(A.algebra.space, 0);
  auto e = F.component(1)({x});
  CHECK(e.X == A.fields[0]);
  CHECK(e.form_part(1) == f.eval(std::vector<int>{0}));
  Comoment zero{2, 3, {}};
  CHECK_FALSE(check_comoment_morphism(zero, A, M).ok);
  auto broken = f;
  broken.values[{0, 1}] += PolyForm::function(3, X(0));
  CHECK(verify_comoment(broken, A, M).ok == check_comoment_morphism(broken, A, M).ok);
  CHECK_FALSE(verify_comoment(broken, A, M).ok);
}

TEST_CASE("pentagon") {
  SUBCASE("so(3) on R^3") {
    auto A = so_n_action(3);
    auto M = MssSpace::volume(3);
    auto f = euler_comoment(A, M);
    PolyForm B = iota(PolyField::euler(3), M.omega);
    auto r = check_pentagon(M, A, f, B, 3);
    CHECK(r.ok);
    CHECK(r.arities == std::vector<int>{1, 2, 3});
    CHECK(check_pentagon(M, A, f, PolyForm(3, 2), 3).ok);
  }
  SUBCASE("so(4) on R^4 and a corrupted phi_3") {
    auto A = so_n_action(4);
    auto M = MssSpace::volume(4);
    auto f = euler_comoment(A, M);
    PolyForm B = iota(PolyField::euler(4), M.omega);
    CHECK(check_pentagon(M, A, f, B, 4).ok);
    auto bad = check_pentagon(M, A, f, B, 4, {{3, Q(1, 2)}});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failure);
    CHECK(bad.failure->k == 3);
    CHECK_FALSE(bad.failure->residual.empty());
  }
  SUBCASE("preconditions") {
    auto A = so_n_action(3);
    auto M = MssSpace::volume(3);
    auto f = euler_comoment(A, M);
    CHECK_THROWS(check_pentagon(M, A, f, PolyForm::basic(3, {0, 1}, X(0)), 3));
    CHECK_THROWS(check_pentagon(M, A, Comoment{2, 3, {}}, PolyForm(3, 2), 3));
  }
}
