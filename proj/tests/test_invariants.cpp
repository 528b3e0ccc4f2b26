#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "qweyl/errors.hpp"
#include "qweyl/invariants.hpp"
#include "qweyl/parse.hpp"
#include "qweyl/rep.hpp"
#include "support.hpp"

using namespace qweyl;
using qweyl::testing::alexander_oracle;
using qweyl::testing::random_word;

namespace {

const Field Q = Field::rationals();
const Field Z2 = Field::prime(2);
const Field Z3 = Field::prime(3);

LaurentPolynomial L(const char* text, Field f, const char* var = "x") { return parse_laurent(text, f, var); }
Polynomial P(const char* text, Field f, const char* var = "x") { return parse_polynomial(text, f, var); }

LinearSwitch weyl(const char* name) { return weyl_switch(build_rep(*builtin_rep_spec(name))); }

Polynomial d0_of(const std::string& word, Flavor f, const LinearSwitch& s, std::optional<std::size_t> strands = {}) {
  return delta0(presentation(parse_braid(word, f, strands), s)).canonical;
}

Polynomial canon(const LaurentPolynomial& f) { return f.canonical().poly; }

bool closes_to_knot(const BraidWord& w) {
  std::vector<std::size_t> perm(w.strands);
  for (std::size_t i = 0; i < w.strands; ++i) perm[i] = i;
  for (const Letter& l : w.letters) std::swap(perm[l.index - 1], perm[l.index]);
  std::size_t p = 0, len = 0;
  do {
    p = perm[p];
    ++len;
  } while (p != 0);
  return len == w.strands;
}

// Arc/crossing wiring of a braid closure: one crossing per letter, fresh
// arcs on its outputs, and the final arcs identified with the initial ones.
// r_S(beta) = G_1 ... G_m acts on column vectors with the last letter first,
// so the letters are wired from the end of the word.
std::pair<std::vector<Crossing>, std::size_t> wire_closure(const BraidWord& w) {
  std::vector<std::size_t> cur(w.strands);
  for (std::size_t i = 0; i < w.strands; ++i) cur[i] = i;
  std::size_t arcs = w.strands;
  std::vector<Crossing> cs;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const Letter& l = *it;
    Crossing c;
    c.kind = l.is_virtual ? Crossing::Kind::virtual_
                          : (l.exponent > 0 ? Crossing::Kind::positive : Crossing::Kind::negative);
    const std::size_t i = l.index - 1;
    c.in[0] = cur[i];
    c.in[1] = cur[i + 1];
    cur[i] = c.out[0] = arcs++;
    cur[i + 1] = c.out[1] = arcs++;
    cs.push_back(c);
  }
  // Rename each final arc to the initial arc at the same position.
  std::vector<std::size_t> rename(arcs);
  for (std::size_t a = 0; a < arcs; ++a) rename[a] = a;
  for (std::size_t i = 0; i < w.strands; ++i) rename[cur[i]] = i;
  std::vector<std::size_t> compact(arcs, 0);
  std::size_t next = 0;
  for (std::size_t a = 0; a < arcs; ++a)
    if (rename[a] == a) compact[a] = next++;
  for (Crossing& c : cs)
    for (int s = 0; s < 2; ++s) {
      c.in[s] = compact[rename[c.in[s]]];
      c.out[s] = compact[rename[c.out[s]]];
    }
  return {cs, next};
}

}  // namespace

TEST_CASE("presentation sizes") {
  const LinearSwitch k3 = weyl("kishino3"), f2 = weyl("flat2");
  const PresentationMatrix pk = presentation(parse_braid("kishino", Flavor::flat), k3, "kishino3");
  CHECK(pk.p.rows() == 9);
  CHECK(pk.p.is_square());
  CHECK(pk.provenance == "braid-closure");
  CHECK(pk.rep == "kishino3");
  CHECK(presentation(parse_braid("l(1)", Flavor::flat), f2).p.rows() == 4);
  CHECK(presentation(parse_braid("", Flavor::flat, 3), f2).p.is_zero());
}

TEST_CASE("delta0 of the L_n family") {
  const LinearSwitch s = weyl("flat2");
  for (int n = 1; n <= 5; ++n) {
    const std::string word = "l(" + std::to_string(n) + ")";
    const Delta0 d = delta0(presentation(parse_braid(word, Flavor::flat), s));
    const std::string pw = std::to_string(2 * n);
    const LaurentPolynomial expect = L(("x^" + pw + " + x^-" + pw).c_str(), Z2);
    CHECK(unit_equivalent(d.raw, expect));
    CHECK(d.canonical == P(("x^" + std::to_string(4 * n) + " + 1").c_str(), Z2));
    REQUIRE(d.unit.has_value());
    CHECK(*d.unit * d.raw == LaurentPolynomial(d.canonical));
  }
}

TEST_CASE("Kishino presentation") {
  const PresentationMatrix p = presentation(parse_braid("kishino", Flavor::flat), weyl("kishino3"));
  const Delta0 d = delta0(p);
  CHECK(d.raw.is_zero());
  CHECK(d.canonical.is_zero());
  CHECK(!d.unit.has_value());
  CHECK(hom_dimension(p) == 9 - rank_over_fractions(p.p));
  CHECK(hom_dimension(p) == 3);
  CHECK(delta_r(p, 3, Exec::serial).canonical == P("y^6 + y^3 + 1", Z3, "y"));
  CHECK(delta_r(p, 3).canonical == delta_r(p, 3, Exec::serial).canonical);
}

TEST_CASE("delta_r arguments") {
  const PresentationMatrix p = presentation(parse_braid("l(1)", Flavor::flat), weyl("flat2"));
  CHECK_THROWS_AS(delta_r(p, 0), InvalidArgument);
  CHECK_THROWS_AS(delta_r(p, 4), InvalidArgument);
  const PresentationMatrix zero2 = presentation(parse_braid("", Flavor::virtual_, 2), burau_switch(L("t", Q, "t")));
  CHECK(delta_r(zero2, 1).canonical.is_zero());
  // A unit determinant forces Delta_1 = 1.
  PresentationMatrix unit_det;
  unit_det.p = LMatrix::from_rows({{L("x", Q), L("x^2 + 1", Q), L("0", Q)},
                                   {L("0", Q), L("3", Q), L("x - 1", Q)},
                                   {L("0", Q), L("0", Q), L("x^-4", Q)}});
  CHECK(delta0(unit_det).canonical.is_one());
  CHECK(delta_r(unit_det, 1).canonical.is_one());
  CHECK(delta_r(unit_det, 2).canonical.is_one());
}

TEST_CASE("hom dimension") {
  const LinearSwitch s = weyl("kishino3");
  for (std::size_t m = 1; m <= 3; ++m)
    CHECK(hom_dimension(presentation(parse_braid("", Flavor::flat, m), s)) == m * 3);
  const PresentationMatrix l1 = presentation(parse_braid("l(1)", Flavor::flat), weyl("flat2"));
  CHECK(hom_dimension(l1) == 0);
}

TEST_CASE("Burau parameter") {
  const LaurentPolynomial t = L("t", Q, "t");
  CHECK(burau_parameter(burau_switch(t))(0, 0) == t);
  const LaurentPolynomial b = L("3t", Q, "t"), c = L("2t^-2", Q, "t");
  const LinearSwitch saw = sawollek_switch(LMatrix::from_rows({{b}}), LMatrix::from_rows({{c}}));
  CHECK(burau_parameter(saw)(0, 0) == b * c);
  const LinearSwitch w = weyl("flat2");
  const LMatrix id = LMatrix::identity(2, w.a.one());
  CHECK(burau_parameter(w) == mat_mul(id - w.a, id - w.d));
}

TEST_CASE("trefoil against the reduced Burau oracle") {
  const LaurentPolynomial t = L("t", Q, "t");
  const BraidWord tre = parse_braid("s1^3", Flavor::classical);
  const PresentationMatrix p = presentation(tre, burau_switch(t));
  CHECK(delta0(p).canonical.is_zero());
  const Polynomial d1 = delta_r(p, 1).canonical;
  CHECK(d1 == P("t^2 - t + 1", Q, "t"));
  CHECK(d1 == alexander_oracle(tre, t));

  const AlexanderCheck ac = alexander_crosscheck(tre, burau_switch(t));
  CHECK(ac.agree);
  CHECK(ac.t == t);
}

TEST_CASE("Alexander polynomials of knot closures") {
  const LaurentPolynomial t = L("t", Q, "t");
  const BraidWord fig8 = parse_braid("s1 s2^-1 s1 s2^-1", Flavor::classical);
  CHECK(delta_r(presentation(fig8, burau_switch(t)), 1).canonical == P("t^2 - 3t + 1", Q, "t"));

  std::mt19937 rng(97);
  int checked = 0;
  for (int trial = 0; checked < 8 && trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const BraidWord w = parse_braid(random_word(rng, n, 3 + trial % 5, false, true), Flavor::classical, n);
    if (!closes_to_knot(w)) continue;
    ++checked;
    CHECK(delta_r(presentation(w, burau_switch(t)), 1).canonical == alexander_oracle(w, t));
    // Sawollek switch with scalar blocks: same polynomial in t = BC.
    const LaurentPolynomial b = L("2t", Q, "t"), c = L("t^-1", Q, "t");
    const LinearSwitch saw = sawollek_switch(LMatrix::from_rows({{b}}), LMatrix::from_rows({{c * t}}));
    const AlexanderCheck ac = alexander_crosscheck(w, saw);
    CHECK(ac.agree);
    CHECK(ac.t == L("2t", Q, "t"));
  }
  CHECK(checked == 8);
  CHECK_THROWS_AS(alexander_crosscheck(parse_braid("t1", Flavor::virtual_), burau_switch(t)), InvalidArgument);
  CHECK_THROWS_AS(alexander_crosscheck(parse_braid("s1", Flavor::classical), weyl("flat2")), InvalidArgument);
}

TEST_CASE("diagram ingestion") {
  const LinearSwitch s = weyl("flat2");
  const PresentationMatrix loops = diagram_ingest({}, 3, s);
  CHECK(loops.p.rows() == 6);
  CHECK(loops.p.is_zero());
  CHECK(loops.provenance == "diagram-convention");

  for (const char* word : {"l(1)", "l(2)", "l(3)", "kishino"}) {
    const LinearSwitch& sw = std::string(word) == "kishino" ? weyl("kishino3") : s;
    const BraidWord w = parse_braid(word, Flavor::flat);
    const auto [cs, arcs] = wire_closure(w);
    INFO(word);
    CHECK(delta0(diagram_ingest(cs, arcs, sw)).canonical == delta0(presentation(w, sw)).canonical);
  }

  Crossing c;
  c.kind = Crossing::Kind::positive;
  c.in[0] = 0;
  c.in[1] = 1;
  c.out[0] = 0;
  c.out[1] = 0;
  CHECK_THROWS_AS(diagram_ingest({c}, 2, s), InvalidArgument);
  c.out[1] = 2;
  CHECK_THROWS_AS(diagram_ingest({c}, 2, s), InvalidArgument);
  c.out[0] = 2;
  c.out[1] = 1;
  CHECK_THROWS_AS(diagram_ingest({c}, 3, s), InvalidArgument);
}

TEST_CASE("route equivalence on random virtual words") {
  std::mt19937 rng(101);
  const LinearSwitch s = burau_switch(L("t", Q, "t"));
  for (int trial = 0; trial < 8; ++trial) {
    const BraidWord w = parse_braid(random_word(rng, 3, 6, true, true), Flavor::virtual_, 3);
    const auto [cs, arcs] = wire_closure(w);
    const PresentationMatrix d = diagram_ingest(cs, arcs, s), b = presentation(w, s);
    CHECK(delta0(d).canonical == delta0(b).canonical);
    CHECK(delta_r(d, 1).canonical == delta_r(b, 1).canonical);
  }
}

TEST_CASE("conjugation invariance") {
  std::mt19937 rng(103);
  const LaurentPolynomial t = L("t", Q, "t");
  for (const LinearSwitch& s : {weyl("flat2"), burau_switch(t)}) {
    const bool flat = s.name != "burau";
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 3;
      const std::string beta = random_word(rng, n, 6, true, !flat);
      const std::string gamma = random_word(rng, n, 3, true, !flat);
      // The inverse of gamma: reversed letters with inverted exponents.
      const BraidWord g = parse_braid(gamma, Flavor::virtual_, n);
      std::string ginv;
      for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it) {
        ginv += (it->is_virtual ? " t" : " s") + std::to_string(it->index);
        if (!it->is_virtual && (it->exponent > 0) != flat) ginv += "^-1";
      }
      const Flavor f = flat ? Flavor::flat : Flavor::virtual_;
      const LaurentPolynomial a = delta0(presentation(parse_braid(beta, f, n), s)).raw;
      const LaurentPolynomial b = delta0(presentation(parse_braid(gamma + " " + beta + ginv, f, n), s)).raw;
      CHECK(a == b);
    }
  }
}

TEST_CASE("stabilization covariance") {
  std::mt19937 rng(107);
  for (const LinearSwitch& s : {weyl("flat2"), weyl("kishino3")}) {
    const Polynomial det_b = canon(det_exact(s.b));
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const std::string beta = random_word(rng, n, 5, true, false);
      const Polynomial a = d0_of(beta, Flavor::flat, s, n);
      const Polynomial b = d0_of(beta + " s" + std::to_string(n), Flavor::flat, s, n + 1);
      // Canonical forms absorb units; det rho(B) is a unit here, so any
      // power of it has canonical form 1.
      CHECK(det_b.is_one());
      CHECK(a == b);
    }
  }
}

TEST_CASE("elementary ideal chain and rank consistency") {
  std::mt19937 rng(109);
  const LinearSwitch s = weyl("kishino3");
  std::vector<PresentationMatrix> ps{presentation(parse_braid("kishino", Flavor::flat), s)};
  for (int trial = 0; trial < 4; ++trial)
    ps.push_back(presentation(parse_braid(random_word(rng, 2, 4, true, false), Flavor::flat, 2), s));
  ps.push_back(presentation(parse_braid("l(2)", Flavor::flat), weyl("flat2")));
  for (const PresentationMatrix& p : ps) {
    const std::size_t size = p.p.rows();
    CHECK(delta0(p).canonical.is_zero() == (rank_over_fractions(p.p) < size));
    Polynomial prev = delta0(p).canonical;
    for (std::size_t r = 1; r < std::min<std::size_t>(size, 5); ++r) {
      const Polynomial cur = delta_r(p, r).canonical;
      if (cur.is_zero()) {
        CHECK(prev.is_zero());
      } else {
        CHECK(divmod(prev, cur).second.is_zero());
      }
      prev = cur;
    }
  }
}

TEST_CASE("invariant results and verdicts") {
  const LinearSwitch k3 = weyl("kishino3");
  const BraidWord kw = parse_braid("kishino", Flavor::flat);
  const InvariantResult r = compute_invariants(kw, k3, {0, 1, 3}, "kishino", "kishino3", "1");
  CHECK(r.size == 9);
  CHECK(r.nontrivial);
  CHECK(r.hom_dim == 3);
  const auto j = nlohmann::ordered_json::parse(to_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["delta0_raw"] == "0");
  CHECK(j["unit"].is_null());
  CHECK(j["delta"]["1"] == "0");
  CHECK(j["delta"]["3"] == "y^6 + y^3 + 1");
  CHECK(j.begin().key() == "schema");
  CHECK(to_json(r) == to_json(compute_invariants(kw, k3, {0, 1, 3}, "kishino", "kishino3", "1")));
  CHECK(to_text(r).find("nontrivial: yes") != std::string::npos);

  // The one-strand unknot matches its own reference values.
  const InvariantResult u = compute_invariants(parse_braid("", Flavor::flat, 1), k3, {0, 1, 2}, "", "kishino3", "1");
  CHECK(!u.nontrivial);
  CHECK(unknot_delta(0, 3, k3.a.zero()).is_zero());
  CHECK(unknot_delta(3, 3, k3.a.zero()).is_one());

  const InvariantResult l1 = compute_invariants(parse_braid("l(1)", Flavor::flat), weyl("flat2"), {0}, "l(1)", "flat2", "1");
  CHECK(l1.nontrivial);
}
