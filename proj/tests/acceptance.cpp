// One PASS/FAIL line per acceptance criterion; the exit status is nonzero
// when any criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qweyl/errors.hpp"
#include "qweyl/invariants.hpp"
#include "qweyl/parse.hpp"
#include "qweyl/rep.hpp"
#include "qweyl/weyl.hpp"
#include "support.hpp"

using namespace qweyl;
using qweyl::testing::alexander_oracle;
using qweyl::testing::random_word;

namespace {

const Field Q = Field::rationals();
const Field Z2 = Field::prime(2);
const Field Z3 = Field::prime(3);

using PL = PolyOver<LaurentPolynomial>;

LaurentPolynomial L(const std::string& text, Field f, const char* var = "x") { return parse_laurent(text, f, var); }
Polynomial P(const std::string& text, Field f, const char* var = "x") { return parse_polynomial(text, f, var); }
RationalFunction R(const std::string& text, Field f, const char* var = "q") { return parse_rational(text, f, var); }

MatrixRep builtin(const char* name) { return build_rep(*builtin_rep_spec(name)); }

// Collects failed checks with a short reason.
struct Verdict {
  std::vector<std::string> misses;
  void expect(bool ok, const std::string& what) {
    if (!ok) misses.push_back(what);
  }
  bool ok() const { return misses.empty(); }
};

int report(int n, const char* title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.misses.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s", v.ok() ? "PASS" : "FAIL", n, title);
  if (!v.ok()) {
    std::printf(" [");
    for (std::size_t i = 0; i < v.misses.size(); ++i) std::printf("%s%s", i ? "; " : "", v.misses[i].c_str());
    std::printf("]");
  }
  std::printf("\n");
  std::fflush(stdout);
  return v.ok() ? 0 : 1;
}

LMatrix rep_of(const std::string& text, Flavor f, const LinearSwitch& s, std::size_t strands) {
  return represent(parse_braid(text, f, strands), s, Exec::serial);
}

void relations(Verdict& v, const LinearSwitch& s, bool flat, std::size_t max_n) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    const LMatrix id = LMatrix::identity(n * s.k, s.a.one());
    auto same = [&](const std::string& x, const std::string& y, const std::string& what) {
      v.expect(rep_of(x, Flavor::virtual_, s, n) == rep_of(y, Flavor::virtual_, s, n),
               s.name + " n=" + std::to_string(n) + " " + what);
    };
    for (std::size_t i = 1; i < n; ++i) {
      const std::string si = "s" + std::to_string(i), ti = "t" + std::to_string(i);
      v.expect(rep_of(si + " " + si + "^-1", Flavor::virtual_, s, n) == id, s.name + " " + si + " inverse");
      v.expect(rep_of(ti + " " + ti, Flavor::virtual_, s, n) == id, s.name + " " + ti + "^2");
      if (flat) v.expect(rep_of(si + " " + si, Flavor::flat, s, n) == id, s.name + " " + si + "^2");
      if (i + 1 < n) {
        const std::string sj = "s" + std::to_string(i + 1), tj = "t" + std::to_string(i + 1);
        same(si + " " + sj + " " + si, sj + " " + si + " " + sj, "braid relation");
        same(ti + " " + tj + " " + ti, tj + " " + ti + " " + tj, "virtual braid relation");
        same(ti + " " + sj + " " + ti, tj + " " + si + " " + tj, "mixed relation");
      }
      for (std::size_t j = i + 2; j < n; ++j) {
        const std::string sj = "s" + std::to_string(j), tj = "t" + std::to_string(j);
        same(si + " " + sj, sj + " " + si, "far commutation");
        same(si + " " + tj, tj + " " + si, "far mixed commutation");
        same(ti + " " + tj, tj + " " + ti, "far virtual commutation");
      }
    }
  }
}

// Inverse of a word: reversed letters, real exponents negated (kept +1 for flat words).
std::string inverse_word(const BraidWord& w, bool flat) {
  std::string out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += (it->is_virtual ? 't' : 's') + std::to_string(it->index);
    if (!it->is_virtual && !flat && it->exponent > 0) out += "^-1";
  }
  return out;
}

}  // namespace

int main() {
  int failures = 0;

  failures += report(1, "Kishino: Delta_0 = 0, canonical Delta_1 = y + 1, verdict nontrivial", [](Verdict& v) {
    const LinearSwitch s = weyl_switch(builtin("kishino3"));
    const BraidWord w = parse_braid("kishino", Flavor::flat);
    const InvariantResult r = compute_invariants(w, s, {0, 1}, "kishino", "kishino3", "1");
    v.expect(r.d0 && r.d0->raw.is_zero(), "Delta_0 = " + (r.d0 ? r.d0->raw.to_string() : std::string("?")));
    const Polynomial d1 = r.deltas.at(1).canonical;
    v.expect(d1 == P("y + 1", Z3, "y"), "Delta_1 = " + d1.to_string() + ", expected y + 1");
    v.expect(r.nontrivial, "verdict from levels 0,1 is 'not detected'");
  });

  failures += report(2, "L_n: Delta_0 ~ x^{2n} + x^{-2n} for n = 1..5; quartic of r(t1 s1)", [](Verdict& v) {
    const LinearSwitch s = weyl_switch(builtin("flat2"));
    for (int n = 1; n <= 5; ++n) {
      const Delta0 d = delta0(presentation(parse_braid("l(" + std::to_string(n) + ")", Flavor::flat), s));
      const std::string e = std::to_string(2 * n);
      v.expect(unit_equivalent(d.raw, L("x^" + e + " + x^-" + e, Z2)), "raw n=" + std::to_string(n));
      v.expect(d.canonical == P("x^" + std::to_string(4 * n) + " + 1", Z2), "canonical n=" + std::to_string(n));
    }
    const PL cp = char_poly(represent(parse_braid("t1 s1", Flavor::flat), s));
    const LaurentPolynomial x = L("x", Z2), one = x.one_like(), zero = x.zero_like();
    const PL quartic(zero, {one, zero, L("x^2 + x^-2", Z2), zero, one});
    v.expect(cp.degree() == 4 && cp.coeff(4).is_unit() && cp == quartic.scaled(cp.coeff(4)), "quartic");
    PL rest = cp;
    for (const LaurentPolynomial& root : {x, x, x.inverse(), x.inverse()}) {
      const auto [quot, rem] = divmod_monic(rest, PL::linear(root));
      v.expect(rem.is_zero(), "lambda - " + root.to_string() + " does not divide");
      rest = quot;
    }
    v.expect(rest.degree() == 0 && rest.coeff(0).is_unit(), "quotient after four roots is not a unit");
  });

  failures += report(3, "whorl: canonical Delta_0 of W_3 and W_4", [](Verdict& v) {
    const LinearSwitch s = weyl_switch(builtin("flat2"));
    const std::pair<int, const char*> cases[] = {{3, "x^10 + x^4 + x^2 + 1"},
                                                 {4, "x^14 + x^10 + x^8 + x^6 + x^2 + 1"}};
    for (const auto& [n, want] : cases) {
      const Polynomial got =
          delta0(presentation(parse_braid("whorl(" + std::to_string(n) + ")", Flavor::flat), s)).canonical;
      v.expect(got == P(want, Z2), "W" + std::to_string(n) + " = " + got.to_string() + ", expected " + want);
    }
  });

  failures += report(4, "algebra identities: symbolic, 20 random finite modes, q = 1", [](Verdict& v) {
    auto run = [&](const EngineMode& m, bool classical) {
      const WeylEngine e(m);
      for (const NamedIdentity& id : standard_identities()) {
        if (id.classical_only && !classical) continue;
        v.expect(e.verify(parse_expr(id.lhs), parse_expr(id.rhs)).ok, m.name() + " " + id.name);
      }
      v.expect(injectivity_spot_check(3, m), m.name() + " injectivity");
    };
    run(EngineMode::symbolic(), false);
    std::mt19937 rng(2024);
    const std::uint32_t primes[] = {5, 7, 11, 13, 17, 101, 257, 997, 7919};
    for (int t = 0; t < 20; ++t) {
      const std::uint32_t p = primes[rng() % std::size(primes)];
      run(EngineMode::finite(p, 2 + static_cast<long>(rng() % (p - 2))), false);
    }
    run(EngineMode::classical(0), true);
    run(EngineMode::classical(3), true);
  });

  failures += report(5, "switch axioms and B_n / VB_n / FB_n relations for n <= 4", [](Verdict& v) {
    const Field z7 = Field::prime(7), z11 = Field::prime(11);
    const MatrixRep qb = family_q_bidiagonal(3, 7, R("3", z7), R("5", z7), {R("1", z7), R("4", z7)});
    const MatrixRep qu = family_q_upper(3, 11, R("2", z11), R("3", z11), R("4", z11), R("1", z11), R("6", z11));
    for (const MatrixRep& rep : {builtin("flat2"), builtin("kishino3"), qb, qu}) {
      const LinearSwitch s = weyl_switch(rep);
      const SwitchReport r = check_switch(s);
      const bool q_is_one = s.hecke_q && s.hecke_q->is_one();
      v.expect(r.invertible && r.yang_baxter, rep.name + " Yang-Baxter");
      v.expect(r.hecke == true, rep.name + " Hecke quadratic");
      if (q_is_one) v.expect(r.involution, rep.name + " S^2 = I");
      const SwitchInverse si = switch_inverse(s);
      v.expect(si.via_hecke && si.via_factorization, rep.name + " dual-path inverse");
      relations(v, s, q_is_one, 4);
    }
    const LinearSwitch b = burau_switch(L("t", Q, "t"));
    v.expect(check_switch(b).ok(), "burau axioms");
    relations(v, b, false, 4);
  });

  failures += report(6, "trefoil Alexander polynomial via Burau and the reduced-Burau oracle", [](Verdict& v) {
    const LaurentPolynomial t = L("t", Q, "t");
    const BraidWord tre = parse_braid("s1^3", Flavor::classical);
    const PresentationMatrix p = presentation(tre, burau_switch(t));
    v.expect(delta0(p).raw.is_zero(), "Delta_0 != 0");
    const Polynomial d1 = delta_r(p, 1).canonical;
    v.expect(d1 == P("t^2 - t + 1", Q, "t"), "Delta_1 = " + d1.to_string());
    v.expect(d1 == alexander_oracle(tre, t), "oracle disagrees");
    v.expect(alexander_crosscheck(tre, burau_switch(t)).agree, "crosscheck");
    const LaurentPolynomial bb = L("3t", Q, "t"), cc = L("2t^-2", Q, "t");
    const LinearSwitch saw = sawollek_switch(LMatrix::from_rows({{bb}}), LMatrix::from_rows({{cc}}));
    v.expect(burau_parameter(saw)(0, 0) == bb * cc, "Sawollek parameter != BC");
    v.expect(alexander_crosscheck(tre, saw).agree, "Sawollek crosscheck");
  });

  failures += report(7, "representation families satisfy UV - qVU = I for n <= 6; trace guard", [](Verdict& v) {
    auto ok = [&](const MatrixRep& r, const std::string& what) {
      const RepReport rr = validate_rep(r);
      v.expect(rr.ok, what + ": " + rr.failure);
    };
    const RationalFunction q = R("q", Q);
    for (std::size_t n = 1; n <= 6; ++n) {
      const std::string tag = " n=" + std::to_string(n);
      std::vector<RationalFunction> b;
      for (std::size_t i = 1; i < n; ++i) b.push_back(R(std::to_string(i + 1), Q));
      ok(family_q_bidiagonal(n, 0, q, R("2", Q), b), "q_bidiagonal" + tag);
      ok(family_q_upper(n, 0, q, R("3", Q), R("2", Q), R("5", Q), R("7", Q)), "q_upper" + tag);
      for (std::uint32_t p : {2u, 3u, 5u}) {
        if (n % p) continue;
        const Field f = Field::prime(p);
        std::vector<RationalFunction> a(n - 1, R("1", f, "y"));
        ok(family_char_p_bidiagonal(n, p, R("y", f, "y"), R("y^-1", f, "y"), a), "char_p" + tag);
        const std::vector<RationalFunction> ic{R("1", f, "y"), R("1", f, "y")}, jc{R("1", f, "y")};
        if (n >= 2) ok(family_truncated(n, p, ic, jc), "truncated" + tag);
      }
    }
    bool rejected = false;
    try {
      check_trace_obstruction(Q, 3, R("1", Q));
    } catch (const InvalidArgument&) {
      rejected = true;
    }
    v.expect(rejected, "trace guard accepted q = 1 over Q");
  });

  failures += report(8, "conjugation invariance and stabilization covariance on 10 random instances", [](Verdict& v) {
    std::mt19937 rng(8);
    const Field z7 = Field::prime(7);
    const LinearSwitch flat = weyl_switch(builtin("flat2"));
    const LinearSwitch virt =
        weyl_switch(family_q_bidiagonal(2, 7, R("3", z7), R("5", z7), {R("2", z7)}));
    for (int i = 0; i < 10; ++i) {
      const bool use_flat = i % 2 == 0;
      const LinearSwitch& s = use_flat ? flat : virt;
      const Flavor f = use_flat ? Flavor::flat : Flavor::virtual_;
      const std::size_t n = 3;
      const std::string beta = random_word(rng, n, 6, true, !use_flat);
      const std::string gamma = random_word(rng, n, 3, true, !use_flat);
      const std::string conj = gamma + " " + beta + " " + inverse_word(parse_braid(gamma, f, n), use_flat);
      const LaurentPolynomial a = delta0(presentation(parse_braid(beta, f, n), s)).raw;
      const LaurentPolynomial b = delta0(presentation(parse_braid(conj, f, n), s)).raw;
      v.expect(a == b, "conjugation " + std::to_string(i));

      const Polynomial c0 = a.canonical().poly;
      const Polynomial c1 = delta0(presentation(parse_braid(beta + " s3", f, n + 1), s)).canonical;
      const LaurentPolynomial det_b = det_exact(s.b);
      bool matched = false;
      LaurentPolynomial power = det_b.one_like();
      for (int j = 0; j <= 4 && !matched; ++j, power = power * det_b)
        matched = (LaurentPolynomial(c0) * power).canonical().poly == c1;
      v.expect(matched, "stabilization " + std::to_string(i));
    }
  });

  return failures == 0 ? 0 : 1;
}
