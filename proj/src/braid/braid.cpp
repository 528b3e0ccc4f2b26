#include "qweyl/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

using RMatrix = Matrix<RationalFunction>;

LMatrix identity_like(std::size_t n, const LaurentPolynomial& zero) { return LMatrix::identity(n, zero.one_like()); }

LMatrix assemble(const LMatrix& a, const LMatrix& b, const LMatrix& c, const LMatrix& d) {
  const std::size_t k = a.rows();
  LMatrix s(2 * k, 2 * k, a.zero());
  s.set_block(0, 0, a);
  s.set_block(0, k, b);
  s.set_block(k, 0, c);
  s.set_block(k, k, d);
  return s;
}

// id^{before} x g x id^{after} for a square g.
LMatrix embed(const LMatrix& g, std::size_t before, std::size_t after) {
  const std::size_t n = before + g.rows() + after;
  LMatrix out = identity_like(n, g.zero());
  out.set_block(before, before, g);
  return out;
}

bool is_unit_det(const LMatrix& m) { return det_exact(m, Exec::serial).is_unit(); }

void check_block_shapes(const LMatrix& a, const LMatrix& b, const LMatrix& c, const LMatrix& d) {
  const std::size_t k = a.rows();
  for (const LMatrix* m : {&a, &b, &c, &d})
    if (m->rows() != k || m->cols() != k) throw DimensionError("switch blocks must all be " + a.shape());
  if (k == 0) throw DimensionError("switch blocks must be non-empty");
}

}  // namespace

LMatrix LinearSwitch::matrix() const { return assemble(a, b, c, d); }

LinearSwitch weyl_switch(const MatrixRep& rep) {
  const RepReport report = validate_rep(rep);
  if (!report.ok) throw InvalidArgument("weyl_switch: invalid representation: " + report.failure);

  const std::size_t k = rep.dim();
  const RMatrix& u = rep.u;
  const RMatrix& v = rep.v;
  const RMatrix ui = mat_inverse(u), vi = mat_inverse(v);
  const RMatrix id = RMatrix::identity(k, u.one());

  const RMatrix a = mat_mul(vi, ui, Exec::serial);
  const RMatrix a_inv = mat_mul(u, v, Exec::serial);
  RMatrix word = id;
  for (const RMatrix* f : {&u, &v, &ui, &vi, &ui, &vi, &ui, &v, &u}) word = mat_mul(word, *f, Exec::serial);
  const RMatrix c = word.scaled(rep.q);
  const RMatrix closed = mat_mul(mat_mul(mat_mul(a_inv, ui, Exec::serial), a, Exec::serial), id - a, Exec::serial);
  if (!(c == closed)) throw Error("weyl_switch: the two forms of C disagree");
  const RMatrix d = id.scaled(u.one() - rep.q) - mat_mul(ui, vi, Exec::serial);

  LinearSwitch s;
  s.name = "weyl(" + rep.name + ")";
  s.k = k;
  s.a = to_laurent(a);
  s.b = to_laurent(u);
  s.c = to_laurent(c);
  s.d = to_laurent(d);
  s.hecke_q = to_laurent(rep.q);
  const LaurentPolynomial det_c = det_exact(s.c, Exec::serial);
  if (!det_c.is_unit()) throw SingularMatrix("weyl_switch: C is not invertible", det_c.to_string());
  return s;
}

LinearSwitch burau_switch(const LaurentPolynomial& t) {
  if (!t.is_unit()) throw InvalidArgument("burau_switch: t = " + t.to_string() + " is not a unit");
  const LaurentPolynomial zero = t.zero_like(), one = t.one_like();
  LinearSwitch s;
  s.name = "burau";
  s.k = 1;
  s.a = LMatrix::from_rows({{zero}});
  s.b = LMatrix::from_rows({{one}});
  s.c = LMatrix::from_rows({{t}});
  s.d = LMatrix::from_rows({{one - t}});
  s.hecke_q = t;
  return s;
}

LinearSwitch sawollek_switch(const LMatrix& b, const LMatrix& c) {
  LMatrix zero(b.rows(), b.cols(), b.zero());
  check_block_shapes(b, b, c, c);
  if (!is_unit_det(b) || !is_unit_det(c)) throw InvalidArgument("sawollek_switch: B and C must be invertible");
  const LMatrix bc = mat_mul(b, c, Exec::serial);
  LinearSwitch s;
  s.name = "sawollek";
  s.k = b.rows();
  s.a = identity_like(s.k, b.zero()) - bc;
  s.b = b;
  s.c = c;
  s.d = zero;
  // With BC = q I the quadratic S^2 = (1 - q)S + q holds.
  if (bc == identity_like(s.k, b.zero()).scaled(bc(0, 0))) s.hecke_q = bc(0, 0);
  return s;
}

LinearSwitch custom_switch(std::string name, const LMatrix& a, const LMatrix& b, const LMatrix& c, const LMatrix& d,
                           std::optional<LaurentPolynomial> q) {
  check_block_shapes(a, b, c, d);
  LinearSwitch s{std::move(name), a.rows(), a, b, c, d, std::move(q)};
  const SwitchReport r = check_switch(s);
  if (!r.ok()) {
    std::string msg = "custom switch fails:";
    for (const auto& f : r.failures) msg += " " + f + ";";
    msg.pop_back();
    throw InvalidArgument(msg);
  }
  return s;
}

SwitchReport check_switch(const LinearSwitch& s) {
  SwitchReport r;
  const LMatrix m = s.matrix();
  const std::size_t k = s.k;
  const LMatrix id = identity_like(2 * k, m.zero());

  r.invertible = is_unit_det(m);
  if (!r.invertible) r.failures.push_back("S is not invertible");

  const LMatrix s1 = embed(m, 0, k), s2 = embed(m, k, 0);
  const LMatrix lhs = mat_mul(mat_mul(s1, s2, Exec::serial), s1, Exec::serial);
  const LMatrix rhs = mat_mul(mat_mul(s2, s1, Exec::serial), s2, Exec::serial);
  r.yang_baxter = lhs == rhs;
  if (!r.yang_baxter) r.failures.push_back("Yang-Baxter relation fails");

  const LMatrix sq = mat_mul(m, m, Exec::serial);
  if (s.hecke_q) {
    const LaurentPolynomial& q = *s.hecke_q;
    r.hecke = sq == m.scaled(q.one_like() - q) + id.scaled(q);
    if (!*r.hecke) r.failures.push_back("S^2 != (1 - q)S + q for q = " + q.to_string());
  }
  r.involution = sq.is_identity();
  return r;
}

SwitchInverse switch_inverse(const LinearSwitch& s) {
  const LMatrix m = s.matrix();
  const std::size_t k = s.k;
  const LaurentPolynomial zero = m.zero();
  const LMatrix id2 = identity_like(2 * k, zero), id = identity_like(k, zero);
  SwitchInverse out;
  std::optional<LMatrix> hecke, factor;

  if (s.hecke_q && s.hecke_q->is_unit()) {
    const LaurentPolynomial& q = *s.hecke_q;
    LMatrix cand = (m - id2.scaled(q.one_like() - q)).scaled(q.inverse());
    if (mat_mul(m, cand, Exec::serial).is_identity()) hecke = std::move(cand);
  }

  // S = diag(A, 1) [[1, 0], [C, 1]] diag(1, 1 - A^-1) [[1, A^-1 B], [0, 1]]
  // requires D = C A^-1 B + 1 - A^-1; the inverse multiplies the factor
  // inverses in reverse order.
  if (is_unit_det(s.a)) {
    const LMatrix a_inv = mat_inverse(s.a);
    const LMatrix e = id - a_inv;
    const bool factors = s.d == mat_mul(mat_mul(s.c, a_inv, Exec::serial), s.b, Exec::serial) + e;
    if (factors && is_unit_det(e)) {
      const LMatrix e_inv = mat_inverse(e);
      LMatrix f1 = id2, f2 = id2, f3 = id2, f4 = id2;
      f1.set_block(0, k, -mat_mul(a_inv, s.b, Exec::serial));
      f2.set_block(k, k, e_inv);
      f3.set_block(k, 0, -s.c);
      f4.set_block(0, 0, a_inv);
      LMatrix cand = mat_mul(mat_mul(mat_mul(f1, f2, Exec::serial), f3, Exec::serial), f4, Exec::serial);
      if (!mat_mul(m, cand, Exec::serial).is_identity()) throw Error("switch_inverse: factorization product is wrong");
      factor = std::move(cand);
    }
  }

  if (hecke && factor && !(*hecke == *factor)) throw Error("switch_inverse: Hecke and factorization inverses differ");
  if (!hecke && !factor) throw DomainError("switch_inverse: neither the Hecke nor the factorization path applies");
  out.via_hecke = hecke.has_value();
  out.via_factorization = factor.has_value();
  out.inverse = hecke ? std::move(*hecke) : std::move(*factor);
  return out;
}

LMatrix twist(std::size_t k, const LaurentPolynomial& zero) {
  LMatrix t(2 * k, 2 * k, zero);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, k + i) = zero.one_like();
    t(k + i, i) = zero.one_like();
  }
  return t;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    out += (l.is_virtual ? 't' : 's') + std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::optional<std::string> builtin_braid(std::string_view name) {
  if (name == "kishino") return std::string("t2 s1 s2 s1 t2 s1 s2 s1");
  static const std::regex call(R"(^\s*(l|whorl)\s*\(\s*(\d{1,3})\s*\)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(name.begin(), name.end(), m, call)) return std::nullopt;
  const int n = std::stoi(m[2].str());
  if (n < 1 || n > 64) throw ParseError("built-in word size must be in [1, 64]");
  std::string out;
  auto add = [&](char kind, int i) {
    if (!out.empty()) out += ' ';
    out += kind + std::to_string(i);
  };
  if (m[1] == "l") {
    for (int i = 0; i < n; ++i) {
      add('t', 1);
      add('s', 1);
    }
  } else {
    for (int i = 1; i <= n; ++i) add('t', i);
    for (int i = n - 1; i >= 2; --i) add('t', i);
    for (int i = 1; i <= n; ++i) add('s', i);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, Flavor flavor, std::optional<std::size_t> strands) {
  std::string expanded;
  if (auto b = builtin_braid(text)) {
    expanded = *b;
    text = expanded;
  }
  BraidWord w;
  w.flavor = flavor;
  std::size_t max_index = 0;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) { return ParseError("braid word, offset " + std::to_string(pos) + ": " + why); };
  auto read_int = [&](long& value) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw bad("expected an integer");
    pos += static_cast<std::size_t>(ptr - first);
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    const char kind = text[pos];
    if (kind != 's' && kind != 't') throw bad(std::string("unexpected '") + kind + "'");
    if (kind == 't' && flavor == Flavor::classical) throw bad("virtual letter in a classical braid");
    ++pos;
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw bad("missing letter index");
    long index = 0;
    read_int(index);
    if (index < 1 || index > 4096) throw bad("letter index out of range");
    long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      read_int(e);
      if (e < -4096 || e > 4096) throw bad("exponent out of range");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != 's' &&
        text[pos] != 't')
      throw bad(std::string("unexpected '") + text[pos] + "'");
    const bool is_virtual = kind == 't';
    const bool normalize = is_virtual || flavor == Flavor::flat;
    const int sign = e < 0 ? -1 : 1;
    for (long r = 0; r < (e < 0 ? -e : e); ++r)
      w.letters.push_back(Letter{is_virtual, static_cast<std::size_t>(index), normalize ? 1 : sign});
    max_index = std::max(max_index, static_cast<std::size_t>(index));
  }
  w.strands = strands.value_or(max_index + 1);
  if (w.strands == 0) throw ParseError("braid word needs at least one strand");
  if (max_index >= w.strands)
    throw ParseError("letter index " + std::to_string(max_index) + " needs more than " + std::to_string(w.strands) +
                     " strands");
  return w;
}

namespace {

struct LetterOperators {
  LMatrix s, s_inv, t;
  bool have_inverse = false;
};

LetterOperators prepare(const BraidWord& w, const LinearSwitch& s) {
  LetterOperators ops;
  ops.s = s.matrix();
  ops.t = twist(s.k, ops.s.zero());
  bool real = false, inverse = false;
  for (const Letter& l : w.letters) {
    if (l.index == 0 || l.index >= w.strands) throw InvalidArgument("letter index out of range");
    real = real || !l.is_virtual;
    inverse = inverse || (!l.is_virtual && l.exponent < 0);
  }
  if (w.flavor == Flavor::flat && real && !mat_mul(ops.s, ops.s, Exec::serial).is_identity())
    throw InvalidArgument("flat braid needs an involutive switch (S^2 = I)");
  if (inverse) {
    ops.s_inv = switch_inverse(s).inverse;
    ops.have_inverse = true;
  }
  return ops;
}

const LMatrix& letter_operator(const Letter& l, const LetterOperators& ops) {
  if (l.is_virtual) return ops.t;
  return l.exponent < 0 ? ops.s_inv : ops.s;
}

}  // namespace

LMatrix represent(const BraidWord& w, const LinearSwitch& s, Exec exec) {
  const LetterOperators ops = prepare(w, s);
  const std::size_t k = s.k, n = w.strands * k;
  LMatrix m = identity_like(n, ops.s.zero());
  const bool par = exec == Exec::parallel && n >= detail::kParallelMin;
  const long rows = static_cast<long>(n);
  for (const Letter& l : w.letters) {
    const std::size_t c0 = (l.index - 1) * k;
    if (l.is_virtual) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < k; ++j) std::swap(m(r, c0 + j), m(r, c0 + k + j));
      continue;
    }
    const LMatrix& g = letter_operator(l, ops);
    // Only columns c0 .. c0 + 2k change: M <- M (id x g x id).
    ParallelGuard guard;
#pragma omp parallel for schedule(static) if (par)
    for (long rr = 0; rr < rows; ++rr) {
      guard.run([&] {
        const auto r = static_cast<std::size_t>(rr);
        std::vector<LaurentPolynomial> row(2 * k, m.zero());
        for (std::size_t j = 0; j < 2 * k; ++j) {
          LaurentPolynomial acc = m.zero();
          for (std::size_t t = 0; t < 2 * k; ++t)
            if (!m(r, c0 + t).is_zero() && !g(t, j).is_zero()) acc += m(r, c0 + t) * g(t, j);
          row[j] = std::move(acc);
        }
        for (std::size_t j = 0; j < 2 * k; ++j) m(r, c0 + j) = std::move(row[j]);
      });
    }
    guard.rethrow();
  }
  return m;
}

LMatrix represent_dense(const BraidWord& w, const LinearSwitch& s) {
  const LetterOperators ops = prepare(w, s);
  const std::size_t k = s.k;
  LMatrix m = identity_like(w.strands * k, ops.s.zero());
  for (const Letter& l : w.letters) {
    const std::size_t before = (l.index - 1) * k;
    const std::size_t after = (w.strands - l.index - 1) * k;
    m = mat_mul(m, embed(letter_operator(l, ops), before, after), Exec::serial);
  }
  return m;
}

}  // namespace qweyl
