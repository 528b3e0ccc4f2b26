#include "qweyl/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qweyl/errors.hpp"

namespace qweyl {

EngineMode EngineMode::symbolic() { return EngineMode{}; }

EngineMode EngineMode::finite(std::uint32_t p, long q) {
  EngineMode m;
  m.field_ = Field::prime(p);
  const Scalar qs(m.field_, q);
  if (qs.is_zero() || qs.is_one())
    throw InvalidArgument("finite mode needs q and 1 - q invertible mod " + std::to_string(p));
  m.q_ = qs;
  return m;
}

EngineMode EngineMode::classical(std::uint32_t p) {
  EngineMode m;
  m.field_ = p == 0 ? Field::rationals() : Field::prime(p);
  m.q_ = Scalar::one(m.field_);
  return m;
}

std::string EngineMode::name() const {
  if (!q_) return "symbolic";
  const std::string f = field_.is_prime_field() ? "p=" + std::to_string(field_.characteristic()) : "Q";
  if (q_->is_one()) return "classical(" + f + ")";
  return "finite(" + f + ",q=" + q_->to_string() + ")";
}

BiPolynomial EngineMode::q_poly() const {
  if (q_) return BiPolynomial::constant(*q_);
  return BiPolynomial::q(field_);
}

namespace {

BiPolynomial h_poly(const EngineMode& mode) { return BiPolynomial::h(mode.field()); }

BiPolynomial one_poly(const EngineMode& mode) { return BiPolynomial::constant(Scalar::one(mode.field())); }

// 1 + q + ... + q^{m-1}
BiPolynomial q_geometric(int m, const EngineMode& mode) {
  BiPolynomial s(mode.field()), term = one_poly(mode);
  const BiPolynomial q = mode.q_poly();
  for (int i = 0; i < m; ++i) {
    s += term;
    term = term * q;
  }
  return s;
}

// sigma^k(P) written as num / q^{k deg_h P} for k > 0 and as num for k < 0.
// Returns num.
BiPolynomial sigma_poly(const BiPolynomial& p, int k, const EngineMode& mode) {
  const int d = p.degree_h();
  if (d <= 0 || k == 0) return p;
  const BiPolynomial q = mode.q_poly();
  const int m = std::abs(k);
  const BiPolynomial hh = h_poly(mode);
  const BiPolynomial image = k > 0 ? hh - q_geometric(m, mode) : q.pow(static_cast<unsigned>(m)) * hh + q_geometric(m, mode);
  std::vector<BiPolynomial> hpow{one_poly(mode)};
  for (int b = 1; b <= d; ++b) hpow.push_back(hpow.back() * image);
  std::vector<BiPolynomial> qpow{one_poly(mode)};
  if (k > 0)
    for (int b = 1; b <= d; ++b) qpow.push_back(qpow.back() * q.pow(static_cast<unsigned>(m)));
  BiPolynomial out(mode.field());
  for (const auto& [e, c] : p.terms()) {
    const auto [dq, dh] = e;
    BiPolynomial t = hpow[static_cast<std::size_t>(dh)] * BiPolynomial::monomial(c, 0, 0) * q.pow(static_cast<unsigned>(dq));
    if (k > 0) t = t * qpow[static_cast<std::size_t>(d - dh)];
    out += t;
  }
  return out;
}

}  // namespace

BiFraction sigma_apply(const BiFraction& f, int k, const EngineMode& mode) {
  if (k == 0 || f.is_zero()) return f;
  const BiPolynomial num = sigma_poly(f.num(), k, mode);
  const BiPolynomial den = sigma_poly(f.den(), k, mode);
  if (k < 0) return BiFraction(num, den);
  // Reinstate the q-power denominators of numerator and denominator.
  const int dn = std::max(f.num().degree_h(), 0), dd = std::max(f.den().degree_h(), 0);
  const BiPolynomial q = mode.q_poly();
  const int diff = k * (dd - dn);
  if (diff >= 0) return BiFraction(num * q.pow(static_cast<unsigned>(diff)), den);
  return BiFraction(num, den * q.pow(static_cast<unsigned>(-diff)));
}

SkewElement SkewElement::scalar(const BiFraction& c, const EngineMode& mode) { return monomial(c, 0, mode); }

SkewElement SkewElement::monomial(const BiFraction& c, int x_exp, const EngineMode& mode) {
  SkewElement out(mode);
  out.add_term(x_exp, c);
  return out;
}

bool SkewElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

void SkewElement::check_mode(const SkewElement& o) const {
  if (!(mode_ == o.mode_)) throw RingMismatch("engine mode mismatch: " + mode_.name() + " vs " + o.mode_.name());
}

void SkewElement::add_term(int e, const BiFraction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkewElement SkewElement::operator-() const {
  SkewElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_mode(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) { return *this += -o; }

int SkewElement::max_coeff_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max({d, c.num().total_degree(), c.den().total_degree()});
  return d;
}

std::string SkewElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first != 0) out += it->first == 1 ? "x" : "x^" + std::to_string(it->first);
  }
  return out;
}

SkewElement skew_mul(const SkewElement& a, const SkewElement& b) {
  a.check_mode(b);
  SkewElement out(a.mode_);
  for (const auto& [i, r] : a.terms_)
    for (const auto& [j, s] : b.terms_) out.add_term(i + j, r * sigma_apply(s, i, a.mode_));
  return out;
}

// ---- expressions ----

Expr Expr::make(Kind k, std::vector<Expr> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = std::move(kids);
  return Expr(std::move(n));
}

Expr Expr::gen(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::generator;
  n->g = g;
  return Expr(std::move(n));
}

Expr Expr::integer(long v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::integer;
  n->n = v;
  return Expr(std::move(n));
}

Expr Expr::q() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::q;
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::sum, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::sum, {a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::product, {a, b}); }
Expr Expr::operator-() const { return make(Kind::negation, {*this}); }

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::generator:
      switch (generator()) {
        case Generator::u: return "u";
        case Generator::u_inv: return "u'";
        case Generator::v: return "v";
        case Generator::v_inv: return "v'";
      }
      return "?";
    case Kind::integer: return std::to_string(value());
    case Kind::q: return "q";
    case Kind::negation: return "-(" + children()[0].to_string() + ")";
    case Kind::sum: {
      std::string out;
      for (const auto& k : children()) {
        if (!out.empty()) out += " + ";
        out += k.to_string();
      }
      return "(" + out + ")";
    }
    case Kind::product: {
      std::string out;
      for (const auto& k : children()) {
        if (!out.empty()) out += " ";
        out += k.to_string();
      }
      return out;
    }
  }
  return "?";
}

namespace {

Generator inverse_of(Generator g) {
  switch (g) {
    case Generator::u: return Generator::u_inv;
    case Generator::u_inv: return Generator::u;
    case Generator::v: return Generator::v_inv;
    case Generator::v_inv: return Generator::v;
  }
  return g;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Expr run() {
    Expr e = expr();
    if (peek() != '\0') fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse expression \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  static bool starts_factor(char c) {
    return c == 'u' || c == 'v' || c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Expr expr() {
    Expr acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Expr rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Expr term() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -term();
    }
    if (c == '+') {
      ++pos_;
      return term();
    }
    Expr acc = factor();
    for (;;) {
      const char n = peek();
      if (n == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(n)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  long integer() {
    long v = 0;
    bool any = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000) fail("integer too large");
      v = v * 10 + (s_[pos_++] - '0');
      any = true;
    }
    if (!any) fail("expected integer");
    return v;
  }

  Expr factor() {
    Expr base = atom();
    for (;;) {
      const char c = peek();
      if (c == '\'') {
        ++pos_;
        if (base.kind() != Expr::Kind::generator) fail("' applies to u or v only");
        base = Expr::gen(inverse_of(base.generator()));
      } else if (c == '^') {
        ++pos_;
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++pos_;
        }
        peek();
        const long e = integer();
        if (e > 64) fail("exponent too large");
        if (neg) {
          if (base.kind() != Expr::Kind::generator) fail("negative powers apply to u or v only");
          base = Expr::gen(inverse_of(base.generator()));
        }
        if (e == 0) {
          base = Expr::integer(1);
        } else {
          Expr p = base;
          for (long i = 1; i < e; ++i) p = p * base;
          base = p;
        }
      } else {
        return base;
      }
    }
  }

  Expr atom() {
    const char c = peek();
    if (c == 'u' || c == 'v') {
      ++pos_;
      return Expr::gen(c == 'u' ? Generator::u : Generator::v);
    }
    if (c == 'q') {
      ++pos_;
      return Expr::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::integer(integer());
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).run(); }

// ---- engine ----

WeylEngine::WeylEngine(EngineMode mode) : mode_(mode) {
  const BiPolynomial one = one_poly(mode_), h = h_poly(mode_);
  const BiFraction one_f(one);
  images_.resize(4);
  images_[static_cast<int>(Generator::u)] = SkewElement::monomial(BiFraction(h), -1, mode_);
  images_[static_cast<int>(Generator::v)] = SkewElement::monomial(one_f, 1, mode_);
  images_[static_cast<int>(Generator::u_inv)] = SkewElement::monomial(BiFraction(mode_.q_poly(), h - one), 1, mode_);
  images_[static_cast<int>(Generator::v_inv)] = SkewElement::monomial(one_f, -1, mode_);
  for (auto [g, gi] : {std::pair{Generator::u, Generator::u_inv}, std::pair{Generator::v, Generator::v_inv}}) {
    if (!skew_mul(image(g), image(gi)).is_one() || !skew_mul(image(gi), image(g)).is_one())
      throw Error("generator inverse image failed its self-check in mode " + mode_.name());
  }
}

const SkewElement& WeylEngine::image(Generator g) const { return images_[static_cast<int>(g)]; }

SkewElement WeylEngine::evaluate(const Expr& e) const {
  switch (e.kind()) {
    case Expr::Kind::generator: return image(e.generator());
    case Expr::Kind::integer:
      return SkewElement::scalar(BiFraction(BiPolynomial::constant(Scalar(mode_.field(), e.value()))), mode_);
    case Expr::Kind::q: return SkewElement::scalar(BiFraction(mode_.q_poly()), mode_);
    case Expr::Kind::negation: return -evaluate(e.children()[0]);
    case Expr::Kind::sum: {
      SkewElement acc(mode_);
      for (const auto& k : e.children()) acc += evaluate(k);
      return acc;
    }
    case Expr::Kind::product: {
      SkewElement acc = evaluate(e.children()[0]);
      for (std::size_t i = 1; i < e.children().size(); ++i) acc = skew_mul(acc, evaluate(e.children()[i]));
      return acc;
    }
  }
  throw Error("unknown expression node");
}

VerifyResult WeylEngine::verify(const Expr& lhs, const Expr& rhs) const {
  const SkewElement l = evaluate(lhs), r = evaluate(rhs);
  const SkewElement d = l - r;
  VerifyResult out;
  out.max_coeff_degree = std::max({l.max_coeff_degree(), r.max_coeff_degree(), d.max_coeff_degree()});
  out.ok = d.is_zero();
  if (!out.ok) {
    const auto& [e, c] = *d.terms().begin();
    out.witness_exponent = e;
    out.witness = c.to_string();
  }
  return out;
}

bool injectivity_spot_check(int max_degree, const EngineMode& mode) {
  if (max_degree < 0 || max_degree > 6) throw InvalidArgument("injectivity_spot_check: max_degree must lie in [0, 6]");
  const WeylEngine engine(mode);
  std::set<std::pair<int, int>> seen;
  SkewElement upow = SkewElement::scalar(BiFraction(one_poly(mode)), mode);
  for (int m = 0; m <= max_degree; ++m) {
    SkewElement img = upow;
    for (int n = 0; n <= max_degree; ++n) {
      if (img.terms().size() != 1) return false;
      const auto& [xdeg, c] = *img.terms().begin();
      const int hdeg = c.num().degree_h() - c.den().degree_h();
      if (xdeg != n - m || hdeg != m) return false;
      if (!seen.insert({hdeg, xdeg}).second) return false;
      img = skew_mul(img, engine.image(Generator::v));
    }
    upow = skew_mul(upow, engine.image(Generator::u));
  }
  return true;
}

const std::vector<NamedIdentity>& standard_identities() {
  // A = v'u', A^-1 = uv, B = u, B^-1 = u'.
  static const std::vector<NamedIdentity> list = {
      {"defining relation uv - qvu = 1", "u v - q v u", "1", false},
      {"fundamental relation", "u v u' v' u' u - u' v' u' u", "u u v u' v' u' - v' u'", false},
      {"relation B = BA^-1 - qA^-1B", "u", "u u v - q u v u", false},
      {"C closed form", "u v u' v' u' (1 - v' u')", "q u v u' v' u' v' u' v u", false},
      {"D closed form", "1 - u v u' v' u' u", "1 - q - u' v'", false},
      {"scalar law (1-A)A^-1B^-1AB = q", "(1 - v' u') u v u' v' u' u", "q", false},
      {"C words agree", "u v u' v' u' v u v' u'", "u v u' v' u' v' u' v u", false},
      {"D = -u'v' at q = 1", "1 - u v u' v' u' u", "-u' v'", true},
  };
  return list;
}

}  // namespace qweyl
