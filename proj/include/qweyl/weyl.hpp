#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/bipolynomial.hpp"

namespace qweyl {

// Where the engine computes: symbolically over Frac(Z[q, h]), or with q fixed
// to a value of Z/p (finite) or to 1 over Z/p or Q (classical).
class EngineMode {
 public:
  static EngineMode symbolic();
  // Requires p prime, q and 1 - q nonzero mod p.
  static EngineMode finite(std::uint32_t p, long q);
  // q = 1; p = 0 selects the rationals.
  static EngineMode classical(std::uint32_t p);

  bool is_symbolic() const { return !q_; }
  Field field() const { return field_; }
  // Fixed value of q; empty in symbolic mode.
  const std::optional<Scalar>& q_value() const { return q_; }
  std::string name() const;

  // q as a coefficient polynomial: the indeterminate, or a constant.
  BiPolynomial q_poly() const;

  friend bool operator==(const EngineMode& a, const EngineMode& b) {
    return a.field_ == b.field_ && a.q_.has_value() == b.q_.has_value() && (!a.q_ || *a.q_ == *b.q_);
  }

 private:
  Field field_;
  std::optional<Scalar> q_;
};

// sigma^k applied to f, where sigma(h) = (h - 1)/q and sigma^{-1}(h) = qh + 1.
BiFraction sigma_apply(const BiFraction& f, int k, const EngineMode& mode);

// Element sum_i c_i x^i of R[x, 1/x; sigma] with R = K(h); x r = sigma(r) x.
class SkewElement {
 public:
  SkewElement() = default;
  explicit SkewElement(EngineMode mode) : mode_(mode) {}

  static SkewElement scalar(const BiFraction& c, const EngineMode& mode);
  static SkewElement monomial(const BiFraction& c, int x_exp, const EngineMode& mode);

  const EngineMode& mode() const { return mode_; }
  const std::map<int, BiFraction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  SkewElement operator-() const;
  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }

  // Largest total degree of any stored numerator or denominator.
  int max_coeff_degree() const;

  std::string to_string() const;

 private:
  friend SkewElement skew_mul(const SkewElement& a, const SkewElement& b);
  void add_term(int e, const BiFraction& c);
  void check_mode(const SkewElement& o) const;

  EngineMode mode_ = EngineMode::symbolic();
  std::map<int, BiFraction> terms_;
};

// (r x^i)(s x^j) = r sigma^i(s) x^{i+j}.
SkewElement skew_mul(const SkewElement& a, const SkewElement& b);

enum class Generator { u, u_inv, v, v_inv };

// Noncommutative expression over the generators u, v, their inverses, the
// scalar q and integers.
class Expr {
 public:
  enum class Kind { generator, integer, q, sum, product, negation };

  static Expr gen(Generator g);
  static Expr integer(long n);
  static Expr q();

  Kind kind() const { return node_->kind; }
  Generator generator() const { return node_->g; }
  long value() const { return node_->n; }
  const std::vector<Expr>& children() const { return node_->kids; }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr operator-() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Generator g = Generator::u;
    long n = 0;
    std::vector<Expr> kids;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Kind k, std::vector<Expr> kids);

  std::shared_ptr<const Node> node_;
};

// Grammar: juxtaposition or '*' is product; u' or u^-1 is an inverse;
// g^n and g^-n for generators, e^n for n >= 0 on any factor; q; integers;
// parentheses; + and -. Throws ParseError.
Expr parse_expr(std::string_view text);

struct VerifyResult {
  bool ok = false;
  // Offending x-exponent and coefficient when !ok.
  std::optional<int> witness_exponent;
  std::string witness;
  int max_coeff_degree = 0;
};

// Evaluates expressions through the embedding
//   u -> h x^{-1}, v -> x, u^{-1} -> (q/(h-1)) x, v^{-1} -> x^{-1}.
// Construction re-verifies that these inverse images are two-sided inverses
// and throws Error otherwise.
class WeylEngine {
 public:
  explicit WeylEngine(EngineMode mode);

  const EngineMode& mode() const { return mode_; }
  const SkewElement& image(Generator g) const;

  SkewElement evaluate(const Expr& e) const;
  VerifyResult verify(const Expr& lhs, const Expr& rhs) const;

 private:
  EngineMode mode_;
  std::vector<SkewElement> images_;
};

// Checks that the images of u^m v^n (0 <= m, n <= max_degree) have pairwise
// distinct leading signatures (h-degree m, x-degree n - m), which makes them
// linearly independent. max_degree must be at most 6.
bool injectivity_spot_check(int max_degree, const EngineMode& mode);

struct NamedIdentity {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool classical_only = false;  // only meaningful at q = 1
};

// The algebra identities checked by `verify`, with A = v^-1 u^-1 and B = u
// written out in the generators.
const std::vector<NamedIdentity>& standard_identities();

}  // namespace qweyl
