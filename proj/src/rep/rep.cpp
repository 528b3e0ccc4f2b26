#include "qweyl/rep.hpp"

#include <json.hpp>

#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/parse.hpp"

namespace qweyl {
namespace {

Field field_of(std::uint32_t p) { return p == 0 ? Field::rationals() : Field::prime(p); }

RationalFunction constant(Field f, long c) { return rational_constant(Scalar(f, c)); }

RationalFunction rpow(const RationalFunction& x, long e) {
  RationalFunction out = x.one_like(), b = e < 0 ? x.inverse() : x;
  for (unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e); k > 0; k >>= 1) {
    if (k & 1) out = out * b;
    b = b * b;
  }
  return out;
}

// Shared indeterminate of all entries, or RingMismatch.
std::string common_var(const std::vector<const RationalFunction*>& xs) {
  std::string v;
  for (const auto* x : xs) {
    v = merge_var(v, x->num().var());
    v = merge_var(v, x->den().var());
  }
  return v;
}

void require_nonzero(const RationalFunction& x, const std::string& what) {
  if (x.is_zero()) throw InvalidArgument(what + " must be nonzero");
}

void require_field(const RationalFunction& x, Field f, const std::string& what) {
  if (!(x.num().field() == f)) throw RingMismatch(what + " lives over " + x.num().field().name() + ", expected " + f.name());
}

MatrixRep finish(std::string name, Field f, Matrix<RationalFunction> u, Matrix<RationalFunction> v, RationalFunction q) {
  std::vector<const RationalFunction*> all{&q};
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      all.push_back(&u(i, j));
      all.push_back(&v(i, j));
    }
  MatrixRep r{std::move(name), f, common_var(all), std::move(u), std::move(v), std::move(q)};
  return r;
}

void q_family_guards(Field f, const RationalFunction& q) {
  require_field(q, f, "q");
  require_nonzero(q, "q");
  if ((q.one_like() - q).is_zero()) throw InvalidArgument("q-families need 1 - q invertible (q = 1 given)");
}

}  // namespace

bool MatrixRep::laurent_entries() const {
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (!try_laurent(u(i, j)) || !try_laurent(v(i, j))) return false;
  return true;
}

std::string MatrixRep::ring_name() const {
  const std::string f = field.is_prime_field() ? "Z" + std::to_string(field.characteristic()) : "Q";
  if (var.empty()) return f;
  return laurent_entries() ? f + "[" + var + ",1/" + var + "]" : f + "(" + var + ")";
}

RepReport validate_rep(const MatrixRep& r) {
  RepReport rep;
  const std::size_t k = r.u.rows();
  if (!r.u.is_square() || !r.v.is_square() || r.v.rows() != k || k == 0) {
    rep.ok = false;
    rep.failure = "U and V must be square of the same positive size";
    return rep;
  }
  const Matrix<RationalFunction> rel = mat_mul(r.u, r.v) - mat_mul(r.v, r.u).scaled(r.q);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const RationalFunction want = i == j ? r.u.one() : r.u.zero();
      if (!(rel(i, j) == want)) {
        rep.ok = false;
        rep.failure = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of UV - qVU is " +
                      format(rel(i, j)) + ", expected " + format(want);
        return rep;
      }
    }
  const bool laurent = r.laurent_entries();
  for (const auto& [m, label] : {std::pair{&r.u, "U"}, std::pair{&r.v, "V"}}) {
    const RationalFunction d = det_exact(*m);
    const bool unit = laurent ? (try_laurent(d) && try_laurent(d)->is_unit()) : !d.is_zero();
    if (!unit) {
      rep.ok = false;
      rep.failure = std::string("det ") + label + " = " + format(d) + " is not a unit";
      return rep;
    }
  }
  return rep;
}

void check_trace_obstruction(Field f, std::size_t n, const RationalFunction& q) {
  if (!(q - q.one_like()).is_zero()) return;
  const Scalar trace_i(f, static_cast<long>(n));
  if (!trace_i.is_zero())
    throw InvalidArgument("no " + std::to_string(n) + "-dimensional representation with q = 1 over " +
                          (f.is_prime_field() ? "Z" + std::to_string(f.characteristic()) : std::string("Q")) +
                          ": trace(UV - VU) = 0 but trace(I) = " + trace_i.to_string());
}

MatrixRep family_char_p_bidiagonal(std::size_t n, std::uint32_t p, const RationalFunction& x,
                                   const RationalFunction& y, const std::vector<RationalFunction>& a) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (p == 0) throw InvalidArgument("char_p_bidiagonal needs a prime p");
  const Field f = Field::prime(p);
  if (n % p != 0) throw InvalidArgument("char_p_bidiagonal needs p | n (p = " + std::to_string(p) + ", n = " + std::to_string(n) + ")");
  if (a.size() != n - 1) throw InvalidArgument("char_p_bidiagonal needs n - 1 = " + std::to_string(n - 1) + " values a_i");
  require_field(x, f, "x");
  require_field(y, f, "y");
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_field(a[i], f, "a_" + std::to_string(i + 1));
    require_nonzero(a[i], "a_" + std::to_string(i + 1));
  }
  const RationalFunction zero = constant(f, 0);
  Matrix<RationalFunction> u(n, n, zero), v(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = x;
    v(i, i) = y;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    u(i, i + 1) = a[i];
    v(i + 1, i) = constant(f, static_cast<long>(i + 1)) / a[i];
  }
  return finish("char_p_bidiagonal", f, std::move(u), std::move(v), constant(f, 1));
}

std::vector<RationalFunction> truncated_k_sequence(const std::vector<RationalFunction>& ic, std::size_t n) {
  if (ic.size() < 2 || ic[1].is_zero()) throw InvalidArgument("truncated family needs i_1 != 0");
  const RationalFunction zero = ic[0].zero_like();
  const Field f = ic[0].num().field();
  auto i_at = [&](std::size_t t) { return t < ic.size() && t < n ? ic[t] : zero; };
  std::vector<RationalFunction> k{ic[1].inverse()};
  for (std::size_t r = 1; r < n; ++r) {
    RationalFunction s = zero;
    for (std::size_t t = 1; t <= r; ++t) s += constant(f, static_cast<long>(t + 1)) * i_at(t + 1) * k[r - t];
    k.push_back(-s / ic[1]);
  }
  return k;
}

MatrixRep family_truncated(std::size_t n, std::uint32_t p, const std::vector<RationalFunction>& ic,
                           const std::vector<RationalFunction>& jc) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (p == 0) throw InvalidArgument("truncated family needs a prime p");
  const Field f = Field::prime(p);
  if (n % p != 0) throw InvalidArgument("truncated family needs p | n (p = " + std::to_string(p) + ", n = " + std::to_string(n) + ")");
  if (ic.size() > n || jc.size() > n) throw InvalidArgument("at most n coefficients for I and J");
  if (ic.empty() || ic[0].is_zero()) throw InvalidArgument("truncated family needs i_0 != 0");
  for (const auto& c : ic) require_field(c, f, "I coefficient");
  for (const auto& c : jc) require_field(c, f, "J coefficient");
  const std::vector<RationalFunction> k = truncated_k_sequence(ic, n);
  const RationalFunction zero = constant(f, 0);
  auto at = [&](const std::vector<RationalFunction>& c, long t) {
    return t >= 0 && static_cast<std::size_t>(t) < c.size() ? c[static_cast<std::size_t>(t)] : zero;
  };
  Matrix<RationalFunction> u(n, n, zero), v(n, n, zero);
  // Column j holds the image of x^j.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      const long d = static_cast<long>(r) - static_cast<long>(j);
      v(r, j) = at(ic, d);
      RationalFunction e = at(jc, d);
      if (j > 0) e += constant(f, static_cast<long>(j)) * at(k, d + 1);
      u(r, j) = e;
    }
  }
  if (det_exact(u).is_zero()) throw InvalidArgument("truncated family: u is singular for these coefficients");
  return finish("truncated", f, std::move(u), std::move(v), constant(f, 1));
}

QBidiagonalSolution solve_q_bidiagonal(std::size_t n, const RationalFunction& q) {
  // Multiplying the i-th diagonal condition
  //   beta_{i-1} - q beta_i + (1 - q) q^{2(n-i)} ac = 1
  // by q^{i-1} and summing telescopes the betas away:
  //   (1 - q) q^{n-1} (1 + q + ... + q^{n-1}) ac = 1 + q + ... + q^{n-1}.
  const RationalFunction one = q.one_like(), zero = q.zero_like();
  RationalFunction geo = zero;
  for (std::size_t i = 0; i < n; ++i) geo += rpow(q, static_cast<long>(i));
  if (geo.is_zero())
    throw InvalidArgument("q-bidiagonal recurrence is degenerate: 1 + q + ... + q^" + std::to_string(n - 1) +
                          " = 0, so ac is not determined");
  QBidiagonalSolution s;
  s.ac = ((one - q) * rpow(q, static_cast<long>(n) - 1)).inverse();
  RationalFunction prev = zero;
  for (std::size_t i = 1; i < n; ++i) {
    const RationalFunction term = (one - q) * rpow(q, 2 * (static_cast<long>(n) - static_cast<long>(i))) * s.ac;
    prev = (prev + term - one) / q;
    s.beta.push_back(prev);
  }
  const RationalFunction last = prev + (one - q) * s.ac - one;
  if (!last.is_zero()) throw Error("q-bidiagonal recurrence: boundary condition beta_n = 0 failed");
  return s;
}

MatrixRep family_q_bidiagonal(std::size_t n, std::uint32_t p, const RationalFunction& q, const RationalFunction& a,
                              const std::vector<RationalFunction>& b) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const Field f = field_of(p);
  q_family_guards(f, q);
  require_field(a, f, "a");
  require_nonzero(a, "a");
  if (b.size() != n - 1) throw InvalidArgument("q_bidiagonal needs n - 1 = " + std::to_string(n - 1) + " values b_i");
  for (std::size_t i = 0; i < b.size(); ++i) {
    require_field(b[i], f, "b_" + std::to_string(i + 1));
    require_nonzero(b[i], "b_" + std::to_string(i + 1));
  }
  const QBidiagonalSolution s = solve_q_bidiagonal(n, q);
  const RationalFunction c = s.ac / a;
  const RationalFunction zero = constant(f, 0);
  Matrix<RationalFunction> u(n, n, zero), v(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalFunction qp = rpow(q, static_cast<long>(n - 1 - i));
    u(i, i) = qp * a;
    v(i, i) = qp * c;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    u(i + 1, i) = b[i];
    v(i, i + 1) = s.beta[i] / b[i];
  }
  return finish("q_bidiagonal", f, std::move(u), std::move(v), q);
}

MatrixRep family_q_upper(std::size_t n, std::uint32_t p, const RationalFunction& q, const RationalFunction& a,
                         const RationalFunction& b, const RationalFunction& d, const RationalFunction& e) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const Field f = field_of(p);
  q_family_guards(f, q);
  for (const auto& [x, name] : {std::pair{&a, "a"}, std::pair{&b, "b"}, std::pair{&d, "d"}, std::pair{&e, "e"}})
    require_field(*x, f, name);
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  const RationalFunction one = q.one_like();
  const RationalFunction c = (a * rpow(q, static_cast<long>(n) - 1) * (one - q)).inverse();
  const RationalFunction zero = constant(f, 0);
  Matrix<RationalFunction> u(n, n, zero), v(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = rpow(q, static_cast<long>(n - 1 - i)) * a;
    v(i, i) = rpow(q, static_cast<long>(i)) * c;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    u(i, i + 1) = rpow(b, static_cast<long>(n - 2 - i)) * d;
    v(i, i + 1) = rpow(q / b, static_cast<long>(i)) * e;
  }
  return finish("q_upper", f, std::move(u), std::move(v), q);
}

MatrixRep explicit_rep(std::string name, std::uint32_t p, const std::vector<std::vector<RationalFunction>>& u,
                       const std::vector<std::vector<RationalFunction>>& v, const RationalFunction& q) {
  const Field f = field_of(p);
  auto mu = Matrix<RationalFunction>::from_rows(u);
  auto mv = Matrix<RationalFunction>::from_rows(v);
  if (!mu.is_square() || mu.rows() != mv.rows() || mu.cols() != mv.cols())
    throw DimensionError("u and v must be square of the same size");
  require_field(q, f, "q");
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      require_field(mu(i, j), f, "u entry");
      require_field(mv(i, j), f, "v entry");
    }
  check_trace_obstruction(f, mu.rows(), q);
  return finish(std::move(name), f, std::move(mu), std::move(mv), q);
}

// ---- specs ----

RepSpec parse_rep_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rep spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ParseError("rep spec needs a string \"family\"");
  RepSpec s;
  s.family = j["family"].get<std::string>();
  auto read_uint = [&](const char* key) -> std::uint64_t {
    if (!j.contains(key)) return 0;
    if (!j[key].is_number_unsigned()) throw ParseError(std::string("rep spec \"") + key + "\" must be a non-negative integer");
    return j[key].get<std::uint64_t>();
  };
  const std::uint64_t p = read_uint("p");
  if (p >= (1ULL << 31)) throw InvalidArgument("p must be below 2^31");
  s.p = static_cast<std::uint32_t>(p);
  s.n = static_cast<std::size_t>(read_uint("n"));
  if (j.contains("params") && !j["params"].is_object()) throw ParseError("rep spec \"params\" must be an object");
  s.json_params = j.contains("params") ? j["params"].dump() : "{}";
  return s;
}

namespace {

std::string value_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("parameter \"" + key + "\" must be a string or an integer");
}

class Params {
 public:
  Params(const std::string& text, Field f) : j_(nlohmann::json::parse(text)), f_(f) {}

  RationalFunction scalar(const std::string& key) const {
    if (!j_.contains(key)) throw InvalidArgument("missing parameter \"" + key + "\"");
    return parse_rational(value_text(j_[key], key), f_);
  }
  RationalFunction scalar_or(const std::string& key, long dflt) const {
    return j_.contains(key) ? scalar(key) : constant(f_, dflt);
  }
  std::vector<RationalFunction> list(const std::string& key) const {
    if (!j_.contains(key)) throw InvalidArgument("missing parameter \"" + key + "\"");
    if (!j_[key].is_array()) throw ParseError("parameter \"" + key + "\" must be an array");
    std::vector<RationalFunction> out;
    for (const auto& v : j_[key]) out.push_back(parse_rational(value_text(v, key), f_));
    return out;
  }
  std::vector<std::vector<RationalFunction>> grid(const std::string& key) const {
    if (!j_.contains(key) || !j_[key].is_array()) throw ParseError("parameter \"" + key + "\" must be an array of rows");
    std::vector<std::vector<RationalFunction>> out;
    for (const auto& row : j_[key]) {
      if (!row.is_array()) throw ParseError("parameter \"" + key + "\" must be an array of rows");
      out.emplace_back();
      for (const auto& v : row) out.back().push_back(parse_rational(value_text(v, key), f_));
    }
    return out;
  }

 private:
  nlohmann::json j_;
  Field f_;
};

}  // namespace

MatrixRep build_rep(const RepSpec& s) {
  const Field f = field_of(s.p);
  const Params prm(s.json_params, f);
  MatrixRep r;
  if (s.family == "char_p_bidiagonal") {
    r = family_char_p_bidiagonal(s.n, s.p, prm.scalar("x"), prm.scalar("y"), prm.list("a"));
  } else if (s.family == "truncated") {
    r = family_truncated(s.n, s.p, prm.list("I"), prm.list("J"));
  } else if (s.family == "q_bidiagonal") {
    r = family_q_bidiagonal(s.n, s.p, prm.scalar("q"), prm.scalar("a"), prm.list("b"));
  } else if (s.family == "q_upper") {
    r = family_q_upper(s.n, s.p, prm.scalar("q"), prm.scalar("a"), prm.scalar("b"), prm.scalar("d"), prm.scalar("e"));
  } else if (s.family == "explicit") {
    r = explicit_rep("explicit", s.p, prm.grid("u"), prm.grid("v"), prm.scalar_or("q", 1));
  } else {
    throw InvalidArgument("unknown representation family \"" + s.family + "\"");
  }
  return r;
}

std::optional<RepSpec> builtin_rep_spec(const std::string& name) {
  if (name == "kishino3") return RepSpec{"char_p_bidiagonal", 3, 3, R"({"x":"1","y":"y","a":["1","1"]})"};
  if (name == "flat2") return RepSpec{"char_p_bidiagonal", 2, 2, R"({"x":"x","y":"1","a":["1"]})"};
  return std::nullopt;
}

}  // namespace qweyl
