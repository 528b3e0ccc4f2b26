// qweyl: command-line front end.
//   qweyl verify    [--mode symbolic|finite|classical] [--p P] [--q Q] [--trials N] [--seed S]
//                   [--lhs EXPR --rhs EXPR] [--corrupt-c]
//   qweyl rep       --rep NAME|FILE|JSON [--format text|json]
//   qweyl switch    --rep ... [--format text|json]
//   qweyl invariant --braid WORD (--rep ... | --burau T) [--q Q] [--delta 0,1] [--flavor F]
//                   [--format text|json] [--serial]
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qweyl/braid.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/invariants.hpp"
#include "qweyl/parse.hpp"
#include "qweyl/rep.hpp"
#include "qweyl/weyl.hpp"

using namespace qweyl;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

// Raised for failed verifications so that main maps them to exit code 1.
struct VerificationFailure : Error {
  using Error::Error;
};

std::string format_q(const MatrixRep& r) { return format(r.q); }

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
  std::string mode = "symbolic";
  std::uint32_t p = 0;
  long q = 0;
  int trials = 1;
  unsigned seed = 1;
  std::string lhs, rhs;
  bool corrupt_c = false;
};

std::vector<EngineMode> verify_modes(const VerifyOptions& o) {
  if (o.mode == "symbolic") return {EngineMode::symbolic()};
  if (o.mode == "classical") {
    if (o.p != 0 && !is_prime(o.p)) throw InvalidArgument("--p must be prime (or 0 for Q)");
    return {EngineMode::classical(o.p)};
  }
  if (o.mode != "finite") throw InvalidArgument("unknown mode \"" + o.mode + "\"");
  if (o.trials < 1) throw InvalidArgument("--trials must be positive");
  std::vector<EngineMode> out;
  if (o.p != 0) {
    if (!is_prime(o.p)) throw InvalidArgument("--p must be prime");
    if (o.q == 0) throw InvalidArgument("--q is required with --p");
    out.push_back(EngineMode::finite(o.p, o.q));
    return out;
  }
  std::vector<std::uint32_t> primes;
  for (std::uint32_t n = 5; n < 1000; ++n)
    if (is_prime(n)) primes.push_back(n);
  std::mt19937 rng(o.seed);
  for (int t = 0; t < o.trials; ++t) {
    const std::uint32_t p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    const long q = std::uniform_int_distribution<long>(2, p - 1)(rng);
    out.push_back(EngineMode::finite(p, q));
  }
  return out;
}

int cmd_verify(const VerifyOptions& o) {
  if (o.lhs.empty() != o.rhs.empty()) throw InvalidArgument("--lhs and --rhs go together");
  std::vector<NamedIdentity> ids;
  if (!o.lhs.empty()) {
    ids.push_back({"custom", o.lhs, o.rhs, false});
  } else {
    ids = standard_identities();
    if (o.corrupt_c)
      for (auto& id : ids)
        if (id.name.rfind("C", 0) == 0) id.rhs = "q u v u' v' u' v' u' u v";
  }
  bool all = true;
  for (const EngineMode& mode : verify_modes(o)) {
    const WeylEngine engine(mode);
    const bool classical = mode.q_value() && mode.q_value()->is_one();
    int passed = 0, run = 0;
    for (const auto& id : ids) {
      if (id.classical_only && !classical) continue;
      ++run;
      const VerifyResult r = engine.verify(parse_expr(id.lhs), parse_expr(id.rhs));
      if (r.ok) {
        ++passed;
        std::cout << "PASS " << mode.name() << " " << id.name << "\n";
      } else {
        all = false;
        std::cout << "FAIL " << mode.name() << " " << id.name << ": difference has x^" << *r.witness_exponent
                  << " coefficient " << r.witness << "\n";
      }
    }
    const bool inj = injectivity_spot_check(3, mode);
    all = all && inj;
    std::cout << (inj ? "PASS " : "FAIL ") << mode.name() << " injectivity spot check (degree 3)\n";
    std::cout << mode.name() << ": " << passed << "/" << run << " identities\n";
  }
  return all ? kOk : kFail;
}

// ------------------------------------------------------------------ rep

MatrixRep load_rep(const std::string& arg) {
  if (auto spec = builtin_rep_spec(arg)) {
    MatrixRep r = build_rep(*spec);
    r.name = arg;
    return r;
  }
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("--rep: \"" + arg + "\" is neither a built-in name nor a readable file");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return build_rep(parse_rep_spec(text));
}

MatrixRep load_valid_rep(const std::string& arg) {
  MatrixRep r = load_rep(arg);
  const RepReport rep = validate_rep(r);
  if (!rep.ok) throw VerificationFailure("representation " + r.name + " is invalid: " + rep.failure);
  return r;
}

template <class T>
ojson grid_json(const Matrix<T>& m) {
  ojson g = ojson::array();
  for (const auto& row : m.to_string_grid()) g.push_back(row);
  return g;
}

template <class T>
void print_grid(std::ostream& os, const std::string& label, const Matrix<T>& m) {
  os << label << " =\n";
  for (const auto& row : m.to_string_grid()) {
    os << "  ";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "  " : "") << row[j];
    os << "\n";
  }
}

int cmd_rep(const std::string& rep_arg, const std::string& format) {
  const MatrixRep r = load_rep(rep_arg);
  const RepReport report = validate_rep(r);
  if (format == "json") {
    ojson j;
    j["schema"] = 1;
    j["name"] = r.name;
    j["ring"] = r.ring_name();
    j["q"] = format_q(r);
    j["dim"] = r.dim();
    j["u"] = grid_json(r.u);
    j["v"] = grid_json(r.v);
    j["valid"] = report.ok;
    j["failure"] = report.ok ? ojson(nullptr) : ojson(report.failure);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.name << " over " << r.ring_name() << ", q = " << format_q(r) << ", dimension " << r.dim() << "\n";
    print_grid(std::cout, "U", r.u);
    print_grid(std::cout, "V", r.v);
    std::cout << (report.ok ? "UV - qVU = I: yes, det U and det V are units\n" : "invalid: " + report.failure + "\n");
  }
  return report.ok ? kOk : kFail;
}

// ------------------------------------------------------------------ switch

int cmd_switch(const std::string& rep_arg, const std::string& format) {
  const MatrixRep r = load_valid_rep(rep_arg);
  const LinearSwitch s = weyl_switch(r);
  const SwitchReport rep = check_switch(s);
  std::optional<SwitchInverse> inv;
  std::string inv_error;
  try {
    inv = switch_inverse(s);
  } catch (const DomainError& e) {
    inv_error = e.what();
  }
  const bool ok = rep.ok() && inv.has_value();
  if (format == "json") {
    ojson j;
    j["schema"] = 1;
    j["rep"] = r.name;
    j["k"] = s.k;
    j["q"] = s.hecke_q ? s.hecke_q->to_string() : "";
    j["A"] = grid_json(s.a);
    j["B"] = grid_json(s.b);
    j["C"] = grid_json(s.c);
    j["D"] = grid_json(s.d);
    j["yang_baxter"] = rep.yang_baxter;
    j["hecke"] = rep.hecke ? ojson(*rep.hecke) : ojson(nullptr);
    j["involution"] = rep.involution;
    j["inverse_hecke"] = inv && inv->via_hecke;
    j["inverse_factorization"] = inv && inv->via_factorization;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << s.name << ", blocks " << s.k << "x" << s.k << "\n";
    print_grid(std::cout, "A", s.a);
    print_grid(std::cout, "B", s.b);
    print_grid(std::cout, "C", s.c);
    print_grid(std::cout, "D", s.d);
    std::cout << "Yang-Baxter: " << (rep.yang_baxter ? "yes" : "no") << "\n";
    if (rep.hecke) std::cout << "S^2 = (1 - q)S + q: " << (*rep.hecke ? "yes" : "no") << "\n";
    std::cout << "S^2 = I: " << (rep.involution ? "yes" : "no") << "\n";
    if (inv)
      std::cout << "inverse: " << (inv->via_hecke ? "Hecke" : "") << (inv->via_hecke && inv->via_factorization ? " and " : "")
                << (inv->via_factorization ? "factorization" : "") << "\n";
    else
      std::cout << "inverse: " << inv_error << "\n";
  }
  return ok ? kOk : kFail;
}

// ------------------------------------------------------------------ invariant

struct InvariantOptions {
  std::string braid;
  std::string rep;
  std::string burau;
  std::string q;
  std::string delta = "0";
  std::string flavor = "virtual";
  std::string format = "text";
  bool serial = false;
};

std::vector<std::size_t> parse_levels(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4)
      throw ParseError("--delta expects comma-separated levels such as 0,1");
    out.push_back(static_cast<std::size_t>(std::stoul(item)));
  }
  if (out.empty()) throw ParseError("--delta expects at least one level");
  return out;
}

Flavor parse_flavor(const std::string& f) {
  if (f == "classical") return Flavor::classical;
  if (f == "virtual") return Flavor::virtual_;
  if (f == "flat") return Flavor::flat;
  throw InvalidArgument("unknown flavor \"" + f + "\"");
}

int cmd_invariant(const InvariantOptions& o) {
  if (o.rep.empty() == o.burau.empty()) throw InvalidArgument("give exactly one of --rep and --burau");
  const Flavor flavor = parse_flavor(o.flavor);
  const std::vector<std::size_t> levels = parse_levels(o.delta);
  LinearSwitch s;
  std::string rep_name, q_text;
  if (!o.rep.empty()) {
    const MatrixRep r = load_valid_rep(o.rep);
    if (!o.q.empty() && !(parse_rational(o.q, r.field, r.var) == r.q))
      throw InvalidArgument("--q " + o.q + " does not match the representation's q = " + format_q(r));
    s = weyl_switch(r);
    rep_name = r.name;
    q_text = format_q(r);
  } else {
    const RationalFunction t = parse_rational(o.burau, Field::rationals());
    s = burau_switch(to_laurent(t));
    rep_name = "burau(" + o.burau + ")";
    q_text = s.hecke_q->to_string();
    if (!o.q.empty()) throw InvalidArgument("--q is fixed by --burau");
  }
  const BraidWord w = parse_braid(o.braid, flavor);
  const InvariantResult res =
      compute_invariants(w, s, levels, o.braid, rep_name, q_text, o.serial ? Exec::serial : Exec::parallel);
  std::cout << (o.format == "json" ? to_json(res) + "\n" : to_text(res));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Weyl algebra representations and switch invariants of virtual and flat links"};
  app.require_subcommand(1, 1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check the algebra identities in the skew Laurent embedding");
  verify->add_option("--mode", vo.mode, "symbolic, finite or classical")
      ->check(CLI::IsMember({"symbolic", "finite", "classical"}));
  verify->add_option("--p", vo.p, "prime for finite/classical modes (0 = Q for classical)");
  verify->add_option("--q", vo.q, "value of q mod p for a single finite mode");
  verify->add_option("--trials", vo.trials, "number of random finite (p, q) modes");
  verify->add_option("--seed", vo.seed, "seed for random finite modes");
  verify->add_option("--lhs", vo.lhs, "custom identity, left side");
  verify->add_option("--rhs", vo.rhs, "custom identity, right side");
  verify->add_flag("--corrupt-c", vo.corrupt_c, "swap the last two letters of the C word (negative control)");

  std::string rep_arg, format = "text";
  auto* rep = app.add_subcommand("rep", "build and validate a representation");
  rep->add_option("--rep", rep_arg, "built-in name (kishino3, flat2), JSON file or inline JSON")->required();
  rep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sw = app.add_subcommand("switch", "build the Weyl switch of a representation and check its axioms");
  sw->add_option("--rep", rep_arg, "built-in name, JSON file or inline JSON")->required();
  sw->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  InvariantOptions io;
  auto* inv = app.add_subcommand("invariant", "compute Delta_0, Delta_r and the Hom dimension of a braid closure");
  inv->add_option("--braid", io.braid, "braid word or built-in (kishino, l(n), whorl(n))")->required();
  inv->add_option("--rep", io.rep, "representation for the Weyl switch");
  inv->add_option("--burau", io.burau, "use the Burau switch with this parameter instead");
  inv->add_option("--q", io.q, "expected value of q (checked against the representation)");
  inv->add_option("--delta", io.delta, "comma-separated levels, 0 for Delta_0");
  inv->add_option("--flavor", io.flavor)->check(CLI::IsMember({"classical", "virtual", "flat"}));
  inv->add_option("--format", io.format)->check(CLI::IsMember({"text", "json"}));
  inv->add_flag("--serial", io.serial, "use the serial kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*rep) return cmd_rep(rep_arg, format);
    if (*sw) return cmd_switch(rep_arg, format);
    return cmd_invariant(io);
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const RingMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    // Internal consistency checks (e.g. the two forms of C disagreeing).
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
