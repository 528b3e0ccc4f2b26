#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/braid.hpp"

namespace qweyl {

// P = r_S(beta) - I together with where it came from.
struct PresentationMatrix {
  LMatrix p;
  std::string braid;
  std::string switch_name;
  std::string rep;
  std::string provenance;  // "braid-closure" or "diagram-convention"
  LaurentPolynomial det_b;  // Delta_0 is defined up to powers of this
};

PresentationMatrix presentation(const BraidWord& w, const LinearSwitch& s, std::string rep_name = {},
                                Exec exec = Exec::parallel);

struct Delta0 {
  LaurentPolynomial raw;
  Polynomial canonical;                  // monic, nonzero constant term; zero if raw is
  std::optional<LaurentPolynomial> unit;  // canonical = unit * raw
};
Delta0 delta0(const PresentationMatrix& p, Exec exec = Exec::parallel);

struct DeltaR {
  std::size_t r = 1;
  Polynomial canonical;
  std::size_t minors = 0;
};
// gcd of the codimension-r minors; requires 1 <= r < size.
DeltaR delta_r(const PresentationMatrix& p, std::size_t r, Exec exec = Exec::parallel);

// size(P) - rank(P) over the fraction field.
std::size_t hom_dimension(const PresentationMatrix& p);

// (I - A)(I - D).
LMatrix burau_parameter(const LinearSwitch& s);

struct AlexanderCheck {
  LaurentPolynomial t;
  Polynomial delta1_switch;
  Polynomial delta1_burau;
  bool agree = false;
};
// Classical words and k = 1 switches only: Delta_1 under S against Delta_1
// under b(t) with t = (1 - A)(1 - D).
AlexanderCheck alexander_crosscheck(const BraidWord& w, const LinearSwitch& s);

// A crossing with arcs numbered from 0. Real crossings impose
// (x_out0, x_out1) = G (x_in0, x_in1) with G = S, S^-1 or T.
struct Crossing {
  enum class Kind { positive, negative, virtual_ };
  Kind kind = Kind::positive;
  std::array<std::size_t, 2> in{};
  std::array<std::size_t, 2> out{};
};
// One block row per arc: the relation for the crossing it leaves, or zero
// for a closed loop. Each arc must be an output exactly when it is an input.
PresentationMatrix diagram_ingest(const std::vector<Crossing>& crossings, std::size_t arcs, const LinearSwitch& s);

// Canonical Delta_r of the one-strand unknot for a switch of block size k:
// 0 for r < k, 1 otherwise.
Polynomial unknot_delta(std::size_t r, std::size_t k, const LaurentPolynomial& zero);

struct InvariantResult {
  std::string braid;
  std::string rep;
  std::string q;
  std::size_t size = 0;
  std::string det_b;
  std::optional<Delta0> d0;
  std::map<std::size_t, DeltaR> deltas;
  std::size_t hom_dim = 0;
  // True when some requested level differs from the unknot's; false when
  // none does (which does not prove triviality).
  bool nontrivial = false;
};

// levels: 0 for Delta_0, r >= 1 for Delta_r.
InvariantResult compute_invariants(const BraidWord& w, const LinearSwitch& s, const std::vector<std::size_t>& levels,
                                   const std::string& braid_text, const std::string& rep_name, const std::string& q_text,
                                   Exec exec = Exec::parallel);

// {"schema": 1, "braid", "rep", "q", "size", "det_B", "delta0_raw",
//  "delta0_canonical", "unit", "delta": {"1": ...}, "hom_dim", "nontrivial"}
std::string to_json(const InvariantResult& r);
std::string to_text(const InvariantResult& r);

}  // namespace qweyl
