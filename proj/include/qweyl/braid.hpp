#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/laurent.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/rep.hpp"

namespace qweyl {

using LMatrix = Matrix<LaurentPolynomial>;

// S = [[A, B], [C, D]] with k x k Laurent blocks. `hecke_q`, when present, is
// the scalar for which S^2 = (1 - q)S + q is claimed; check_switch tests it.
struct LinearSwitch {
  std::string name;
  std::size_t k = 0;
  LMatrix a, b, c, d;
  std::optional<LaurentPolynomial> hecke_q;

  LMatrix matrix() const;
};

// Weyl switch of a validated representation: A = v^-1 u^-1, B = u,
// C = q u v u^-1 v^-1 u^-1 v^-1 u^-1 v u (cross-checked against
// A^-1 B^-1 A (1 - A)), D = (1 - q) - u^-1 v^-1. Throws SingularMatrix when C
// is not invertible and DomainError when an entry is not Laurent.
LinearSwitch weyl_switch(const MatrixRep& rep);

// [[0, 1], [t, 1 - t]]; t must be a unit.
LinearSwitch burau_switch(const LaurentPolynomial& t);
// [[1 - BC, B], [C, 0]] for invertible blocks B, C.
LinearSwitch sawollek_switch(const LMatrix& b, const LMatrix& c);
// Checked with check_switch; throws InvalidArgument on a failed axiom.
LinearSwitch custom_switch(std::string name, const LMatrix& a, const LMatrix& b, const LMatrix& c, const LMatrix& d,
                           std::optional<LaurentPolynomial> q);

struct SwitchReport {
  bool invertible = false;
  bool yang_baxter = false;
  std::optional<bool> hecke;  // only when hecke_q is declared
  bool involution = false;     // S^2 = I, needed for flat braids
  std::vector<std::string> failures;
  bool ok() const { return invertible && yang_baxter && hecke.value_or(true); }
};
SwitchReport check_switch(const LinearSwitch& s);

// Inverse of S by S^-1 = q^-1 (S - (1 - q)I) and by the elementary
// factorization diag(A,1) [[1,0],[C,1]] diag(1, 1 - A^-1) [[1, A^-1 B],[0,1]].
// Both results are verified; when both apply they must agree.
struct SwitchInverse {
  LMatrix inverse;
  bool via_hecke = false;
  bool via_factorization = false;
};
SwitchInverse switch_inverse(const LinearSwitch& s);

// T(a, b) = (b, a) on k-blocks.
LMatrix twist(std::size_t k, const LaurentPolynomial& zero);

enum class Flavor { classical, virtual_, flat };

struct Letter {
  bool is_virtual = false;
  std::size_t index = 1;  // acts on strands index, index + 1 (1-based)
  int exponent = 1;
};

struct BraidWord {
  std::size_t strands = 1;
  std::vector<Letter> letters;
  Flavor flavor = Flavor::virtual_;

  std::string to_string() const;
};

// Tokens s<i> and t<i>, each with an optional ^e; s<i>^e expands to |e|
// letters. Virtual exponents, and real ones in the flat flavor, normalize to
// +1. Built-in names kishino, l(n) and whorl(n) are expanded first.
BraidWord parse_braid(std::string_view text, Flavor flavor, std::optional<std::size_t> strands = std::nullopt);

// Word text of a built-in name, or nullopt.
std::optional<std::string> builtin_braid(std::string_view name);

// r_S(beta): one k-block per strand, letters multiplied in written order,
// sigma_i -> S on blocks i, i+1, sigma_i^-1 -> S^-1, tau_i -> T.
// Throws InvalidArgument for a flat word when S^2 != I.
LMatrix represent(const BraidWord& w, const LinearSwitch& s, Exec exec = Exec::parallel);

// Dense reference: explicit nk x nk operator per letter, multiplied serially.
LMatrix represent_dense(const BraidWord& w, const LinearSwitch& s);

}  // namespace qweyl
