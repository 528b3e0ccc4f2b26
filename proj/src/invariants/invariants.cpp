#include "qweyl/invariants.hpp"

#include <json.hpp>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

LMatrix minus_identity(LMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= m.one();
  return m;
}

std::string poly_string(const Polynomial& p) { return p.to_string(); }

}  // namespace

PresentationMatrix presentation(const BraidWord& w, const LinearSwitch& s, std::string rep_name, Exec exec) {
  PresentationMatrix out;
  out.p = minus_identity(represent(w, s, exec));
  out.braid = w.to_string();
  out.switch_name = s.name;
  out.rep = std::move(rep_name);
  out.provenance = "braid-closure";
  out.det_b = det_exact(s.b, Exec::serial);
  return out;
}

Delta0 delta0(const PresentationMatrix& p, Exec exec) {
  Delta0 d;
  d.raw = det_exact(p.p, exec);
  LaurentCanonical c = d.raw.canonical();
  d.canonical = std::move(c.poly);
  d.unit = std::move(c.unit);
  return d;
}

DeltaR delta_r(const PresentationMatrix& p, std::size_t r, Exec exec) {
  if (r == 0) throw InvalidArgument("delta_r needs r >= 1; use delta0");
  if (r >= p.p.rows())
    throw InvalidArgument("delta_r: r = " + std::to_string(r) + " must be below the size " +
                          std::to_string(p.p.rows()));
  const MinorsGcd g = minors_gcd(p.p, r, exec);
  return DeltaR{r, g.gcd, g.minors};
}

std::size_t hom_dimension(const PresentationMatrix& p) { return p.p.rows() - rank_over_fractions(p.p); }

LMatrix burau_parameter(const LinearSwitch& s) {
  const LMatrix id = LMatrix::identity(s.k, s.a.one());
  return mat_mul(id - s.a, id - s.d, Exec::serial);
}

AlexanderCheck alexander_crosscheck(const BraidWord& w, const LinearSwitch& s) {
  for (const Letter& l : w.letters)
    if (l.is_virtual) throw InvalidArgument("alexander_crosscheck needs a classical braid word");
  if (s.k != 1) throw InvalidArgument("alexander_crosscheck needs a switch with 1 x 1 blocks");
  if (w.strands < 2) throw InvalidArgument("alexander_crosscheck needs at least two strands");
  AlexanderCheck out;
  out.t = burau_parameter(s)(0, 0);
  out.delta1_switch = delta_r(presentation(w, s), 1).canonical;
  out.delta1_burau = delta_r(presentation(w, burau_switch(out.t)), 1).canonical;
  out.agree = out.delta1_switch == out.delta1_burau;
  return out;
}

PresentationMatrix diagram_ingest(const std::vector<Crossing>& crossings, std::size_t arcs, const LinearSwitch& s) {
  const std::size_t k = s.k;
  const LaurentPolynomial zero = s.a.zero();
  std::vector<int> as_in(arcs, -1), as_out(arcs, -1);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    for (int slot = 0; slot < 2; ++slot) {
      const std::size_t i = crossings[c].in[slot], o = crossings[c].out[slot];
      if (i >= arcs || o >= arcs) throw InvalidArgument("crossing " + std::to_string(c) + " names an unknown arc");
      if (as_in[i] >= 0) throw InvalidArgument("arc " + std::to_string(i) + " enters two crossings");
      if (as_out[o] >= 0) throw InvalidArgument("arc " + std::to_string(o) + " leaves two crossings");
      as_in[i] = static_cast<int>(c);
      as_out[o] = static_cast<int>(c);
    }
  }
  for (std::size_t a = 0; a < arcs; ++a)
    if ((as_in[a] < 0) != (as_out[a] < 0)) throw InvalidArgument("arc " + std::to_string(a) + " has a free end");

  const LMatrix sm = s.matrix();
  std::optional<LMatrix> s_inv;
  const LMatrix t = twist(k, zero);
  LMatrix p(arcs * k, arcs * k, zero);
  for (const Crossing& c : crossings) {
    const LMatrix* g = &t;
    if (c.kind == Crossing::Kind::positive) g = &sm;
    if (c.kind == Crossing::Kind::negative) {
      if (!s_inv) s_inv = switch_inverse(s).inverse;
      g = &*s_inv;
    }
    for (int os = 0; os < 2; ++os) {
      const std::size_t row0 = c.out[os] * k;
      for (std::size_t i = 0; i < k; ++i) {
        p(row0 + i, row0 + i) += zero.one_like();
        for (int is = 0; is < 2; ++is) {
          const std::size_t col0 = c.in[is] * k;
          for (std::size_t j = 0; j < k; ++j) p(row0 + i, col0 + j) -= (*g)(os * k + i, is * k + j);
        }
      }
    }
  }
  PresentationMatrix out;
  out.p = std::move(p);
  out.braid = std::to_string(crossings.size()) + " crossings, " + std::to_string(arcs) + " arcs";
  out.switch_name = s.name;
  out.provenance = "diagram-convention";
  out.det_b = det_exact(s.b, Exec::serial);
  return out;
}

Polynomial unknot_delta(std::size_t r, std::size_t k, const LaurentPolynomial& zero) {
  const Polynomial z = zero.body().zero_like();
  return r < k ? z : z.one_like();
}

InvariantResult compute_invariants(const BraidWord& w, const LinearSwitch& s, const std::vector<std::size_t>& levels,
                                   const std::string& braid_text, const std::string& rep_name, const std::string& q_text,
                                   Exec exec) {
  const PresentationMatrix p = presentation(w, s, rep_name, exec);
  InvariantResult out;
  out.braid = braid_text;
  out.rep = rep_name;
  out.q = q_text;
  out.size = p.p.rows();
  out.det_b = p.det_b.to_string();
  const LaurentPolynomial zero = s.a.zero();
  for (std::size_t r : levels) {
    Polynomial value;
    if (r == 0) {
      if (!out.d0) out.d0 = delta0(p, exec);
      value = out.d0->canonical;
    } else {
      auto it = out.deltas.find(r);
      if (it == out.deltas.end()) it = out.deltas.emplace(r, delta_r(p, r, exec)).first;
      value = it->second.canonical;
    }
    if (!(value == unknot_delta(r, s.k, zero))) out.nontrivial = true;
  }
  out.hom_dim = hom_dimension(p);
  return out;
}

std::string to_json(const InvariantResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["braid"] = r.braid;
  j["rep"] = r.rep;
  j["q"] = r.q;
  j["size"] = r.size;
  j["det_B"] = r.det_b;
  if (r.d0) {
    j["delta0_raw"] = r.d0->raw.to_string();
    j["delta0_canonical"] = poly_string(r.d0->canonical);
    j["unit"] = r.d0->unit ? nlohmann::ordered_json(r.d0->unit->to_string()) : nlohmann::ordered_json(nullptr);
  }
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (const auto& [level, v] : r.deltas) d[std::to_string(level)] = poly_string(v.canonical);
  j["delta"] = d;
  j["hom_dim"] = r.hom_dim;
  j["nontrivial"] = r.nontrivial;
  return j.dump(2);
}

std::string to_text(const InvariantResult& r) {
  std::ostringstream os;
  os << "braid: " << r.braid << "\n";
  os << "rep: " << r.rep << " (q = " << r.q << ")\n";
  os << "presentation: " << r.size << "x" << r.size << ", det B = " << r.det_b << "\n";
  if (r.d0) {
    os << "delta0 raw: " << r.d0->raw.to_string() << "\n";
    os << "delta0 canonical: " << poly_string(r.d0->canonical) << "\n";
  }
  for (const auto& [level, v] : r.deltas) os << "delta" << level << ": " << poly_string(v.canonical) << "\n";
  os << "hom dimension: " << r.hom_dim << "\n";
  os << "nontrivial: " << (r.nontrivial ? "yes" : "not detected") << "\n";
  return os.str();
}

}  // namespace qweyl
