#include "gradex/principal.hpp"

#include <sstream>

#include "gradex/errors.hpp"

namespace gradex {

std::string to_string(const PrincipalEntry& e) {
  if (!e) return "0";
  std::ostringstream os;
  os << e->coeff.get_str();
  if (e->exponent > 0) os << "X";
  if (e->exponent > 1) os << "^" << e->exponent;
  return os.str();
}

void PrincipalPresentation::validate() const {
  if (!group.contains(var_degree)) throw ValidationError("principal-shape", "variable degree outside the group");
  if (group.element_order(var_degree))
    throw ValidationError("variable-order", "deg X = " + var_degree.to_string() + " has finite order");
  for (const auto& d : ambient)
    if (!group.contains(d)) throw ValidationError("principal-shape", "ambient degree outside the group");
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != ambient.size())
      throw ValidationError("principal-shape", "column " + std::to_string(j) + " has the wrong length");
    std::optional<GroupElement> deg;
    for (std::size_t r = 0; r < ambient.size(); ++r) {
      const auto& e = gens[j][r];
      if (!e) continue;
      if (field.reduce(e->coeff) == 0)
        throw ValidationError("principal-shape", "zero coefficient in column " + std::to_string(j));
      GroupElement d = group.add(ambient[r], group.scale(Integer(static_cast<unsigned long>(e->exponent)), var_degree));
      if (deg && !(*deg == d))
        throw ValidationError("column-homogeneous", "column " + std::to_string(j) + " mixes degrees " +
                                                        deg->to_string() + " and " + d.to_string());
      deg = d;
    }
  }
}

std::optional<GroupElement> PrincipalPresentation::column_degree(std::size_t j) const {
  for (std::size_t r = 0; r < ambient.size(); ++r)
    if (gens[j][r])
      return group.add(ambient[r], group.scale(Integer(static_cast<unsigned long>(gens[j][r]->exponent)), var_degree));
  return std::nullopt;
}

namespace {

bool zero_column(const std::vector<PrincipalEntry>& c) {
  for (const auto& e : c)
    if (e) return false;
  return true;
}

}  // namespace

PrincipalDecomposition decompose(const PrincipalPresentation& P) {
  P.validate();
  const Field& f = P.field;
  PrincipalDecomposition out;
  out.generators = P.gens.size();
  std::vector<std::vector<PrincipalEntry>> cols;
  for (const auto& c : P.gens) {
    std::vector<PrincipalEntry> col;
    for (const auto& e : c) {
      if (e) col.push_back(Monomial{f.reduce(e->coeff), e->exponent});
      else col.push_back(std::nullopt);
    }
    if (!zero_column(col)) cols.push_back(std::move(col));
  }
  for (std::size_t r = 0; r < P.ambient.size(); ++r) {
    std::optional<std::size_t> piv;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[j][r] && (!piv || cols[j][r]->exponent < cols[*piv][r]->exponent)) piv = j;
    if (!piv) continue;
    const auto pc = cols[*piv];
    const Monomial lead = *pc[r];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == *piv || !cols[j][r]) continue;
      // col_j -= (c_j / c_p) X^(k_j - k_p) col_p; exponents line up because deg X has infinite order.
      const std::size_t shift = cols[j][r]->exponent - lead.exponent;
      const Rational factor = f.div(cols[j][r]->coeff, lead.coeff);
      for (std::size_t s = 0; s < P.ambient.size(); ++s) {
        if (!pc[s]) continue;
        const Rational term = f.mul(factor, pc[s]->coeff);
        const std::size_t k = pc[s]->exponent + shift;
        if (!cols[j][s]) {
          cols[j][s] = Monomial{f.neg(term), k};
          continue;
        }
        if (cols[j][s]->exponent != k) throw std::logic_error("inhomogeneous column during reduction");
        Rational c = f.sub(cols[j][s]->coeff, term);
        if (c == 0) cols[j][s].reset();
        else cols[j][s]->coeff = c;
      }
    }
    out.summands.push_back(PrincipalSummand{P.group.neg(P.ambient[r]), lead.exponent, r, pc});
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(*piv));
    std::erase_if(cols, zero_column);
  }
  out.rank = out.summands.size();
  out.free = true;
  return out;
}

CoarseFreeness coarse_freeness(const PrincipalPresentation& P, const GroupHom& psi) {
  P.validate();
  if (!(psi.source() == P.group)) throw ValidationError("group-mismatch", "psi must start at the grading group");
  if (!hom_props(psi).epi) throw ValidationError("psi-epimorphism", "psi must be an epimorphism");
  const Field& f = P.field;
  const std::size_t rows = P.ambient.size();
  std::vector<std::vector<Poly>> cols;
  for (const auto& c : P.gens) {
    std::vector<Poly> col;
    for (const auto& e : c) col.push_back(e ? Poly::monomial(f, e->coeff, e->exponent) : Poly(f));
    cols.push_back(std::move(col));
  }
  std::size_t pivots = 0;
  for (std::size_t r = 0; r < rows && pivots < cols.size(); ++r) {
    for (;;) {
      std::optional<std::size_t> best;
      std::size_t nonzero = 0;
      for (std::size_t j = pivots; j < cols.size(); ++j) {
        if (cols[j][r].is_zero()) continue;
        ++nonzero;
        if (!best || cols[j][r].degree() < cols[*best][r].degree()) best = j;
      }
      if (!best) break;
      if (nonzero == 1) {
        std::swap(cols[pivots], cols[*best]);
        ++pivots;
        break;
      }
      for (std::size_t j = pivots; j < cols.size(); ++j) {
        if (j == *best || cols[j][r].is_zero()) continue;
        Poly q = divmod(cols[j][r], cols[*best][r]).first;
        for (std::size_t s = 0; s < rows; ++s) cols[j][s] = cols[j][s] - q * cols[*best][s];
      }
    }
  }
  CoarseFreeness out;
  out.rank = pivots;
  out.free = true;
  out.basis.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(pivots));
  out.coarse_var_degree = psi(P.var_degree);
  const FGAbelianGroup& H = psi.target();
  for (const auto& s : decompose(P).summands) {
    std::optional<GroupElement> deg;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!s.column[r]) continue;
      GroupElement d = H.add(psi(P.ambient[r]), H.scale(Integer(static_cast<unsigned long>(s.column[r]->exponent)),
                                                         out.coarse_var_degree));
      if (deg && !(*deg == d)) out.fine_basis_homogeneous = false;
      deg = d;
    }
  }
  return out;
}

SuperfluousCounterexample principal_superfluous(const Field& f, const FGAbelianGroup& G,
                                                const GroupElement& var_degree, const GroupHom& psi) {
  if (G.element_order(var_degree)) throw ValidationError("variable-order", "deg X must have infinite order");
  if (!(psi.source() == G) || !hom_props(psi).epi)
    throw ValidationError("psi-epimorphism", "psi must be an epimorphism from the grading group");
  SuperfluousCounterexample out;
  const Poly X = Poly::monomial(f, 1, 1);
  // With deg X of infinite order every component is K X^k, so the graded ideals
  // are 0 and <X^k>; <X> + <X^k> = <gcd(X, X^k)>.
  bool ok = true;
  for (std::size_t k = 0; k <= 8; ++k) {
    bool whole = gcd(X, Poly::monomial(f, 1, k)).is_unit();
    if (whole != (k == 0)) ok = false;
  }
  out.graded_superfluous = ok;
  out.graded_certificate = "graded ideals are 0 and <X^k>; <X> + <X^k> = R only for k = 0";
  const GroupElement h0 = psi(var_degree);
  auto order = psi.target().element_order(h0);
  if (!order) {
    out.coarse_superfluous = ok;
    out.note = "deg X keeps infinite order after coarsening";
    return out;
  }
  // X^m + c is homogeneous of degree 0 when m = ord(deg X) and c != 0.
  const std::size_t m = order->get_ui();
  const long limit = f.is_finite() ? static_cast<long>(f.characteristic()) - 1 : 16;
  for (long c = 1; c <= limit; ++c) {
    Poly L = Poly::monomial(f, 1, m) + Poly::constant(f, Rational(c));
    if (L.is_unit()) continue;
    if (gcd(X, L).is_unit()) {
      out.witness = L;
      break;
    }
  }
  out.coarse_superfluous = !out.witness.has_value();
  out.note = out.witness ? "<X> + <" + out.witness->to_string() + "> = R after coarsening"
                         : "no witness among X^m + c";
  return out;
}

PrincipalSuiteReport principal_suite(const PrincipalPresentation& P, const GroupHom& psi) {
  PrincipalSuiteReport rep;
  rep.decomposition = decompose(P);
  rep.coarse = coarse_freeness(P, psi);
  rep.freeness_agrees = rep.decomposition.free == rep.coarse.free && rep.decomposition.rank == rep.coarse.rank &&
                        rep.coarse.fine_basis_homogeneous;
  rep.rank_bound = rep.decomposition.rank <= P.gens.size();
  if (psi(P.var_degree).is_zero()) rep.superfluous = principal_superfluous(P.field, P.group, P.var_degree, psi);
  return rep;
}

}  // namespace gradex
