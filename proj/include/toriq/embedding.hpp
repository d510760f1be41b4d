#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriq/class_lattice.hpp"
#include "toriq/quasimap.hpp"

namespace toriq {

// Target Cox coordinate y_tau = coeff * prod_rho x_rho^exponents[rho].
struct Monomial {
  Rational coeff{1};
  IntVec exponents;
};

struct EmbeddingSpec {
  FanPtr source, target;
  std::vector<Monomial> monomials;  // one per target ray
};

// Empty iff sizes match, exponents are non-negative, coefficients nonzero,
// the exponents descend to a map of character lattices, and the monomials
// have no common zero on the source.
std::vector<std::string> validate_embedding(const EmbeddingSpec& e);
void require_valid(const EmbeddingSpec& e);  // throws std::invalid_argument

// iota^*[D_tau] = sum_rho a^tau_rho [D_rho]; d is a target class.
DivisorClass pullback_pic(const EmbeddingSpec& e, const DivisorClass& d);
CurveClass pushforward_curves(const EmbeddingSpec& e, const CurveClass& beta);

// iota^* surjective on Picard lattices (all Smith invariants equal 1).
bool epic_check(const EmbeddingSpec& e);

// Complete linear systems |D| for each D, into a product of P^{h0(D)-1}.
// Monomials of a factor are sorted by decreasing exponent vector.
EmbeddingSpec embedding_from_divisors(const FanPtr& fan, const std::vector<DivisorClass>& divisors);
// Every chart's dual basis is a difference of a lattice point and the chart
// vertex in one of the polytopes: the product map is then a closed embedding.
bool closed_embedding_criterion(const Fan& fan, const std::vector<DivisorClass>& divisors);
// Nef Hilbert basis, plus an ample class when the criterion fails.  Factors
// with more sections come first.
EmbeddingSpec build_epic_embedding(const FanPtr& fan);

Component apply_ibar(const EmbeddingSpec& e, const Component& c);
Quasimap apply_ibar(const EmbeddingSpec& e, const Quasimap& q);

// Source component f with apply_ibar(f) defining the same morphism as the
// regular target component r, found through monomial ratios
// x^{m_j} = y_tau / y_tau' on some chart; nullopt if r does not factor.
std::optional<Component> factor_through(const EmbeddingSpec& e, const Component& r);

struct FibreOptions {
  // caller-supplied factoring data per component (checked, not trusted)
  std::optional<std::vector<Component>> factoring;
};

// Source quasimaps of class beta mapping to q, sorted by their basepoint
// degree tuples.  std::invalid_argument if iota_* beta differs from deg q.
std::vector<Quasimap> fibre_enumeration(const EmbeddingSpec& e, const Quasimap& q, const CurveClass& beta,
                                        const FibreOptions& opt = {});

namespace catalog {
// P1xP1 -> P3, [xz : xw : yz : yw]
EmbeddingSpec segre_embedding();
// Bl0P2 -> P2xP1, [x0 : x1x3 : x2x3], [x1 : x2]
EmbeddingSpec blowup_embedding();
}  // namespace catalog

}  // namespace toriq
