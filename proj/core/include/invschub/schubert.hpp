#pragma once

#include "invschub/involution.hpp"
#include "invschub/partition.hpp"
#include "invschub/permutation.hpp"
#include "invschub/polynomial.hpp"
#include "invschub/symfunc.hpp"

namespace invschub {

// d_{w^{-1} w_n} x^{delta_n} with n = max(supp w); cached.
Polynomial schubert_poly(const Permutation& w);
// Same formula for an explicit n >= max(supp w).
Polynomial schubert_poly_at(const Permutation& w, int n);

enum class InvMethod { atom_sum, recursion };
Polynomial inv_schubert_poly(const Involution& y, InvMethod method = InvMethod::recursion);
// Product over the involution diagram; PreconditionError unless y is dominant.
Polynomial dominant_inv_schubert(const Involution& y);

// Routes to rho_n of a stable limit.  pi: pi_{w_n} applied to the Schubert polynomial;
// shift: rho_n of the Schubert polynomial of the shifted element; words: sum of f_a over words.
enum class StableRoute { pi, shift, words };
TruncatedSymFun stable_F(const Permutation& w, int n, StableRoute route = StableRoute::pi);
TruncatedSymFun stable_Fhat(const Involution& y, int n, StableRoute route = StableRoute::pi);

// tableau: generating function of marked shifted tableaux; isobaric: pi_{w_n}(x^lambda G_{r,n}).
enum class PRoute { tableau, isobaric };
TruncatedSymFun stable_P(const StrictPartition& lambda, int n, PRoute route = PRoute::tableau);

// Monomial coefficients of F_w and F-hat_y from words split into decreasing runs.
MonomialVector stanley_monomial_vector(const Permutation& w);
MonomialVector inv_stanley_monomial_vector(const Involution& y);

}  // namespace invschub
