#pragma once

/**
 * @file lpa_ideals.hpp
 * @brief Symbolic ideal calculus through pi-functions.
 *
 * A pi-function assigns an ideal of R to every nonempty member of its
 * carrier and must turn joins into intersections:
 *
 *     pi(H v K) = pi(H) ∩ pi(K)        and     H ⊆ K  implies  pi(K) ⊆ pi(H).
 *
 * On a Condition (K) graph (or a strongly effective groupoid) such
 * functions parameterize every ideal of the algebra; order, meet and join
 * of ideals are computed here without ever materializing an ideal.
 */

#include "idlat/graph.hpp"
#include "idlat/pi_function.hpp"
#include "idlat/ring_ideals.hpp"

#include <optional>
#include <vector>

namespace idlat {

// Empty iff the binary join law and order reversal hold on every pair.
ValidationReport validate_pi(const PiFunction& p);
// Throws ValidationError with the report.
void require_valid(const PiFunction& p);

bool pi_leq(const PiFunction& p1, const PiFunction& p2);
PiFunction pi_meet(const PiFunction& p1, const PiFunction& p2);
// Least valid function above both. Graph mode:
//   (p1 v p2)(H) = ⋂ { p1(T) + p2(T) : T = SH(w), w in H tail-stable }
// Groupoid mode:
//   (p1 v p2)(U) = ⋂ { p1(O) + p2(O) : O an orbit inside U }
// Throws HypothesisError without Condition (K) / strong effectiveness, and
// Error if the result fails its own validation or dominance check.
PiFunction pi_join(const PiFunction& p1, const PiFunction& p2);
// Pointwise sum; generally not a valid pi-function.
PiFunction pointwise_sum(const PiFunction& p1, const PiFunction& p2);

// pi evaluated at the saturated hereditary limit of the lasso.
RIdeal rho_eval(const PiFunction& p, const LassoPath& x);

struct Monomial {
    RingElement coeff;
    std::vector<int> mu;
    std::vector<int> nu;
    // Common source when both paths are empty.
    std::optional<int> vertex;
};

// Common source vertex s(mu) = s(nu); throws ValidationError otherwise.
int monomial_source(const Graph& g, const Monomial& m);
// r s_mu s_nu* lies in the ideal iff r ∈ pi(SH(s(nu))).
bool monomial_in_ideal(const PiFunction& p, const Monomial& m);

// pi_h(K) = R if K ⊆ h, else 0. h may be empty.
PiFunction basic_pi(const CarrierPtr& carrier, const RingSpec& ring, AtomSet h);

// Every valid pi-function over a finite ring, in lexicographic order of
// the value lists; BudgetError past `limit`.
std::vector<PiFunction> enumerate_pi_functions(const CarrierPtr& carrier, const RingSpec& ring,
                                               std::size_t limit = 200000);

// pi(H) = ⋂ rho(x) over lassos whose cycle is a simple cycle inside H.
PiFunction reconstruct_from_rho(const PiFunction& p);

} // namespace idlat
