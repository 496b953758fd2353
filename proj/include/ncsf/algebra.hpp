#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"
#include "ncsf/rational.hpp"

namespace ncsf {

/// Generic product: both factors go to Psi and words concatenate.
Element multiply(const Element& a, const Element& b);

/// ω(Ψ^I) = (-1)^{|I|-ℓ(I)} Ψ^{reverse(I)}, extended linearly. Result in Psi.
Element omega(const Element& a);

/// Ψ_r · M^I, written in M.
Element pieri_left_psi(int r, const Composition& I);
/// F^I · Ψ_r, written in F.
Element pieri_right_f(const Composition& I, int r);

/// Closed-form products of two basis elements, each in its own basis.
Element product_mm(const Composition& I, const Composition& J);
Element product_ff(const Composition& I, const Composition& J);
Element product_ll(const Composition& I, const Composition& J);

/// ⟨a, b⟩ with ⟨M^I, S^J⟩ = δ_{IJ}; pairs of different degree give 0.
Rational pair(const Element& a, const Element& b);

// Closed-form pairings of basis elements.
Rational pair_psi_psi(const Composition& I, const Composition& J);
Rational pair_m_psi(const Composition& I, const Composition& J);
Rational pair_m_r(const Composition& I, const Composition& K);
Rational pair_l_s(const Composition& J, const Composition& K);
Rational pair_l_r(const Composition& I, const Composition& J);

} // namespace ncsf
