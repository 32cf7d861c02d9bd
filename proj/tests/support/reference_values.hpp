#ifndef TORUSGF_TEST_REFERENCE_VALUES_HPP
#define TORUSGF_TEST_REFERENCE_VALUES_HPP

// Frozen reference values, computed with mpmath at 60 significant digits
// (see support/make_reference.py for the generator). Theta-based formulas
// were cross-checked there against the Legendre relation, the Weierstrass
// differential equation and independent Eisenstein q-series before freezing.

#include <complex>

namespace torusgf::refval {

using cplx = std::complex<double>;

// ---- square torus, tau = i --------------------------------------------------
inline constexpr double eta1_tau_i = 1.5707963267948966;  // = pi/2 exactly
inline const cplx theta1_03_01_tau_i{0.77365122177117316, 0.17293153659159264};
inline const cplx sigma_02_03_tau_i{0.19905799361147395, 0.30469068530876180};
inline const cplx zeta_02_03_tau_i{1.6806382500007898, -2.3378955219576281};
inline const cplx wp_02_03_tau_i{-3.3721036737358201, -5.9914186004556424};
inline const cplx wpp_02_03_tau_i{45.838888178322270, 12.822790453615708};
inline constexpr double e1_tau_i = 6.8751858180203728;
inline constexpr double g2_tau_i = 189.07272012923385;
inline constexpr double trivial_multiplier_tau_i = 2.1884396152264766;

// ---- generic torus, tau = 0.3 + 0.8i ---------------------------------------
inline const cplx tau_generic{0.3, 0.8};
inline const cplx eta1_generic{1.7290689763933786, -0.24333363444659617};
inline const cplx g2_generic{57.106531862970157, 187.27518161185508};
inline const cplx g3_generic{732.87981539328002, -770.46187462811255};
inline const cplx A_generic{0.46885286420048437, 0.48666726889319234};
inline const cplx e1_generic{6.2541963486738402, 0.98132502597008821};
inline const cplx e2_generic{-6.7267707848018700, -5.7151232323001494};
inline const cplx e3_generic{0.47257443612802980, 4.7337982063300612};

// ---- five-critical-point torus, tau = 0.5 + 0.9i ---------------------------
inline const cplx tau_five{0.5, 0.9};
inline const cplx nontrivial_a_tau_five{0.5, 0.32010702946359603};
inline constexpr double nontrivial_multiplier_tau_five = 0.13894119798754571;
inline const cplx lambda1_tau_five{-0.24047160323136793, 0.97065617395622409};
inline const cplx lambda2_tau_five{-0.61625011025095649, -0.78755050734266178};
inline const cplx g_critical_point_tau_five{0.5, 0.30207486977764881};

// ---- hexagonal torus, tau = e^{i pi/3} --------------------------------------
inline const cplx tau_hex{0.5, 0.86602540378443865};
// all three trivial multipliers coincide there
inline constexpr double trivial_multiplier_tau_hex = 1.6259637327569133;

} // namespace torusgf::refval

#endif
