#pragma once

#include "ocreason/game.hpp"

// Small games used by the tests, the CLI `gen` command and the Python module.
namespace ocreason::fixtures {

/// Chicken: (C,C)=(3,3), (C,D)=(1,4), (D,C)=(4,1), (D,D)=(0,0). Id "Gamma_b".
NormalFormGame chicken();

/// Chicken with every payoff mapped by x -> 2x+4 and actions renamed E, F.
/// Id "Gamma_c".
NormalFormGame chicken_scaled();

/// Chicken plus a row action C' strictly dominated by C:
/// (C',C)=(2,3), (C',D)=(0,4). Row actions are C, D, C'. Id "Gamma_a".
NormalFormGame chicken_with_dominated_row();

/// (C,C)=(3,3), (C,D)=(0,4), (D,C)=(4,0), (D,D)=(1,1). Id "PD".
NormalFormGame prisoners_dilemma();

/// Stag-hunt style coordination game with actions aH, aL:
/// (aH,aH)=(8,8), (aH,aL)=(0,4), (aL,aH)=(4,0), (aL,aL)=(7,7). Id "Risky".
NormalFormGame risky_coordination();

/// The less risky variant: (9,8), (1,3), (4,1), (7,7). Id "Safer".
NormalFormGame safer_coordination();

/// Matching pennies (no pure equilibrium). Id "Pennies".
NormalFormGame matching_pennies();

/// Symmetric coordination: (a,a)=(1,1), (b,b)=(1,1), off-diagonal (0,0).
/// Id "Coord".
NormalFormGame symmetric_coordination();

}  // namespace ocreason::fixtures
