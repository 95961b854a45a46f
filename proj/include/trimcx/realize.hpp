#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/ideal.hpp"
#include "trimcx/tor_algebra.hpp"

namespace trimcx {

/// Ideal of class G(r) and type N (r + N even) or N + 1 (r + N odd), built by
/// keeping the first r submaximal Pfaffians of V_m^0 and multiplying the rest
/// by R_+.
struct Realization {
    int r = 0;
    int n = 0;
    int m = 0;
    bool even = false;
    int s = 0;            ///< 2m, degree of the Pfaffians
    int ell = 0;          ///< number of trimmed Pfaffians
    Ideal ideal;
    BettiTable cone_betti;     ///< minimalized trimming complex
    BettiTable formula_betti;  ///< rank formula
    BettiTable expected_betti; ///< closed form in (r, ell, s)
    int expected_mu = 0;
    int expected_type = 0;
    ClassReport report;

    bool matches() const;
};

/// Requires r >= 2, N >= 1, r + N >= 5.
Realization realize(int r, int n);

} // namespace trimcx
