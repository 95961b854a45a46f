#include "trimcx/realize.hpp"

#include "trimcx/errors.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/resolution.hpp"
#include "trimcx/trimming.hpp"

namespace trimcx {

bool Realization::matches() const {
    return cone_betti == expected_betti && formula_betti == expected_betti &&
           report.verdict == TorVerdict::G && report.delta_rank == r && report.mu == expected_mu &&
           report.type == expected_type;
}

Realization realize(int r, int n) {
    if (r < 2 || n < 1 || r + n < 5) throw PreconditionError("realize: need r >= 2, N >= 1 and r + N >= 5");
    Realization out;
    out.r = r;
    out.n = n;
    out.even = (r + n) % 2 == 0;
    out.m = out.even ? (r + n - 2) / 2 : (r + n - 1) / 2;
    out.ell = out.even ? n - 1 : n;
    out.s = 2 * out.m;
    out.expected_mu = r + 3 * out.ell;
    out.expected_type = out.ell + 1;

    const ChainComplex f = buchsbaum_eisenbud(build_V(out.m, 0));
    std::vector<int> cut;
    for (int i = r; i < f.module(1).rank(); ++i) cut.push_back(i);
    const TrimmingData t = prepare_trimming(f, cut);
    out.ideal = trimmed_ideal(t);
    out.cone_betti = betti_table(trimming_complex(t));
    out.formula_betti = trimmed_betti(t);

    const int s = out.s, l = out.ell;
    out.expected_betti.add(0, 0);
    out.expected_betti.add(1, s, r);
    out.expected_betti.add(1, s + 1, 3 * l);
    out.expected_betti.add(2, s + 2, r + 4 * l);
    out.expected_betti.add(3, s + 3, l);
    out.expected_betti.add(3, 2 * s + 2, 1);

    out.report = classify_G(out.ideal, artinian_profile(out.ideal, 2 * s), 2 * s);
    return out;
}

} // namespace trimcx
